#include "homcfi/verify.hpp"

#include "homcfi/cfi.hpp"
#include "homcfi/counting.hpp"
#include "homcfi/expansion.hpp"
#include "homcfi/filters.hpp"
#include "homcfi/generate.hpp"
#include "homcfi/iso.hpp"
#include "homcfi/json_io.hpp"
#include "homcfi/reduction.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace homcfi {

namespace {

using nlohmann::ordered_json;

std::mt19937_64 seeded(const VerifyOptions& opts, std::uint64_t salt) {
    return std::mt19937_64(opts.seed * 0x9E3779B97F4A7C15ULL + salt);
}

ordered_json graph_payload(const ColoredGraph& g) {
    return ordered_json::parse(graph_to_json(g));
}

/// One named check; failures keep the first counterexample payload.
class Check {
  public:
    Check(VerifyReport& report, std::string suite, std::string name)
        : report_(report), start_(std::chrono::steady_clock::now()) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
    }
    ~Check() {
        result_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        report_.checks.push_back(result_);
    }

    void expect(bool ok, const std::function<ordered_json()>& payload) {
        ++result_.instances;
        if (ok) return;
        result_.passed = false;
        ++result_.failures;
        if (result_.detail.empty()) result_.detail = payload().dump();
    }

  private:
    VerifyReport& report_;
    CheckResult result_;
    std::chrono::steady_clock::time_point start_;
};

ColorfulGraph colorful_cycle(int n) {
    std::vector<int> colors(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        colors[v] = v;
        edges.push_back({v, (v + 1) % n});
    }
    return ColorfulGraph(ColoredGraph::make(n, colors, edges));
}

/// Cycles C3..C8, elementary walls r=2..3, and seeded random connected
/// colorful bases with maximum degree 4 on up to 8 vertices.
std::vector<ColorfulGraph> base_corpus(const VerifyOptions& opts) {
    std::vector<ColorfulGraph> out;
    for (int n = 3; n <= 8; ++n) out.push_back(colorful_cycle(n));
    out.push_back(make_colorful(elementary_wall(2, true)));
    out.push_back(make_colorful(elementary_wall(3, true)));
    auto rng = seeded(opts, 1);
    std::uniform_int_distribution<int> size(3, 8);
    int added = 0;
    while (added < opts.corpus_random) {
        auto g = random_connected_graph(rng, size(rng), 0.15);
        if (g.max_degree() > 4) continue;
        out.push_back(make_colorful(g));
        ++added;
    }
    return out;
}

/// All S-colored graphs with at most one vertex per color that miss at least
/// one edge-color class of S: every color subset, every subset of the induced
/// E(S) classes, minus the fully surjective case (S itself).
void for_each_nonsurjective(const ColorfulGraph& s,
                            const std::function<void(const ColoredGraph&)>& fn) {
    int n = s.n();
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> colors;
        std::vector<int> pos(n, -1);
        for (int c = 0; c < n; ++c) {
            if (mask >> c & 1) {
                pos[c] = static_cast<int>(colors.size());
                colors.push_back(c);
            }
        }
        std::vector<Edge> classes;
        for (const auto& [u, v] : s.g.edges) {
            if (pos[u] >= 0 && pos[v] >= 0) classes.push_back({pos[u], pos[v]});
        }
        std::size_t full = s.g.edges.size();
        for (std::uint64_t emask = 0; emask < (std::uint64_t(1) << classes.size()); ++emask) {
            if (mask == (1 << n) - 1 &&
                static_cast<std::size_t>(__builtin_popcountll(emask)) == full) {
                continue;  // surjectively colored: that is S itself
            }
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (emask >> i & 1) edges.push_back(classes[i]);
            }
            fn(ColoredGraph::make(n, colors, edges));
        }
    }
}

/// Random member of the same family, for bases too large to enumerate.
ColoredGraph random_nonsurjective(std::mt19937_64& rng, const ColorfulGraph& s) {
    int n = s.n();
    std::uniform_int_distribution<int> any_mask(1, (1 << n) - 1);
    std::bernoulli_distribution keep(0.5);
    while (true) {
        int mask = any_mask(rng);
        std::vector<int> colors;
        std::vector<int> pos(n, -1);
        for (int c = 0; c < n; ++c) {
            if (mask >> c & 1) {
                pos[c] = static_cast<int>(colors.size());
                colors.push_back(c);
            }
        }
        std::vector<Edge> classes;
        for (const auto& [u, v] : s.g.edges) {
            if (pos[u] >= 0 && pos[v] >= 0) classes.push_back({pos[u], pos[v]});
        }
        std::vector<Edge> edges;
        for (const auto& e : classes) {
            if (keep(rng)) edges.push_back(e);
        }
        if (mask == (1 << n) - 1 && edges.size() == s.g.edges.size()) continue;
        return ColoredGraph::make(n, colors, edges);
    }
}

Rational evaluate_quantum_brute(const QuantumGraph& q, const ColoredGraph& g) {
    Rational total = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        total += q.coefficients[i] * Rational(hom_count(q.constituents[i], g));
    }
    return total;
}

ColoredGraph uncolored_complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return ColoredGraph::make(1, std::vector<int>(n, 0), edges);
}

/// Random connected colorful pattern with bounded maximum degree.
ColorfulGraph random_base(std::mt19937_64& rng, int n, int max_deg, double extra) {
    while (true) {
        auto g = random_connected_graph(rng, n, extra);
        if (g.max_degree() <= max_deg) return make_colorful(g);
    }
}

}  // namespace

VerifyReport verify_cfi(const VerifyOptions& opts) {
    VerifyReport report;
    auto corpus = base_corpus(opts);

    {
        Check check(report, "cfi", "csp-solution-counts");
        for (const auto& s : corpus) {
            long cycle_rank = static_cast<long>(s.g.edges.size()) - s.n() + 1;
            auto gamma0 = cfi_csp(s, ChargeFunction::zero(s));
            Rational expect = pow2(cycle_rank);
            Rational got(hom_count(s.g, gamma0.realized));
            check.expect(got == expect, [&] {
                return ordered_json{{"base", graph_payload(s.g)},
                                    {"charge", "empty"},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(got)}};
            });
            for (const auto& e : s.g.edges) {
                auto charged = cfi_csp(s, ChargeFunction::indicator(s, {e}));
                Integer z = hom_count(s.g, charged.realized);
                check.expect(z == 0, [&] {
                    return ordered_json{{"base", graph_payload(s.g)},
                                        {"charge", ordered_json::array({e.first, e.second})},
                                        {"expected", "0"},
                                        {"actual", z.str()}};
                });
            }
        }
    }

    {
        Check check(report, "cfi", "filter-unit");
        for (const auto& s : corpus) {
            Rational got = hom_quantum(s.g, cfi_filter(s));
            check.expect(got == 1, [&] {
                return ordered_json{{"base", graph_payload(s.g)},
                                    {"expected", "1"},
                                    {"actual", rational_to_string(got)}};
            });
        }
    }

    {
        Check check(report, "cfi", "filter-kills-nonsurjective");
        auto rng = seeded(opts, 2);
        for (const auto& s : corpus) {
            if (s.n() > 6) continue;
            auto x = cfi_filter(s);
            for_each_nonsurjective(s, [&](const ColoredGraph& h) {
                Rational got = hom_quantum(h, x);
                check.expect(got == 0, [&] {
                    return ordered_json{{"base", graph_payload(s.g)},
                                        {"graph", graph_payload(h)},
                                        {"expected", "0"},
                                        {"actual", rational_to_string(got)}};
                });
            });
            // repeated-color hosts with one whole class removed
            for (int trial = 0; trial < 5; ++trial) {
                auto h = random_s_colored_graph(rng, s, 2, 0.6);
                auto drop = s.g.edges[std::uniform_int_distribution<std::size_t>(
                    0, s.g.edges.size() - 1)(rng)];
                std::vector<Edge> kept;
                for (const auto& e : s.g.edges) {
                    if (e != drop) kept.push_back(e);
                }
                auto sub = ColorfulGraph(ColoredGraph::make(s.n(), s.g.color, kept));
                auto h2 = restrict_to_edge_classes(h, sub);
                Rational got = hom_quantum(h2, x);
                check.expect(got == 0, [&] {
                    return ordered_json{{"base", graph_payload(s.g)},
                                        {"graph", graph_payload(h2)},
                                        {"expected", "0"},
                                        {"actual", rational_to_string(got)}};
                });
            }
        }
    }

    {
        Check check(report, "cfi", "charge-push-isomorphisms");
        for (const auto& s : corpus) {
            auto e = s.g.edges.front();
            for (const auto& e2 : s.g.edges) {
                bool ok = true;
                try {
                    auto push = push_along_path(s, e, e2);
                    auto from = cfi_csp(s, ChargeFunction::indicator(s, {e}));
                    auto to = cfi_csp(s, push.target);
                    ok = push.target.bit == ChargeFunction::indicator(s, {e2}).bit &&
                         verify_isomorphism(from.realized, to.realized, push.map);
                } catch (const std::exception&) {
                    ok = false;
                }
                check.expect(ok, [&] {
                    return ordered_json{{"base", graph_payload(s.g)},
                                        {"from_edge", ordered_json::array({e.first, e.second})},
                                        {"to_edge", ordered_json::array({e2.first, e2.second})},
                                        {"failure", "push map did not verify"}};
                });
            }
            for (const auto& drop : s.g.edges) {
                std::vector<Edge> kept;
                for (const auto& e2 : s.g.edges) {
                    if (e2 != drop) kept.push_back(e2);
                }
                auto s2 = ColorfulGraph(ColoredGraph::make(s.n(), s.g.color, kept));
                bool ok = true;
                try {
                    auto iso = deleted_class_isomorphism(s, s2);
                    ok = verify_isomorphism(iso.from, iso.to, iso.map);
                } catch (const std::exception&) {
                    ok = false;
                }
                check.expect(ok, [&] {
                    return ordered_json{
                        {"base", graph_payload(s.g)},
                        {"deleted_edge", ordered_json::array({drop.first, drop.second})},
                        {"failure", "deleted-class isomorphism did not verify"}};
                });
            }
        }
    }
    return report;
}

VerifyReport verify_filters(const VerifyOptions& opts) {
    VerifyReport report;

    {
        Check check(report, "filters", "quantum-worked-example");
        QuantumGraph f{1,
                       {Rational(1, 24), Rational(-1, 6)},
                       {uncolored_complete(4), uncolored_complete(3)}};
        struct Row {
            int clique;
            Rational expect;
        };
        for (const auto& [clique, expect] :
             std::vector<Row>{{4, 1}, {3, 0}, {2, Rational(-1, 2)}}) {
            Rational got = hom_quantum(uncolored_complete(clique), f);
            check.expect(got == expect, [&, clique = clique, expect = expect] {
                return ordered_json{{"pattern", "K" + std::to_string(clique)},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(got)}};
            });
        }
    }

    {
        Check check(report, "filters", "cardinality-exhaustive");
        int s_bound = 4;
        std::vector<ColorCoarsening> etas;
        for (int k = 0; k <= s_bound; ++k) {
            etas.push_back(ColorCoarsening{{{0, 1}}, {k}});
        }
        for (int k0 = 0; k0 <= s_bound; ++k0) {
            for (int k1 = 0; k0 + k1 <= s_bound; ++k1) {
                etas.push_back(ColorCoarsening{{{0}, {1}}, {k0, k1}});
            }
        }
        std::vector<QuantumGraph> filters;
        for (const auto& eta : etas) filters.push_back(cardinality_filter(eta, s_bound));
        for (int n = 1; n <= 4; ++n) {
            for (int cmask = 0; cmask < (1 << n); ++cmask) {
                std::vector<int> colors(n);
                for (int v = 0; v < n; ++v) colors[v] = cmask >> v & 1;
                std::vector<Edge> pairs;
                for (int u = 0; u < n; ++u) {
                    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
                }
                for (std::uint64_t emask = 0; emask < (std::uint64_t(1) << pairs.size());
                     ++emask) {
                    std::vector<Edge> edges;
                    for (std::size_t i = 0; i < pairs.size(); ++i) {
                        if (emask >> i & 1) edges.push_back(pairs[i]);
                    }
                    auto h = ColoredGraph::make(2, colors, edges);
                    for (std::size_t f = 0; f < etas.size(); ++f) {
                        Rational expect = etas[f].matches(h) ? 1 : 0;
                        Rational got = hom_quantum(h, filters[f]);
                        check.expect(got == expect, [&] {
                            return ordered_json{{"graph", graph_payload(h)},
                                                {"targets", etas[f].targets},
                                                {"expected", rational_to_string(expect)},
                                                {"actual", rational_to_string(got)}};
                        });
                    }
                }
            }
        }
    }

    {
        Check check(report, "filters", "ie-cfi-agreement");
        auto rng = seeded(opts, 3);
        std::vector<ColorfulGraph> bases;
        for (int n = 3; n <= 8; ++n) bases.push_back(colorful_cycle(n));
        bases.push_back(make_colorful(elementary_wall(2, true)));
        for (const auto& s : bases) {
            if (s.g.edges.size() > 8) continue;
            auto ie = inclusion_exclusion_filter(s);
            auto x = cfi_filter(s);
            Rational on_s_ie = hom_quantum(s.g, ie);
            Rational on_s_x = hom_quantum(s.g, x);
            check.expect(on_s_ie == 1 && on_s_x == 1, [&] {
                return ordered_json{{"base", graph_payload(s.g)},
                                    {"ie_on_s", rational_to_string(on_s_ie)},
                                    {"cfi_on_s", rational_to_string(on_s_x)}};
            });
            auto agree = [&](const ColoredGraph& h) {
                Rational a = hom_quantum(h, ie);
                Rational b = hom_quantum(h, x);
                check.expect(a == 0 && b == 0, [&] {
                    return ordered_json{{"base", graph_payload(s.g)},
                                        {"graph", graph_payload(h)},
                                        {"ie", rational_to_string(a)},
                                        {"cfi", rational_to_string(b)}};
                });
            };
            if (s.n() <= 6) {
                for_each_nonsurjective(s, agree);
            } else {
                for (int i = 0; i < opts.ie_sample; ++i) agree(random_nonsurjective(rng, s));
            }
        }
    }
    return report;
}

VerifyReport verify_expansion(const VerifyOptions& opts) {
    VerifyReport report;

    // all uncolored patterns with <= 5 vertices, one per isomorphism class
    std::vector<ColoredGraph> patterns;
    {
        std::set<std::string> seen;
        for (int n = 1; n <= 5; ++n) {
            std::vector<Edge> pairs;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
            }
            for (std::uint64_t emask = 0; emask < (std::uint64_t(1) << pairs.size()); ++emask) {
                std::vector<Edge> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    if (emask >> i & 1) edges.push_back(pairs[i]);
                }
                auto h = ColoredGraph::make(1, std::vector<int>(n, 0), edges);
                if (seen.insert(canonical_key(h)).second) patterns.push_back(h);
            }
        }
    }

    std::vector<ColoredGraph> hosts;
    {
        auto rng = seeded(opts, 4);
        std::uniform_int_distribution<int> size(1, 7);
        for (int i = 0; i < opts.expansion_hosts; ++i) {
            hosts.push_back(random_colored_graph(rng, size(rng), 1, 0.4));
        }
    }

    {
        Check check(report, "expansion", "sub-oracle-equivalence");
        for (const auto& p : patterns) {
            auto exp = sub_hom_expansion(p);
            for (const auto& g : hosts) {
                Rational got = evaluate_quantum_brute(exp.q, g);
                Rational expect(sub_count(p, g));
                check.expect(got == expect, [&] {
                    return ordered_json{{"pattern", graph_payload(p)},
                                        {"host", graph_payload(g)},
                                        {"expected", rational_to_string(expect)},
                                        {"actual", rational_to_string(got)}};
                });
            }
        }
    }

    {
        Check check(report, "expansion", "ind-oracle-equivalence");
        for (const auto& p : patterns) {
            auto exp = ind_hom_expansion(p);
            for (const auto& g : hosts) {
                Rational got = evaluate_quantum_brute(exp.q, g);
                Rational expect(ind_count(p, g));
                check.expect(got == expect, [&] {
                    return ordered_json{{"pattern", graph_payload(p)},
                                        {"host", graph_payload(g)},
                                        {"expected", rational_to_string(expect)},
                                        {"actual", rational_to_string(got)}};
                });
            }
        }
    }

    {
        Check check(report, "expansion", "sub-constituent-sign-law");
        for (const auto& p : patterns) {
            auto exp = sub_hom_expansion(p);
            for (std::size_t i = 0; i < exp.q.size(); ++i) {
                int deficit = p.n - exp.q.constituents[i].n;
                bool negative = exp.q.coefficients[i] < 0;
                check.expect(negative == (deficit % 2 == 1), [&] {
                    return ordered_json{
                        {"pattern", graph_payload(p)},
                        {"constituent", graph_payload(exp.q.constituents[i])},
                        {"coefficient", rational_to_string(exp.q.coefficients[i])}};
                });
            }
        }
    }

    {
        Check check(report, "expansion", "color-lift-identity");
        auto rng = seeded(opts, 5);
        auto m2 = ColoredGraph::make(1, {0, 0, 0, 0}, {{0, 1}, {2, 3}});
        auto k3 = uncolored_complete(3);
        struct Named {
            std::string name;
            MotifOracle oracle;
            QuantumGraph expansion;
        };
        std::vector<Named> ps;
        ps.push_back({"hom-K3", make_oracle(OracleKind::Hom, k3), QuantumGraph{1, {1}, {k3}}});
        ps.push_back({"sub-M2", make_expansion_oracle(OracleKind::Sub, m2),
                      sub_hom_expansion(m2).q});
        std::uniform_int_distribution<int> size(2, 8);
        std::uniform_int_distribution<int> num_colors(2, 3);
        for (int i = 0; i < opts.lift_hosts; ++i) {
            int k = num_colors(rng);
            auto g = random_colored_graph(rng, size(rng), k, 0.4);
            for (const auto& named : ps) {
                Rational plain = named.oracle(strip_colors(g));
                Rational lifted = lift_colored(named.oracle)(g);
                Rational expanded =
                    evaluate_quantum_brute(colored_expansion(named.expansion, k), g);
                check.expect(plain == lifted && plain == expanded, [&] {
                    return ordered_json{{"oracle", named.name},
                                        {"host", graph_payload(g)},
                                        {"plain", rational_to_string(plain)},
                                        {"lifted", rational_to_string(lifted)},
                                        {"expanded", rational_to_string(expanded)}};
                });
            }
        }
    }

    {
        Check check(report, "expansion", "colorful-constituent-coefficients");
        auto m2 = ColoredGraph::make(1, {0, 0, 0, 0}, {{0, 1}, {2, 3}});
        auto exp = sub_hom_expansion(m2);
        auto ce = colored_expansion(exp.q, 3);
        for (std::size_t i = 0; i < ce.size(); ++i) {
            const auto& f = ce.constituents[i];
            if (f.n != f.num_colors) continue;
            std::vector<char> seen(f.n, 0);
            bool bijective = true;
            for (int c : f.color) {
                if (seen[c]) bijective = false;
                seen[c] = 1;
            }
            if (!bijective) continue;
            auto stripped = strip_colors(f);
            Rational alpha = 0;
            for (std::size_t j = 0; j < exp.q.size(); ++j) {
                if (are_isomorphic(exp.q.constituents[j], stripped)) {
                    alpha = exp.q.coefficients[j];
                    break;
                }
            }
            Rational expect = alpha * Rational(Integer(automorphism_count(stripped)));
            check.expect(ce.coefficients[i] == expect, [&] {
                return ordered_json{{"constituent", graph_payload(f)},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(ce.coefficients[i])}};
            });
        }
    }
    return report;
}

VerifyReport verify_reduction(const VerifyOptions& opts) {
    VerifyReport report;

    {
        Check check(report, "reduction", "case-a");
        auto rng = seeded(opts, 6);
        std::uniform_int_distribution<int> size(2, 6);
        for (int i = 0; i < opts.reduction_instances; ++i) {
            auto s = random_base(rng, size(rng), 3, 0.1);
            auto g = random_s_colored_graph(rng, s, 2, 0.5);
            auto p = make_oracle(OracleKind::Hom, strip_colors(s.g));
            Rational expect(hom_count(s.g, g));
            bool ok = true;
            Rational got;
            try {
                got = reduce_hom(s, s, s.n(), p, ReductionCase::A, g).result;
                ok = got == expect;
            } catch (const std::exception&) {
                ok = false;
            }
            check.expect(ok, [&] {
                return ordered_json{{"pattern", graph_payload(s.g)},
                                    {"host", graph_payload(g)},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(got)}};
            });
        }
    }

    {
        Check check(report, "reduction", "case-b");
        auto rng = seeded(opts, 7);
        std::uniform_int_distribution<int> size(3, 5);
        for (int i = 0; i < opts.reduction_instances; ++i) {
            ColorfulGraph s = random_base(rng, size(rng), 3, 0.05);
            if (s.g.edges.size() > 4) {  // keep the matching pattern in quotient range
                s = ColorfulGraph(random_colorful_tree(rng, size(rng)));
            }
            int m = static_cast<int>(s.g.edges.size());
            // H = m disjoint edges; its quotient along E(S) embeds S
            std::vector<Edge> medges;
            for (int t = 0; t < m; ++t) medges.push_back({2 * t, 2 * t + 1});
            auto h = ColoredGraph::make(1, std::vector<int>(2 * m, 0), medges);
            auto embed = matching_quotient_embed(s, h, medges);
            auto p = make_expansion_oracle(OracleKind::Sub, h);
            auto g = random_s_colored_graph(rng, s, 2, 0.5);
            int s_bound = std::max(2 * m, embed.t.n());
            Rational expect(hom_count(s.g, g));
            bool ok = true;
            Rational got;
            try {
                got = reduce_hom(s, embed.t, s_bound, p, ReductionCase::B, g).result;
                ok = got == expect;
            } catch (const std::exception&) {
                ok = false;
            }
            check.expect(ok, [&] {
                return ordered_json{{"pattern", graph_payload(s.g)},
                                    {"oracle_pattern", graph_payload(h)},
                                    {"host", graph_payload(g)},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(got)}};
            });
        }
    }

    {
        Check check(report, "reduction", "case-c");
        auto rng = seeded(opts, 8);
        std::uniform_int_distribution<int> size(3, 5);
        for (int i = 0; i < opts.reduction_instances; ++i) {
            auto s = random_base(rng, size(rng), 3, 0.1);
            auto p = make_expansion_oracle(OracleKind::Ind, strip_colors(s.g));
            auto g = random_s_colored_graph(rng, s, 2, 0.5);
            Rational expect(hom_count(s.g, g));
            bool ok = true;
            Rational got;
            try {
                got = reduce_hom(s, s, s.n(), p, ReductionCase::C, g).result;
                ok = got == expect;
            } catch (const std::exception&) {
                ok = false;
            }
            check.expect(ok, [&] {
                return ordered_json{{"pattern", graph_payload(s.g)},
                                    {"host", graph_payload(g)},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(got)}};
            });
        }
    }

    {
        Check check(report, "reduction", "call-count-contrast");
        auto rng = seeded(opts, 9);
        for (int n = 3; n <= 8; ++n) {
            auto s = colorful_cycle(n);
            // T = S plus one isolated padding vertex, p = hom of T with colors
            // stripped; the grid then has two parts, hence (s+1)^2 points
            std::vector<int> tcol(n + 1);
            for (int v = 0; v <= n; ++v) tcol[v] = v;
            auto t = ColorfulGraph(ColoredGraph::make(n + 1, tcol, s.g.edges));
            auto g = random_s_colored_graph(rng, s, 2, 0.6);
            Rational expect(hom_count(s.g, g));
            auto p = make_oracle(OracleKind::Hom, strip_colors(t.g));
            std::uint64_t grid = static_cast<std::uint64_t>(t.n() + 1) * (t.n() + 1);
            auto cfi = reduce_hom(s, t, t.n(), p, ReductionCase::B, g, FilterKind::Cfi);
            check.expect(cfi.result == expect && cfi.oracle_calls == 2 * grid, [&] {
                return ordered_json{{"cycle", n},
                                    {"expected_calls", 2 * grid},
                                    {"actual_calls", cfi.oracle_calls},
                                    {"expected", rational_to_string(expect)},
                                    {"actual", rational_to_string(cfi.result)}};
            });
            std::uint64_t ie_constituents = inclusion_exclusion_filter(s).size();
            check.expect(ie_constituents == (std::uint64_t(1) << n), [&] {
                return ordered_json{{"cycle", n}, {"ie_constituents", ie_constituents}};
            });
            if (n <= opts.ie_run_max_edges) {
                p.reset_ledger();
                auto ie = reduce_hom(s, t, t.n(), p, ReductionCase::B, g,
                                     FilterKind::InclusionExclusion);
                check.expect(ie.result == expect && ie.oracle_calls == ie_constituents * grid,
                             [&] {
                                 return ordered_json{{"cycle", n},
                                                     {"expected_calls", ie_constituents * grid},
                                                     {"actual_calls", ie.oracle_calls},
                                                     {"expected", rational_to_string(expect)},
                                                     {"actual", rational_to_string(ie.result)}};
                             });
            }
        }
    }

    {
        Check check(report, "reduction", "minor-lift");
        auto rng = seeded(opts, 10);
        auto triangle = ColorfulGraph(
            ColoredGraph::make(3, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}));
        auto k2 = ColorfulGraph(ColoredGraph::make(2, {0, 1}, {{0, 1}}));
        auto p3 = ColorfulGraph(ColoredGraph::make(3, {0, 1, 2}, {{0, 1}, {1, 2}}));
        struct Model {
            std::string name;
            ColorfulGraph a;
            ColorfulGraph b;
            std::vector<std::vector<int>> branch_sets;
        };
        std::vector<Model> models{
            {"triangle-identity", triangle, triangle, {{0}, {1}, {2}}},
            {"edge-in-path", k2, p3, {{0, 1}, {2}}},
            {"triangle-in-wall3", triangle, make_colorful(elementary_wall(3, true)),
             {{3, 4}, {6, 7}, {5, 8}}},
        };
        for (const auto& model : models) {
            for (int i = 0; i < opts.minor_hosts; ++i) {
                auto g = random_s_colored_graph(rng, model.a, 2, 0.5);
                auto lifted = minor_lift(model.a, model.b, model.branch_sets, g);
                Integer left = hom_count(model.a.g, g);
                Integer right = hom_count(model.b.g, lifted);
                bool ok = left == right && lifted.n == g.n * model.b.n();
                check.expect(ok, [&] {
                    return ordered_json{{"model", model.name},
                                        {"host", graph_payload(g)},
                                        {"hom_A_G", left.str()},
                                        {"hom_B_lifted", right.str()},
                                        {"lifted_vertices", lifted.n}};
                });
            }
        }
    }
    return report;
}

VerifyReport verify_all(const VerifyOptions& opts) {
    VerifyReport report;
    for (auto fn : {&verify_cfi, &verify_filters, &verify_expansion, &verify_reduction}) {
        auto part = fn(opts);
        report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
    }
    return report;
}

VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "cfi") return verify_cfi(opts);
    if (suite == "filters") return verify_filters(opts);
    if (suite == "expansion") return verify_expansion(opts);
    if (suite == "reduction") return verify_reduction(opts);
    if (suite == "all") return verify_all(opts);
    throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace homcfi
