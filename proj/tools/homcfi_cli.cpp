// Command-line surface for the exact homomorphism/filter/reduction library.
// All numeric output is exact; rationals print as "num/den" strings.
#include "homcfi/cfi.hpp"
#include "homcfi/counting.hpp"
#include "homcfi/expansion.hpp"
#include "homcfi/filters.hpp"
#include "homcfi/generate.hpp"
#include "homcfi/json_io.hpp"
#include "homcfi/quantum.hpp"
#include "homcfi/reduction.hpp"
#include "homcfi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace homcfi;
using nlohmann::ordered_json;

namespace {

int env_cap(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    return std::atoi(value);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        save_text(out_path, text);
    }
}

void emit_value(const Rational& value, bool as_json, const std::string& out_path) {
    if (as_json) {
        ordered_json j{{"value", rational_to_string(value)}};
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(rational_to_string(value), out_path);
    }
}

std::vector<Edge> parse_edges(const std::string& text) {
    // "u-v,u-v,..." with integer endpoints
    std::vector<Edge> edges;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) {
            throw CLI::ValidationError("edges must look like u-v,u-v,...");
        }
        edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    return edges;
}

std::vector<std::vector<int>> parse_int_groups(const std::string& text) {
    // "a,b;c;d,e" -> {{a,b},{c},{d,e}}
    std::vector<std::vector<int>> groups;
    std::stringstream stream(text);
    std::string group;
    while (std::getline(stream, group, ';')) {
        std::vector<int> items;
        std::stringstream inner(group);
        std::string item;
        while (std::getline(inner, item, ',')) {
            if (!item.empty()) items.push_back(std::stoi(item));
        }
        groups.push_back(items);
    }
    return groups;
}

MotifOracle parse_oracle(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("oracle must look like hom:pattern.json");
    }
    std::string kind = spec.substr(0, colon);
    // the reduction consumes oracles over uncolored graphs
    ColoredGraph pattern = strip_colors(load_graph(spec.substr(colon + 1)));
    if (kind == "hom") return make_oracle(OracleKind::Hom, pattern);
    if (kind == "sub") return make_expansion_oracle(OracleKind::Sub, pattern);
    if (kind == "ind") return make_expansion_oracle(OracleKind::Ind, pattern);
    throw CLI::ValidationError("oracle kind must be hom, sub or ind");
}

ordered_json report_json(const ReductionReport& report) {
    return ordered_json{{"result", rational_to_string(report.result)},
                        {"normalization", rational_to_string(report.normalization)},
                        {"oracle_calls", report.oracle_calls},
                        {"normalization_calls", report.normalization_calls},
                        {"max_call_size", report.max_call_size}};
}

ColorfulGraph colorful_cycle(int n) {
    std::vector<int> colors(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        colors[v] = v;
        edges.push_back({v, (v + 1) % n});
    }
    return ColorfulGraph(ColoredGraph::make(n, colors, edges));
}

/// Greedy min-degree elimination width of the color-stripped pattern; the
/// exact counter switches from message passing to backtracking above width 2,
/// which is too slow for the padded bench hosts.
int elimination_width(const ColoredGraph& g) {
    int n = g.n;
    std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges) {
        if (u != v) fill[u][v] = fill[v][u] = 1;
    }
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = n + 1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            int deg = 0;
            for (int w = 0; w < n; ++w) deg += (!gone[w] && fill[v][w]) ? 1 : 0;
            if (deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        width = std::max(width, best_deg);
        std::vector<int> sep;
        for (int w = 0; w < n; ++w) {
            if (!gone[w] && fill[best][w]) sep.push_back(w);
        }
        for (std::size_t i = 0; i < sep.size(); ++i) {
            for (std::size_t j = i + 1; j < sep.size(); ++j) {
                fill[sep[i]][sep[j]] = fill[sep[j]][sep[i]] = 1;
            }
        }
        gone[best] = 1;
    }
    return width;
}

struct BenchRow {
    std::string base;
    int vertices = 0;
    int edges = 0;
    int max_class_blowup = 0;  // largest CFI color class
    std::uint64_t cfi_constituents = 0;
    std::uint64_t ie_constituents = 0;
    std::string cfi_calls = "skipped";
    std::string ie_calls = "skipped";
    std::string cfi_seconds = "";
    std::string ie_seconds = "";
    std::string cfi_max_call = "";
    std::string result = "";
    std::string check = "";
};

int run_bench(const std::string& family, const std::string& oracle_kind, int class_size,
              std::uint64_t seed, std::uint64_t ie_cap, double cost_cap, bool as_json,
              const std::string& out_path, const std::string& csv_path) {
    std::vector<std::pair<std::string, ColorfulGraph>> bases;
    if (family == "cycles") {
        for (int n = 3; n <= 8; ++n) {
            bases.emplace_back("C" + std::to_string(n), colorful_cycle(n));
        }
    } else if (family == "walls") {
        for (int r = 2; r <= 4; ++r) {
            bases.emplace_back("W" + std::to_string(r),
                               make_colorful(elementary_wall(r, true)));
        }
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 1;
    }

    std::vector<BenchRow> rows;
    std::mt19937_64 rng(seed);
    for (const auto& [name, s] : bases) {
        BenchRow row;
        row.base = name;
        row.vertices = s.n();
        row.edges = static_cast<int>(s.g.edges.size());
        auto x = cfi_filter(s);
        row.cfi_constituents = x.size();
        for (const auto& c : x.constituents) {
            for (int size : c.color_class_sizes()) {
                row.max_class_blowup = std::max(row.max_class_blowup, size);
            }
        }
        row.ie_constituents = std::uint64_t(1) << row.edges;

        // the reduction instance: T = S plus one isolated padding vertex
        std::vector<int> tcol(s.n() + 1);
        for (int v = 0; v <= s.n(); ++v) tcol[v] = v;
        auto t = ColorfulGraph(ColoredGraph::make(s.n() + 1, tcol, s.g.edges));
        auto g = random_s_colored_graph(rng, s, class_size, 0.6);
        Rational expect(hom_count(s.g, g));
        row.result = rational_to_string(expect);

        // width > 2 falls back to backtracking, which is hopeless on the
        // tensored hosts; beyond that, estimate total work as
        // calls * host^2 * |V(T)| and skip rows over the budget.
        bool feasible = elimination_width(t.g) <= 2;
        double points = double(t.n() + 1) * double(t.n() + 1);
        double host_est = double(g.n) * row.max_class_blowup * double(t.n() + 1);
        double cost = 4.0 * points * host_est * host_est * t.n();
        if (cost > cost_cap) {
            feasible = false;
            row.cfi_calls = "skipped(cost)";
        }
        if (oracle_kind == "ind" && t.n() > kIndVertexCap) feasible = false;
        if (oracle_kind == "sub" && t.n() > kQuotientVertexCap) feasible = false;
        if (feasible) {
            OracleKind kind = oracle_kind == "sub"   ? OracleKind::Sub
                              : oracle_kind == "ind" ? OracleKind::Ind
                                                     : OracleKind::Hom;
            auto p = kind == OracleKind::Hom
                         ? make_oracle(kind, strip_colors(t.g))
                         : make_expansion_oracle(kind, strip_colors(t.g));
            auto t0 = std::chrono::steady_clock::now();
            auto cfi = reduce_hom(s, t, t.n(), p, ReductionCase::B, g, FilterKind::Cfi);
            auto t1 = std::chrono::steady_clock::now();
            row.cfi_calls = std::to_string(cfi.oracle_calls);
            row.cfi_seconds = std::to_string(std::chrono::duration<double>(t1 - t0).count());
            row.cfi_max_call = std::to_string(cfi.max_call_size);
            row.check = (cfi.result == expect) ? "ok" : "MISMATCH";
            if (row.ie_constituents <= ie_cap) {
                p.reset_ledger();
                auto t2 = std::chrono::steady_clock::now();
                auto ie = reduce_hom(s, t, t.n(), p, ReductionCase::B, g,
                                     FilterKind::InclusionExclusion);
                auto t3 = std::chrono::steady_clock::now();
                row.ie_calls = std::to_string(ie.oracle_calls);
                row.ie_seconds =
                    std::to_string(std::chrono::duration<double>(t3 - t2).count());
                if (ie.result != expect) row.check = "MISMATCH";
            }
        }
        rows.push_back(row);
    }

    ordered_json jrows = ordered_json::array();
    std::ostringstream csv;
    csv << "base,vertices,edges,max_class_blowup,cfi_constituents,ie_constituents,"
           "cfi_calls,ie_calls,cfi_seconds,ie_seconds,cfi_max_call,result,check\n";
    std::ostringstream human;
    human << "base  |E|  blowup  cfi_const  ie_const  cfi_calls  ie_calls  check\n";
    for (const auto& r : rows) {
        jrows.push_back(ordered_json{{"base", r.base},
                                     {"vertices", r.vertices},
                                     {"edges", r.edges},
                                     {"max_class_blowup", r.max_class_blowup},
                                     {"cfi_constituents", r.cfi_constituents},
                                     {"ie_constituents", r.ie_constituents},
                                     {"cfi_calls", r.cfi_calls},
                                     {"ie_calls", r.ie_calls},
                                     {"cfi_seconds", r.cfi_seconds},
                                     {"ie_seconds", r.ie_seconds},
                                     {"cfi_max_call", r.cfi_max_call},
                                     {"result", r.result},
                                     {"check", r.check}});
        csv << r.base << ',' << r.vertices << ',' << r.edges << ',' << r.max_class_blowup
            << ',' << r.cfi_constituents << ',' << r.ie_constituents << ',' << r.cfi_calls
            << ',' << r.ie_calls << ',' << r.cfi_seconds << ',' << r.ie_seconds << ','
            << r.cfi_max_call << ',' << r.result << ',' << r.check << '\n';
        human << r.base << "  " << r.edges << "  " << r.max_class_blowup << "  "
              << r.cfi_constituents << "  " << r.ie_constituents << "  " << r.cfi_calls
              << "  " << r.ie_calls << "  " << r.check << '\n';
    }
    if (!csv_path.empty()) save_text(csv_path, csv.str());
    if (as_json) {
        emit(ordered_json{{"family", family}, {"rows", jrows}}.dump(2) + "\n", out_path);
    } else {
        emit(human.str(), out_path);
    }
    for (const auto& r : rows) {
        if (r.check == "MISMATCH") return 1;
    }
    return 0;
}

ordered_json check_json(const CheckResult& c) {
    ordered_json j{{"suite", c.suite},
                   {"name", c.name},
                   {"passed", c.passed},
                   {"instances", c.instances},
                   {"failures", c.failures},
                   {"seconds", c.seconds}};
    if (!c.detail.empty()) j["counterexample"] = ordered_json::parse(c.detail);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact colored-graph homomorphism algebra, CFI filters and the "
                 "motif-oracle reduction"};
    app.require_subcommand(1);

    std::string out_path;
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_flag("--json", as_json, "emit JSON output");
    app.add_option("--seed", seed, "seed for randomized subcommands");

    int quotient_cap = env_cap("HOMCFI_QUOTIENT_CAP", kQuotientVertexCap);
    int ind_cap = env_cap("HOMCFI_IND_CAP", kIndVertexCap);
    int ie_edge_cap = env_cap("HOMCFI_IE_CAP", kIeEdgeCap);

    std::string pattern_path, host_path, base_path, a_path, b_path, t_path;

    auto add_count = [&](const std::string& name, const std::string& help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--pattern", pattern_path, "pattern graph JSON")->required();
        cmd->add_option("--host", host_path, "host graph JSON")->required();
        return cmd;
    };
    auto* hom_cmd = add_count("hom", "count color-preserving homomorphisms");
    auto* sub_cmd = add_count("sub", "count subgraph copies of the pattern");
    auto* ind_cmd = add_count("ind", "count induced-subgraph copies of the pattern");

    auto* expand_cmd = app.add_subcommand("expand", "hom-expansion of a counting parameter");
    expand_cmd->require_subcommand(1);
    auto* expand_sub = expand_cmd->add_subcommand("sub", "expansion of subgraph counting");
    auto* expand_ind = expand_cmd->add_subcommand("ind", "expansion of induced counting");
    for (auto* cmd : {expand_sub, expand_ind}) {
        cmd->add_option("--pattern", pattern_path, "pattern graph JSON")->required();
    }

    auto* cfi_cmd = app.add_subcommand("cfi", "CFI construction over a colorful base");
    cfi_cmd->require_subcommand(1);
    auto* cfi_build = cfi_cmd->add_subcommand("build", "realize the CFI graph of a charge");
    std::string charge_text = "empty";
    bool as_dot = false;
    cfi_build->add_option("--base", base_path, "colorful base graph JSON")->required();
    cfi_build->add_option("--charge", charge_text, "empty or charged edges u-v,u-v,...");
    cfi_build->add_flag("--dot", as_dot, "emit Graphviz DOT instead of JSON");
    auto* cfi_filter_cmd = cfi_cmd->add_subcommand("filter", "the two-constituent filter X(S)");
    cfi_filter_cmd->add_option("--base", base_path, "colorful base graph JSON")->required();

    auto* filter_cmd = app.add_subcommand("filter", "quantum-graph filters");
    filter_cmd->require_subcommand(1);
    auto* filter_card = filter_cmd->add_subcommand("cardinality", "per-part vertex-count filter");
    std::string parts_text, targets_text;
    int bound = 4;
    filter_card->add_option("--parts", parts_text, "color parts, e.g. 0,1;2")->required();
    filter_card->add_option("--targets", targets_text, "per-part counts, e.g. 2,1")->required();
    filter_card->add_option("--bound", bound, "support bound s")->required();
    auto* filter_ie = filter_cmd->add_subcommand("ie", "inclusion-exclusion filter");
    filter_ie->add_option("--base", base_path, "colorful base graph JSON")->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "color-respecting tensor product");
    tensor_cmd->add_option("--a", a_path, "first graph JSON")->required();
    tensor_cmd->add_option("--b", b_path, "second graph JSON")->required();

    auto* reduce_cmd =
        app.add_subcommand("reduce", "recover hom(S,G) from a motif-parameter oracle");
    std::string case_text = "a", oracle_text, filter_text = "cfi";
    int s_bound = -1;
    reduce_cmd->add_option("--case", case_text, "side condition: a, b or c")->required();
    reduce_cmd->add_option("--s", pattern_path, "colorful pattern S JSON")->required();
    reduce_cmd->add_option("--t", t_path, "colorful supergraph T JSON (default: S)");
    reduce_cmd->add_option("--oracle", oracle_text, "kind:pattern.json with kind hom|sub|ind")
        ->required();
    reduce_cmd->add_option("--host", host_path, "S-colored host graph JSON")->required();
    reduce_cmd->add_option("--filter", filter_text, "surjectivity filter: cfi or ie");
    reduce_cmd->add_option("--bound", s_bound, "support bound (default: derived)");

    auto* lift_cmd = app.add_subcommand("minor-lift", "host lifting along a minor model");
    std::string branch_text;
    lift_cmd->add_option("--a", a_path, "colorful minor A JSON")->required();
    lift_cmd->add_option("--b", b_path, "colorful graph B containing the model")->required();
    lift_cmd->add_option("--branch-sets", branch_text, "e.g. 3,4;6,7;5,8")->required();
    lift_cmd->add_option("--host", host_path, "A-colored host graph JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    VerifyOptions vopts;
    verify_cmd->add_option("suite", suite, "cfi | filters | expansion | reduction | all");
    verify_cmd->add_option("--corpus-random", vopts.corpus_random, "random corpus bases");
    verify_cmd->add_option("--expansion-hosts", vopts.expansion_hosts, "hosts per pattern");
    verify_cmd->add_option("--lift-hosts", vopts.lift_hosts, "hosts for the lifting identity");
    verify_cmd->add_option("--instances", vopts.reduction_instances,
                           "instances per reduction case");
    verify_cmd->add_option("--minor-hosts", vopts.minor_hosts, "hosts per minor model");
    verify_cmd->add_option("--ie-sample", vopts.ie_sample, "samples for large IE bases");
    verify_cmd->add_option("--ie-run-max-edges", vopts.ie_run_max_edges,
                           "largest |E(S)| for full IE pipeline runs");

    auto* bench_cmd =
        app.add_subcommand("bench", "CFI vs inclusion-exclusion oracle-call benchmark");
    std::string family = "cycles", oracle_kind = "hom", csv_path;
    int class_size = 2;
    std::uint64_t ie_cap = 256;
    double cost_cap = 5e10;
    bench_cmd->add_option("--family", family, "cycles | walls");
    bench_cmd->add_option("--oracle", oracle_kind, "hom | sub | ind");
    bench_cmd->add_option("--class-size", class_size, "host vertices per color");
    bench_cmd->add_option("--ie-cap", ie_cap, "run the IE branch up to this constituent count");
    bench_cmd->add_option("--cost-cap", cost_cap, "skip rows whose estimated work exceeds this");
    bench_cmd->add_option("--csv", csv_path, "also write the table as CSV to this file");

    // let the global --out/--json/--seed options appear after a subcommand
    std::vector<CLI::App*> pending{&app};
    while (!pending.empty()) {
        CLI::App* cur = pending.back();
        pending.pop_back();
        for (CLI::App* sub : cur->get_subcommands({})) {
            sub->fallthrough();
            pending.push_back(sub);
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hom_cmd) {
            emit_value(Rational(hom_count(load_graph(pattern_path), load_graph(host_path))),
                       as_json, out_path);
        } else if (*sub_cmd) {
            emit_value(Rational(sub_count(load_graph(pattern_path), load_graph(host_path))),
                       as_json, out_path);
        } else if (*ind_cmd) {
            emit_value(Rational(ind_count(load_graph(pattern_path), load_graph(host_path))),
                       as_json, out_path);
        } else if (*expand_sub) {
            emit(quantum_to_json(sub_hom_expansion(load_graph(pattern_path), quotient_cap).q),
                 out_path);
        } else if (*expand_ind) {
            emit(quantum_to_json(ind_hom_expansion(load_graph(pattern_path), ind_cap).q),
                 out_path);
        } else if (*cfi_build) {
            auto s = ColorfulGraph(load_graph(base_path));
            auto charge = (charge_text == "empty")
                              ? ChargeFunction::zero(s)
                              : ChargeFunction::indicator(s, parse_edges(charge_text));
            auto gamma = cfi_csp(s, charge);
            emit(as_dot ? graph_to_dot(gamma.realized, "cfi")
                        : graph_to_json(gamma.realized),
                 out_path);
        } else if (*cfi_filter_cmd) {
            emit(quantum_to_json(cfi_filter(ColorfulGraph(load_graph(base_path)))), out_path);
        } else if (*filter_card) {
            ColorCoarsening eta{parse_int_groups(parts_text), {}};
            for (const auto& group : parse_int_groups(targets_text)) {
                for (int k : group) eta.targets.push_back(k);
            }
            emit(quantum_to_json(cardinality_filter(eta, bound)), out_path);
        } else if (*filter_ie) {
            emit(quantum_to_json(
                     inclusion_exclusion_filter(ColorfulGraph(load_graph(base_path)),
                                                ie_edge_cap)),
                 out_path);
        } else if (*tensor_cmd) {
            emit(graph_to_json(tensor(load_graph(a_path), load_graph(b_path))), out_path);
        } else if (*reduce_cmd) {
            auto s = ColorfulGraph(load_graph(pattern_path));
            auto t = t_path.empty() ? s : ColorfulGraph(load_graph(t_path));
            auto g = load_graph(host_path);
            auto p = parse_oracle(oracle_text);
            ReductionCase which = case_text == "a"   ? ReductionCase::A
                                  : case_text == "b" ? ReductionCase::B
                                                     : ReductionCase::C;
            FilterKind filter = (filter_text == "ie") ? FilterKind::InclusionExclusion
                                                      : FilterKind::Cfi;
            int sb = s_bound > 0 ? s_bound : std::max(p.support_bound(), t.n());
            auto report = reduce_hom(s, t, sb, p, which, g, filter);
            if (as_json) {
                emit(report_json(report).dump(2) + "\n", out_path);
            } else {
                emit(rational_to_string(report.result), out_path);
            }
        } else if (*lift_cmd) {
            auto lifted = minor_lift(ColorfulGraph(load_graph(a_path)),
                                     ColorfulGraph(load_graph(b_path)),
                                     parse_int_groups(branch_text), load_graph(host_path));
            emit(graph_to_json(lifted), out_path);
        } else if (*verify_cmd) {
            vopts.seed = seed;
            auto report = verify_suite(suite, vopts);
            if (as_json) {
                ordered_json checks = ordered_json::array();
                for (const auto& c : report.checks) checks.push_back(check_json(c));
                emit(ordered_json{{"suite", suite},
                                  {"seed", seed},
                                  {"passed", report.all_passed()},
                                  {"checks", checks}}
                         .dump(2) +
                         "\n",
                     out_path);
            } else {
                std::ostringstream text;
                for (const auto& c : report.checks) {
                    text << (c.passed ? "pass" : "FAIL") << "  " << c.suite << "/" << c.name
                         << "  (" << c.instances << " instances, " << c.failures
                         << " failures, " << c.seconds << " s)\n";
                    if (!c.passed && !c.detail.empty()) {
                        text << "      counterexample: " << c.detail << "\n";
                    }
                }
                text << (report.all_passed() ? "all checks passed" : "FAILURES present")
                     << "\n";
                emit(text.str(), out_path);
            }
            return report.all_passed() ? 0 : 1;
        } else if (*bench_cmd) {
            return run_bench(family, oracle_kind, class_size, seed, ie_cap, cost_cap, as_json,
                             out_path, csv_path);
        }
    } catch (const PromiseViolation& e) {
        std::cerr << "promise violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
