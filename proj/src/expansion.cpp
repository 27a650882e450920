#include "homcfi/expansion.hpp"

#include "homcfi/iso.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homcfi {

namespace {

ColoredGraph quotient_graph(const ColoredGraph& h, const std::vector<int>& block_of, int blocks) {
    std::vector<int> colors(blocks, -1);
    for (int v = 0; v < h.n; ++v) colors[block_of[v]] = h.color[v];
    std::vector<Edge> edges;
    for (const auto& [u, v] : h.edges) edges.push_back({block_of[u], block_of[v]});
    return ColoredGraph::make(h.num_colors, colors, edges);
}

}  // namespace

std::vector<Quotient> quotients(const ColoredGraph& h, int cap) {
    if (h.n > cap) {
        throw std::length_error("quotients: vertex count exceeds the partition cap");
    }
    std::vector<Quotient> out;
    std::vector<int> block_of(h.n, -1);
    std::vector<int> block_color;
    // restricted-growth enumeration; a vertex may only join a block of its color
    auto rec = [&](auto&& self, int v) -> void {
        if (v == h.n) {
            out.push_back({quotient_graph(h, block_of, static_cast<int>(block_color.size())),
                           block_of});
            return;
        }
        for (int b = 0; b < static_cast<int>(block_color.size()); ++b) {
            if (block_color[b] != h.color[v]) continue;
            block_of[v] = b;
            self(self, v + 1);
        }
        block_of[v] = static_cast<int>(block_color.size());
        block_color.push_back(h.color[v]);
        self(self, v + 1);
        block_color.pop_back();
        block_of[v] = -1;
    };
    rec(rec, 0);
    return out;
}

Integer partition_mobius(const std::vector<int>& block_of) {
    int blocks = 0;
    for (int b : block_of) blocks = std::max(blocks, b + 1);
    std::vector<int> size(blocks, 0);
    for (int b : block_of) ++size[b];
    Integer mu = 1;
    for (int b = 0; b < blocks; ++b) {
        Integer f = 1;
        for (int i = 1; i < size[b]; ++i) f *= i;  // (|B|-1)!
        if ((size[b] - 1) % 2 != 0) f = -f;
        mu *= f;
    }
    return mu;
}

HomExpansion sub_hom_expansion(const ColoredGraph& h, int cap) {
    Rational inv_aut(1, Integer(automorphism_count(h, std::max(cap, h.n))));
    WeightedGraphs terms;
    for (const auto& q : quotients(h, cap)) {
        terms.emplace_back(inv_aut * Rational(partition_mobius(q.block_of)), q.graph);
    }
    return HomExpansion{"sub", h, collect(terms)};
}

HomExpansion ind_hom_expansion(const ColoredGraph& h, int cap) {
    if (h.n > cap) {
        throw std::length_error("ind_hom_expansion: vertex count exceeds the cap");
    }
    // supersets add plain (non-loop) edges; the resulting expansion is exact
    // on simple hosts, which is the scope of induced-subgraph counting here
    std::vector<Edge> missing;
    for (int u = 0; u < h.n; ++u) {
        for (int v = u + 1; v < h.n; ++v) {
            if (!h.has_edge(u, v)) missing.push_back({u, v});
        }
    }
    // induced embeddings of H = sum over added edge sets F of (-1)^{|F|}
    // injective homs of H+F; injective homs expand over the partition lattice;
    // divide once by |aut(H)| to count subsets instead of embeddings
    Rational inv_aut(1, Integer(automorphism_count(h, std::max(cap, h.n))));
    WeightedGraphs terms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << missing.size()); ++mask) {
        std::vector<Edge> edges = h.edges;
        int added = 0;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (mask >> i & 1) {
                edges.push_back(missing[i]);
                ++added;
            }
        }
        auto super = ColoredGraph::make(h.num_colors, h.color, edges);
        Rational sign = (added % 2 == 0) ? inv_aut : -inv_aut;
        for (const auto& q : quotients(super, std::max(cap, kQuotientVertexCap))) {
            terms.emplace_back(sign * Rational(partition_mobius(q.block_of)), q.graph);
        }
    }
    return HomExpansion{"ind", h, collect(terms)};
}

MotifOracle make_expansion_oracle(OracleKind kind, const ColoredGraph& pattern) {
    if (kind == OracleKind::Hom) {
        return make_oracle(OracleKind::Hom, pattern);
    }
    HomExpansion exp = (kind == OracleKind::Sub) ? sub_hom_expansion(pattern)
                                                 : ind_hom_expansion(pattern);
    std::string name = exp.kind + "-expansion";
    return MotifOracle(
        [q = exp.q](const ColoredGraph& g) {
            Rational total = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                total += q.coefficients[i] * Rational(hom_count(q.constituents[i], g));
            }
            return total;
        },
        pattern.n, true, name);
}

MatchingEmbed matching_quotient_embed(const ColorfulGraph& s, const ColoredGraph& h,
                                      const std::vector<Edge>& matching) {
    if (h.num_colors != 1) {
        throw std::invalid_argument("matching_quotient_embed: H must be uncolored");
    }
    int m = static_cast<int>(s.g.edges.size());
    if (static_cast<int>(matching.size()) < m) {
        throw std::invalid_argument("matching_quotient_embed: matching smaller than |E(S)|");
    }
    std::set<int> touched;
    for (const auto& [x, y] : matching) {
        if (x == y || !h.has_edge(x, y)) {
            throw std::invalid_argument("matching_quotient_embed: not an edge of H");
        }
        if (!touched.insert(x).second || !touched.insert(y).second) {
            throw std::invalid_argument("matching_quotient_embed: edges share endpoints");
        }
    }
    for (int u = 0; u < s.n(); ++u) {
        if (s.g.degree(u) == 0) {
            throw std::invalid_argument("matching_quotient_embed: S has an isolated vertex");
        }
    }
    // block of every H-vertex: endpoint x_t of matching edge t joins the block
    // of u_t, endpoint y_t the block of v_t; untouched vertices are singletons
    std::vector<int> block_of(h.n, -1);
    for (int t = 0; t < m; ++t) {
        auto [u, v] = s.g.edges[t];
        auto [x, y] = matching[t];
        block_of[x] = u;
        block_of[y] = v;
    }
    int next = s.n();
    for (int x = 0; x < h.n; ++x) {
        if (block_of[x] < 0) block_of[x] = next++;
    }
    ColoredGraph t_graph = quotient_graph(strip_colors(h), block_of, next);
    std::vector<int> idcol(next);
    for (int v = 0; v < next; ++v) idcol[v] = v;
    MatchingEmbed out{ColorfulGraph(ColoredGraph::make(next, idcol, t_graph.edges)), block_of, {}};
    out.injection.resize(s.n());
    for (int u = 0; u < s.n(); ++u) out.injection[u] = u;
    for (const auto& [u, v] : s.g.edges) {
        if (!out.t.g.has_edge(u, v)) {
            throw std::logic_error("matching_quotient_embed: edge of S not realized in T");
        }
    }
    return out;
}

}  // namespace homcfi
