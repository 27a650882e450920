#include "homcfi/reduction.hpp"

#include "homcfi/cfi.hpp"
#include "homcfi/filters.hpp"
#include "homcfi/iso.hpp"

#include <algorithm>
#include <set>

namespace homcfi {

MotifOracle lift_colored(const MotifOracle& p) {
    return MotifOracle([p](const ColoredGraph& g) { return p(strip_colors(g)); },
                       p.support_bound(), p.pure(), p.name() + "-colored");
}

QuantumGraph colored_expansion(const QuantumGraph& uncolored, int num_colors) {
    WeightedGraphs terms;
    for (std::size_t i = 0; i < uncolored.size(); ++i) {
        const ColoredGraph& f = uncolored.constituents[i];
        std::vector<int> coloring(f.n, 0);
        while (true) {
            terms.emplace_back(uncolored.coefficients[i],
                               apply_coloring(f, coloring, num_colors));
            int v = 0;
            for (; v < f.n; ++v) {
                if (++coloring[v] < num_colors) break;
                coloring[v] = 0;
            }
            if (v == f.n) break;
        }
    }
    return collect(terms);
}

ColoredGraph pad_host(const ColoredGraph& g, const ColorfulGraph& s, const ColorfulGraph& t) {
    if (g.num_colors != s.n()) {
        throw std::invalid_argument("pad_host: host is not colored by V(S)");
    }
    if (t.n() < s.n()) throw std::invalid_argument("pad_host: S is not a subgraph of T");
    for (const auto& [u, v] : s.g.edges) {
        if (!t.g.has_edge(u, v)) {
            throw std::invalid_argument("pad_host: S is not a subgraph of T");
        }
    }
    std::vector<int> colors = g.color;
    for (int v = s.n(); v < t.n(); ++v) colors.push_back(v);  // one dummy per new color
    std::vector<Edge> edges = g.edges;
    int n = static_cast<int>(colors.size());
    for (const auto& [i, j] : t.g.edges) {
        if (s.g.has_edge(i, j) && i < s.n() && j < s.n()) continue;
        // complete bipartite class between colors i and j
        for (int x = 0; x < n; ++x) {
            if (colors[x] != i) continue;
            for (int y = 0; y < n; ++y) {
                if (colors[y] == j && x != y) edges.push_back({x, y});
            }
        }
    }
    return ColoredGraph::make(t.n(), colors, edges);
}

namespace {

// Extends a filter over colors 0..base-1 to colors 0..total-1 by giving every
// constituent one reflexive dominating vertex per extra color, so that
// hom(H, extended constituent) = hom(H restricted to the base colors, original).
QuantumGraph extend_filter_colors(const QuantumGraph& q, int base, int total) {
    if (total == base) return q;
    WeightedGraphs terms;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const ColoredGraph& f = q.constituents[i];
        std::vector<int> colors = f.color;
        for (int c = base; c < total; ++c) colors.push_back(c);
        int n = static_cast<int>(colors.size());
        std::vector<Edge> edges = f.edges;
        for (int d = f.n; d < n; ++d) {
            for (int x = 0; x <= d; ++x) edges.push_back({x, d});  // includes the loop
        }
        terms.emplace_back(q.coefficients[i], ColoredGraph::make(total, colors, edges));
    }
    return collect(terms);
}

}  // namespace

ReductionReport reduce_hom(const ColorfulGraph& s, const ColorfulGraph& t, int s_bound,
                           const MotifOracle& p, ReductionCase which, const ColoredGraph& g,
                           FilterKind filter) {
    if (g.num_colors != s.n()) {
        throw std::invalid_argument("reduce_hom: host must be colored by V(S)");
    }
    if (s.g.has_loops() || t.g.has_loops()) {
        throw std::invalid_argument("reduce_hom: looped patterns are out of scope");
    }
    if (which == ReductionCase::A && !(t.g == s.g)) {
        throw std::invalid_argument("reduce_hom: case A requires S = T");
    }
    if (t.n() < s.n()) throw std::invalid_argument("reduce_hom: S must be a subgraph of T");
    for (const auto& [u, v] : s.g.edges) {
        if (!t.g.has_edge(u, v)) {
            throw std::invalid_argument("reduce_hom: S must be a subgraph of T");
        }
    }
    if (s_bound < t.n()) {
        throw std::invalid_argument("reduce_hom: support bound below |V(T)|");
    }
    // edges of the host outside the classes of E(S) never matter for hom(S,.)
    ColoredGraph host = restrict_to_edge_classes(g, s);
    MotifOracle p_col = lift_colored(p);

    ReductionReport report;
    report.result = 1;
    report.normalization = 1;
    auto snapshot = [&]() { return p_col.ledger(); };

    for (const auto& comp : connected_components(s.g)) {
        if (comp.graph.n == 1) {
            // isolated vertex of S: each host vertex of that color is an image
            int color = comp.vertex_map[0];
            Integer count = 0;
            for (int v = 0; v < host.n; ++v) {
                if (host.color[v] == color) ++count;
            }
            report.result *= Rational(count);
            continue;
        }
        // the component as a colorful graph in its own right
        int n_i = comp.graph.n;
        std::vector<int> idcol(n_i);
        for (int v = 0; v < n_i; ++v) idcol[v] = v;
        ColorfulGraph s_i(ColoredGraph::make(n_i, idcol, comp.graph.edges));
        ColoredGraph g_i = restrict_to_colors(host, comp.vertex_map);

        // T_i: the component in front, all remaining vertices of T as the
        // dummy part (other components of S are padding from this run's view,
        // since the oracle's expansion lives at full size)
        std::vector<int> t_vertices = comp.vertex_map;
        {
            std::vector<char> in_comp(t.n(), 0);
            for (int v : comp.vertex_map) in_comp[v] = 1;
            for (int v = 0; v < t.n(); ++v) {
                if (!in_comp[v]) t_vertices.push_back(v);
            }
        }
        ColoredGraph t_induced = induced_subgraph(t.g, t_vertices);
        int n_t = static_cast<int>(t_vertices.size());
        std::vector<int> t_idcol(n_t);
        for (int v = 0; v < n_t; ++v) t_idcol[v] = v;
        ColorfulGraph t_i(ColoredGraph::make(n_t, t_idcol, t_induced.edges));

        ColoredGraph comp_host = pad_host(g_i, s_i, t_i);
        ColoredGraph norm_host = pad_host(s_i.g, s_i, t_i);  // the G = S run

        QuantumGraph x = (filter == FilterKind::Cfi) ? cfi_filter(s_i)
                                                     : inclusion_exclusion_filter(s_i);
        x = extend_filter_colors(x, n_i, t_i.n());
        int dummies = t_i.n() - n_i;
        ColorCoarsening eta;
        if (dummies == 0) {
            eta = total_count_coarsening(n_i, n_i);
        } else {
            std::vector<int> part_s(n_i), part_d(dummies);
            for (int c = 0; c < n_i; ++c) part_s[c] = c;
            for (int c = 0; c < dummies; ++c) part_d[c] = n_i + c;
            eta = ColorCoarsening{{part_s, part_d}, {n_i, dummies}};
        }
        QuantumGraph card = cardinality_filter(eta, s_bound);

        auto before = snapshot();
        Rational val = apply_filters(p_col, {x, card}, comp_host);
        auto mid = snapshot();
        Rational q = apply_filters(p_col, {x, card}, norm_host);
        auto after = snapshot();
        report.oracle_calls += mid.calls - before.calls;
        report.normalization_calls += after.calls - mid.calls;
        report.max_call_size = std::max(report.max_call_size, after.max_vertices);
        if (q == 0) {
            throw PromiseViolation("reduce_hom: normalization is zero, the case-"
                                   + std::string(which == ReductionCase::A   ? "A"
                                                 : which == ReductionCase::B ? "B"
                                                                             : "C")
                                   + " promise did not hold for the oracle");
        }
        report.result *= val / q;
        report.normalization *= q;
    }
    return report;
}

ColoredGraph minor_lift(const ColorfulGraph& a, const ColorfulGraph& b,
                        const std::vector<std::vector<int>>& branch_sets, const ColoredGraph& g) {
    if (g.num_colors != a.n()) {
        throw std::invalid_argument("minor_lift: host is not colored by V(A)");
    }
    if (static_cast<int>(branch_sets.size()) != a.n()) {
        throw std::invalid_argument("minor_lift: need one branch set per vertex of A");
    }
    if (a.g.has_loops() || b.g.has_loops()) {
        throw std::invalid_argument("minor_lift: loops are out of scope");
    }
    if (g.n == 0) throw std::invalid_argument("minor_lift: host must be nonempty");
    std::vector<int> assigned(b.n(), -1);
    for (int v = 0; v < a.n(); ++v) {
        if (branch_sets[v].empty()) {
            throw std::invalid_argument("minor_lift: empty branch set");
        }
        for (int x : branch_sets[v]) {
            if (x < 0 || x >= b.n() || assigned[x] != -1) {
                throw std::invalid_argument("minor_lift: branch sets must be disjoint in V(B)");
            }
            assigned[x] = v;
        }
        if (!is_connected(induced_subgraph(b.g, branch_sets[v]))) {
            throw std::invalid_argument("minor_lift: branch set is not connected");
        }
    }
    // edge bookkeeping over B
    std::set<Edge> realized_a_edges;
    std::vector<char> branch_has_edge(a.n(), 0);
    std::vector<int> b_degree(b.n(), 0);
    for (const auto& [x, y] : b.g.edges) {
        ++b_degree[x];
        ++b_degree[y];
        int u = assigned[x], v = assigned[y];
        if (u >= 0) branch_has_edge[u] = 1;
        if (v >= 0) branch_has_edge[v] = 1;
        if (u >= 0 && v >= 0 && u != v) {
            if (!a.g.has_edge(u, v)) {
                throw std::invalid_argument(
                    "minor_lift: B has an edge between branch sets of non-adjacent vertices");
            }
            int lo = std::min(u, v), hi = std::max(u, v);
            realized_a_edges.insert({lo, hi});
        }
    }
    for (const auto& [u, v] : a.g.edges) {
        if (!realized_a_edges.count({u, v})) {
            throw std::invalid_argument("minor_lift: an edge of A has no realizing edge in B");
        }
    }
    for (int v = 0; v < a.n(); ++v) {
        if (!branch_has_edge[v]) {
            throw std::invalid_argument("minor_lift: a branch set has no incident edge");
        }
    }
    for (int x = 0; x < b.n(); ++x) {
        if (assigned[x] < 0 && b_degree[x] == 0) {
            throw std::invalid_argument("minor_lift: isolated unassigned vertex in B");
        }
    }
    // G': all pairs (x, bvertex), colored by the B coordinate
    int nb = b.n();
    auto id = [nb](int x, int bv) { return x * nb + bv; };
    std::vector<int> colors(g.n * nb);
    for (int x = 0; x < g.n; ++x) {
        for (int bv = 0; bv < nb; ++bv) colors[id(x, bv)] = bv;
    }
    const int anchor = 0;  // unassigned structure lives in this host column
    std::vector<Edge> edges;
    for (const auto& [bx, by] : b.g.edges) {
        int u = assigned[bx], v = assigned[by];
        if (u >= 0 && u == v) {
            // inside one branch set: realized in every column of that color
            for (int x = 0; x < g.n; ++x) {
                if (g.color[x] == u) edges.push_back({id(x, bx), id(x, by)});
            }
        } else if (u >= 0 && v >= 0) {
            // between branch sets: realized across every host edge of class uv
            for (const auto& [x, y] : g.edges) {
                if (g.color[x] == u && g.color[y] == v) {
                    edges.push_back({id(x, bx), id(y, by)});
                } else if (g.color[x] == v && g.color[y] == u) {
                    edges.push_back({id(x, by), id(y, bx)});
                }
            }
        } else if (u < 0 && v < 0) {
            edges.push_back({id(anchor, bx), id(anchor, by)});
        } else {
            // one endpoint unassigned: pin it to the anchor column, joined to
            // every possible placement of the assigned side
            int bu = (u >= 0) ? bx : by;         // assigned B endpoint
            int bf = (u >= 0) ? by : bx;         // unassigned ("free") endpoint
            int color = (u >= 0) ? u : v;
            for (int y = 0; y < g.n; ++y) {
                if (g.color[y] == color) edges.push_back({id(anchor, bf), id(y, bu)});
            }
        }
    }
    return ColoredGraph::make(nb, colors, edges);
}

}  // namespace homcfi
