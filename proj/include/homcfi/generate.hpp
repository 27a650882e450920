#pragma once

#include "homcfi/graph.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace homcfi {

/// All randomized helpers take an explicit std::mt19937_64 so every run is
/// reproducible from a single seed.

inline ColoredGraph random_colored_graph(std::mt19937_64& rng, int n, int num_colors,
                                         double edge_prob, bool allow_loops = false) {
    std::uniform_int_distribution<int> pick_color(0, num_colors - 1);
    std::bernoulli_distribution flip(edge_prob);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = pick_color(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = allow_loops ? u : u + 1; v < n; ++v) {
            if (flip(rng)) edges.push_back({u, v});
        }
    }
    return ColoredGraph::make(num_colors, colors, edges);
}

/// A color-preservingly isomorphic copy of g under a uniform vertex relabeling.
inline ColoredGraph random_relabel(std::mt19937_64& rng, const ColoredGraph& g) {
    std::vector<int> perm(g.n);
    for (int v = 0; v < g.n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> colors(g.n);
    std::vector<std::string> labels(g.labels.empty() ? 0 : g.n);
    for (int v = 0; v < g.n; ++v) {
        colors[perm[v]] = g.color[v];
        if (!g.labels.empty()) labels[perm[v]] = g.labels[v];
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges) edges.push_back({perm[u], perm[v]});
    return ColoredGraph::make(g.num_colors, colors, edges, labels);
}

/// Random S-colored host: class_size vertices per color of S, each potential
/// edge over an edge of S kept with probability edge_prob. With ensure_surjective,
/// one edge per class of E(S) is forced so the result is surjectively S-colored.
inline ColoredGraph random_s_colored_graph(std::mt19937_64& rng, const ColorfulGraph& s,
                                           int class_size, double edge_prob,
                                           bool ensure_surjective = true) {
    int n = s.n() * class_size;
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = v / class_size;
    std::bernoulli_distribution flip(edge_prob);
    std::vector<Edge> edges;
    for (const auto& [i, j] : s.g.edges) {
        bool any = false;
        for (int a = 0; a < class_size; ++a) {
            for (int b = 0; b < class_size; ++b) {
                if (i == j && b < a) continue;
                if (flip(rng)) {
                    edges.push_back({i * class_size + a, j * class_size + b});
                    any = true;
                }
            }
        }
        if (ensure_surjective && !any) edges.push_back({i * class_size, j * class_size});
    }
    return ColoredGraph::make(s.n(), colors, edges);
}

/// Random connected uncolored graph: a random spanning tree plus extra edges.
inline ColoredGraph random_connected_graph(std::mt19937_64& rng, int n, double extra_edge_prob) {
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> earlier(0, v - 1);
        edges.push_back({earlier(rng), v});
    }
    std::bernoulli_distribution flip(extra_edge_prob);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (flip(rng)) edges.push_back({u, v});
        }
    }
    return ColoredGraph::make(1, std::vector<int>(n, 0), edges);
}

/// Random spanning-tree-shaped colorful graph (max degree tracked by retries).
inline ColoredGraph random_colorful_tree(std::mt19937_64& rng, int n, int max_degree = 3) {
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> earlier(0, v - 1);
        int u = earlier(rng);
        for (int tries = 0; deg[u] >= max_degree && tries < 64; ++tries) u = earlier(rng);
        edges.push_back({u, v});
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> idcol(n);
    for (int v = 0; v < n; ++v) idcol[v] = v;
    return ColoredGraph::make(n, idcol, edges);
}

}  // namespace homcfi
