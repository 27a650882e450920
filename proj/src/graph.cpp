#include "homcfi/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcfi {

ColoredGraph ColoredGraph::make(int num_colors, std::vector<int> colors, std::vector<Edge> edge_list,
                                std::vector<std::string> labels) {
    ColoredGraph g;
    g.n = static_cast<int>(colors.size());
    g.num_colors = num_colors;
    if (num_colors < 1) throw std::invalid_argument("graph needs at least one color");
    for (int c : colors) {
        if (c < 0 || c >= num_colors) throw std::invalid_argument("vertex color out of range");
    }
    g.color = std::move(colors);
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
            throw std::invalid_argument("edge endpoint is not a declared vertex");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    g.edges = std::move(edge_list);
    if (!labels.empty() && static_cast<int>(labels.size()) != g.n) {
        throw std::invalid_argument("labels must be empty or one per vertex");
    }
    g.labels = std::move(labels);
    return g;
}

bool ColoredGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

int ColoredGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v || b == v) ++d;
    }
    return d;
}

int ColoredGraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        if (b != a) ++deg[b];
    }
    int m = 0;
    for (int d : deg) m = std::max(m, d);
    return m;
}

bool ColoredGraph::has_loops() const {
    for (const auto& [a, b] : edges) {
        if (a == b) return true;
    }
    return false;
}

std::vector<int> ColoredGraph::vertices_of_color(int c) const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (color[v] == c) out.push_back(v);
    }
    return out;
}

std::vector<int> ColoredGraph::color_class_sizes() const {
    std::vector<int> sizes(num_colors, 0);
    for (int v = 0; v < n; ++v) ++sizes[color[v]];
    return sizes;
}

Adjacency::Adjacency(const ColoredGraph& g) : n(g.n), words((g.n + 63) / 64), bits() {
    bits.assign(static_cast<std::size_t>(n) * words, 0);
    auto set = [&](int u, int v) { bits[u * words + (v >> 6)] |= std::uint64_t(1) << (v & 63); };
    for (const auto& [u, v] : g.edges) {
        set(u, v);
        set(v, u);
    }
}

std::vector<std::vector<int>> neighbor_lists(const ColoredGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    return adj;
}

ColoredGraph strip_colors(const ColoredGraph& g) {
    return ColoredGraph::make(1, std::vector<int>(g.n, 0), g.edges, g.labels);
}

ColoredGraph apply_coloring(const ColoredGraph& g, const std::vector<int>& c, int num_colors) {
    if (static_cast<int>(c.size()) != g.n) {
        throw std::invalid_argument("coloring must be total on the vertex set");
    }
    return ColoredGraph::make(num_colors, c, g.edges, g.labels);
}

bool is_colorful(const ColoredGraph& g) {
    if (g.num_colors != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        if (g.color[v] != v) return false;
    }
    return true;
}

ColorfulGraph::ColorfulGraph(ColoredGraph graph) : g(std::move(graph)) {
    if (!is_colorful(g)) {
        throw std::invalid_argument("colorful graph must carry the identity coloring on 0..n-1");
    }
}

ColorfulGraph make_colorful(const ColoredGraph& g) {
    std::vector<int> idcol(g.n);
    for (int v = 0; v < g.n; ++v) idcol[v] = v;
    return ColorfulGraph(ColoredGraph::make(g.n, idcol, g.edges, g.labels));
}

ColoredGraph elementary_wall(int r, bool colorful) {
    if (r < 1) throw std::invalid_argument("wall size must be positive");
    std::vector<Edge> edges;
    int n;
    if (r == 1) {
        // degenerate grid column: a single edge
        n = 2;
        edges.push_back({0, 1});
    } else {
        n = r * r;
        auto id = [&](int i, int j) { return (i - 1) * r + (j - 1); };  // row i, column j, 1-based
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j < r; ++j) edges.push_back({id(i, j), id(i, j + 1)});
        }
        for (int j = 1; j <= r; ++j) {
            for (int i = 1; i < r; ++i) {
                bool deleted = (j % 2 == 1) ? (i % 2 == 1) : (i % 2 == 0);
                if (!deleted) edges.push_back({id(i, j), id(i + 1, j)});
            }
        }
    }
    if (colorful) {
        std::vector<int> idcol(n);
        for (int v = 0; v < n; ++v) idcol[v] = v;
        return ColoredGraph::make(n, idcol, edges);
    }
    return ColoredGraph::make(1, std::vector<int>(n, 0), edges);
}

ColoredGraph subdivide_edge(const ColoredGraph& g, Edge e, int new_color) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge to subdivide not present");
    std::vector<Edge> edges;
    for (const auto& ed : g.edges) {
        if (ed != e) edges.push_back(ed);
    }
    int w = g.n;
    edges.push_back({e.first, w});
    edges.push_back({e.second, w});
    std::vector<int> colors = g.color;
    colors.push_back(new_color);
    return ColoredGraph::make(std::max(g.num_colors, new_color + 1), colors, edges);
}

std::map<Edge, std::vector<Edge>> edge_color_classes(const ColoredGraph& h, const ColorfulGraph& s) {
    if (h.num_colors > s.n()) {
        throw std::invalid_argument("color set of H must be contained in V(S)");
    }
    std::map<Edge, std::vector<Edge>> classes;
    for (const auto& [i, j] : s.g.edges) classes[{i, j}] = {};
    for (const auto& [u, v] : h.edges) {
        int i = h.color[u], j = h.color[v];
        if (i > j) std::swap(i, j);
        classes[{i, j}].push_back({u, v});
    }
    return classes;
}

bool is_surjectively_colored(const ColoredGraph& h, const ColorfulGraph& s) {
    if (h.num_colors > s.n()) return false;
    for (const auto& [u, v] : h.edges) {
        if (!s.g.has_edge(h.color[u], h.color[v])) return false;  // not S-colored
    }
    auto classes = edge_color_classes(h, s);
    for (const auto& [i, j] : s.g.edges) {
        if (classes.at({i, j}).empty()) return false;
    }
    return true;
}

std::vector<Component> connected_components(const ColoredGraph& g) {
    auto adj = neighbor_lists(g);
    std::vector<int> comp(g.n, -1);
    int num = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = num;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (comp[w] < 0) {
                    comp[w] = num;
                    stack.push_back(w);
                }
            }
        }
        ++num;
    }
    std::vector<Component> out(num);
    std::vector<std::vector<int>> members(num);
    for (int v = 0; v < g.n; ++v) members[comp[v]].push_back(v);
    for (int c = 0; c < num; ++c) {
        out[c].graph = induced_subgraph(g, members[c]);
        out[c].vertex_map = members[c];
    }
    return out;
}

bool is_connected(const ColoredGraph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.num_colors != b.num_colors) {
        throw std::invalid_argument("disjoint union requires a shared color set");
    }
    std::vector<int> colors = a.color;
    colors.insert(colors.end(), b.color.begin(), b.color.end());
    std::vector<Edge> edges = a.edges;
    for (const auto& [u, v] : b.edges) edges.push_back({u + a.n, v + a.n});
    return ColoredGraph::make(a.num_colors, colors, edges);
}

ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<int> colors;
    colors.reserve(vertices.size());
    std::vector<std::string> labels;
    for (int v : vertices) {
        colors.push_back(g.color[v]);
        if (!g.labels.empty()) labels.push_back(g.labels[v]);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges) {
        if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
    }
    return ColoredGraph::make(g.num_colors, colors, edges, labels);
}

ColoredGraph restrict_to_colors(const ColoredGraph& g, const std::vector<int>& colors) {
    std::vector<int> remap(g.num_colors, -1);
    for (std::size_t i = 0; i < colors.size(); ++i) remap[colors[i]] = static_cast<int>(i);
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v) {
        if (remap[g.color[v]] >= 0) keep.push_back(v);
    }
    ColoredGraph sub = induced_subgraph(g, keep);
    std::vector<int> newcol(sub.n);
    for (int v = 0; v < sub.n; ++v) newcol[v] = remap[sub.color[v]];
    return ColoredGraph::make(static_cast<int>(colors.size()), newcol, sub.edges, sub.labels);
}

ColoredGraph restrict_to_edge_classes(const ColoredGraph& g, const ColorfulGraph& s) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges) {
        if (s.g.has_edge(g.color[u], g.color[v])) edges.push_back({u, v});
    }
    return ColoredGraph::make(g.num_colors, g.color, edges, g.labels);
}

}  // namespace homcfi
