#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homcfi {

using Edge = std::pair<int, int>;  // normalized: first <= second; first == second is a self-loop

/// Vertex-colored undirected graph. Vertices are dense ids 0..n-1, colors are
/// dense ids 0..num_colors-1 (an uncolored graph is a single-color graph).
/// Self-loops are allowed, parallel edges are not. Edges are kept sorted and
/// unique, so equal graphs serialize identically.
struct ColoredGraph {
    int n = 0;
    int num_colors = 1;
    std::vector<int> color;   // size n
    std::vector<Edge> edges;  // normalized, lexicographically sorted, unique
    std::vector<std::string> labels;  // optional per-vertex annotations (size 0 or n)

    static ColoredGraph make(int num_colors, std::vector<int> colors, std::vector<Edge> edge_list,
                             std::vector<std::string> labels = {});

    bool operator==(const ColoredGraph& other) const {
        return n == other.n && num_colors == other.num_colors && color == other.color &&
               edges == other.edges;
    }

    bool has_edge(int u, int v) const;
    int degree(int v) const;  // a self-loop contributes 1
    int max_degree() const;
    bool has_loops() const;

    std::vector<int> vertices_of_color(int c) const;
    std::vector<int> color_class_sizes() const;
};

/// Adjacency as bitset rows; built once per graph where counting needs it.
struct Adjacency {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit Adjacency(const ColoredGraph& g);
    bool at(int u, int v) const { return (bits[u * words + (v >> 6)] >> (v & 63)) & 1u; }
};

std::vector<std::vector<int>> neighbor_lists(const ColoredGraph& g);

/// H° — same vertices and edges, single color.
ColoredGraph strip_colors(const ColoredGraph& g);

/// H^c — replace the coloring, keep adjacency. c must be total on V(H).
ColoredGraph apply_coloring(const ColoredGraph& g, const std::vector<int>& c, int num_colors);

bool is_colorful(const ColoredGraph& g);

/// Wrapper asserting the colorful convention: color(v) == v and num_colors == n.
struct ColorfulGraph {
    ColoredGraph g;
    explicit ColorfulGraph(ColoredGraph graph);
    int n() const { return g.n; }
};

/// Colorful graph from an uncolored structure (identity coloring).
ColorfulGraph make_colorful(const ColoredGraph& g);

/// Elementary r x r wall: the r x r square grid with every odd-indexed edge of
/// every odd-indexed column and every even-indexed edge of every even-indexed
/// column deleted (1-based indices, columns are the vertical edge runs).
/// Max degree <= 3. Convention for r = 1: a single edge.
ColoredGraph elementary_wall(int r, bool colorful);

/// Splits one edge of a single-edge subdivision: replaces edge uv by u-w-v with
/// a fresh vertex w carrying the given color.
ColoredGraph subdivide_edge(const ColoredGraph& g, Edge e, int new_color);

/// E_ij(H): partition of E(H) by endpoint-color pairs, keyed by (min,max) color.
std::map<Edge, std::vector<Edge>> edge_color_classes(const ColoredGraph& h, const ColorfulGraph& s);

/// True iff H is S-colored (every edge lies over an edge of S) and every edge
/// class E_ij(H) with ij in E(S) is nonempty.
bool is_surjectively_colored(const ColoredGraph& h, const ColorfulGraph& s);

struct Component {
    ColoredGraph graph;             // colors inherited from the parent graph
    std::vector<int> vertex_map;    // component vertex -> parent vertex
};

std::vector<Component> connected_components(const ColoredGraph& g);
bool is_connected(const ColoredGraph& g);

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

/// Induced subgraph on the given vertices (kept in the given order).
ColoredGraph induced_subgraph(const ColoredGraph& g, const std::vector<int>& vertices);

/// Keeps vertices whose color is in `colors` and remaps colors densely in the
/// order given. Returns the graph plus the old-color order used for remapping.
ColoredGraph restrict_to_colors(const ColoredGraph& g, const std::vector<int>& colors);

/// Deletes every edge of g whose color pair is not an edge of s (the canonical
/// form of g tensor s for an edge-subgraph s of the colorful base).
ColoredGraph restrict_to_edge_classes(const ColoredGraph& g, const ColorfulGraph& s);

}  // namespace homcfi
