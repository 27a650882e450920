#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcfi/generate.hpp"
#include "homcfi/graph.hpp"
#include "homcfi/iso.hpp"

#include <random>
#include <set>

using namespace homcfi;

namespace {

ColoredGraph complete_colorful(int n) {
    std::vector<int> colors(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) colors[v] = v;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return ColoredGraph::make(n, colors, edges);
}

ColoredGraph path_uncolored(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return ColoredGraph::make(1, std::vector<int>(n, 0), edges);
}

// Splits an edge uv over base colors (i,j) into the length-3 path u-a-b-v with
// color(a)=j, color(b)=i, so every new edge still lies over the base edge ij.
ColoredGraph split_edge(const ColoredGraph& h, Edge e) {
    int i = h.color[e.first], j = h.color[e.second];
    ColoredGraph out = subdivide_edge(h, e, j);  // u-a (over ij), v-a (inside class j)
    int a = out.n - 1;
    Edge va{std::min(e.second, a), std::max(e.second, a)};
    return subdivide_edge(out, va, i);  // v-b, a-b, both over ij
}

}  // namespace

TEST_CASE("edge normalization: reversed and duplicate edges collapse") {
    auto g = ColoredGraph::make(1, {0, 0, 0}, {{2, 0}, {0, 2}, {1, 0}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(1, 2));
}

TEST_CASE("self-loops are kept and counted once in degree") {
    auto g = ColoredGraph::make(1, {0, 0}, {{0, 0}, {0, 1}});
    CHECK(g.has_loops());
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("make rejects out-of-range endpoints and colors") {
    CHECK_THROWS_AS(ColoredGraph::make(1, {0, 0}, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredGraph::make(1, {0, 1}, {}), std::invalid_argument);
}

TEST_CASE("elementary wall: 1x1 is a single edge") {
    auto w = elementary_wall(1, false);
    CHECK(w.n == 2);
    CHECK(w.edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("elementary wall: 2x2 is the path on four vertices") {
    auto w = elementary_wall(2, false);
    CHECK(w.n == 4);
    CHECK(w.edges.size() == 3);
    CHECK(are_isomorphic(w, path_uncolored(4)));
}

TEST_CASE("elementary wall: 3x3 shape and degree bound") {
    auto w = elementary_wall(3, false);
    CHECK(w.n == 9);
    CHECK(w.edges.size() == 9);
    CHECK(is_connected(w));
    for (int r = 1; r <= 8; ++r) {
        CHECK(elementary_wall(r, false).max_degree() <= 3);
    }
}

TEST_CASE("colorful wall carries the identity coloring") {
    auto w = elementary_wall(3, true);
    CHECK(is_colorful(w));
    ColorfulGraph wrapped(w);
    CHECK(wrapped.n() == 9);
}

TEST_CASE("edge-splits keep surjective coloring and add two vertices each") {
    auto s = make_colorful(elementary_wall(2, true));
    ColoredGraph h = s.g;
    for (int k = 1; k <= 3; ++k) {
        h = split_edge(h, h.edges.front());
        CHECK(h.n == s.n() + 2 * k);
        CHECK(is_surjectively_colored(h, s));
    }
}

TEST_CASE("edge color classes partition the edges of an S-colored graph") {
    auto s = make_colorful(complete_colorful(3));
    std::mt19937_64 rng(7);
    auto g = random_s_colored_graph(rng, s, 2, 0.8);
    auto classes = edge_color_classes(g, s);
    std::size_t total = 0;
    for (const auto& [key, members] : classes) total += members.size();
    CHECK(total == g.edges.size());
    CHECK(classes.size() == s.g.edges.size());
    CHECK(is_surjectively_colored(g, s));
}

TEST_CASE("restrict_to_edge_classes drops exactly the off-base classes") {
    auto s3 = make_colorful(complete_colorful(3));
    auto s_sub = ColorfulGraph(ColoredGraph::make(3, {0, 1, 2}, {{0, 1}, {0, 2}}));
    std::mt19937_64 rng(11);
    auto g = random_s_colored_graph(rng, s3, 2, 0.9);
    auto cut = restrict_to_edge_classes(g, s_sub);
    for (const auto& [u, v] : cut.edges) {
        CHECK(s_sub.g.has_edge(cut.color[u], cut.color[v]));
    }
    CHECK(cut.n == g.n);
}

TEST_CASE("connected components partition vertices and inherit colors") {
    auto g = disjoint_union(path_uncolored(3), path_uncolored(2));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n + comps[1].graph.n == 5);
    std::set<int> seen;
    for (const auto& c : comps) {
        for (int v : c.vertex_map) seen.insert(v);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("isomorphism is reflexive and symmetric on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_colored_graph(rng, 8, 3, 0.4, true);
        CHECK(are_isomorphic(g, g));
        auto h = random_relabel(rng, g);
        auto fwd = find_isomorphism(g, h);
        REQUIRE(fwd.has_value());
        CHECK(verify_isomorphism(g, h, *fwd));
        auto bwd = find_isomorphism(h, g);
        REQUIRE(bwd.has_value());
        CHECK(verify_isomorphism(h, g, *bwd));
    }
}

TEST_CASE("non-isomorphic pairs are rejected") {
    CHECK(!are_isomorphic(path_uncolored(4), elementary_wall(1, false)));
    // same degree sequence, different structure: C6 vs two triangles
    auto c6 = ColoredGraph::make(1, std::vector<int>(6, 0),
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    auto k3 = ColoredGraph::make(1, {0, 0, 0}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(!are_isomorphic(c6, disjoint_union(k3, k3)));
    // color obstruction: same structure, different coloring
    auto a = ColoredGraph::make(2, {0, 1}, {{0, 1}});
    auto b = ColoredGraph::make(2, {0, 0}, {{0, 1}});
    CHECK(!are_isomorphic(a, b));
}

TEST_CASE("colorful graphs are rigid") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(automorphism_count(complete_colorful(n)) == 1);
    }
    CHECK(automorphism_count(make_colorful(elementary_wall(3, true)).g, 12) == 1);
}

TEST_CASE("known automorphism counts") {
    CHECK(automorphism_count(path_uncolored(3)) == 2);
    CHECK(automorphism_count(strip_colors(complete_colorful(4))) == 24);
    auto c5 = ColoredGraph::make(1, std::vector<int>(5, 0),
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(automorphism_count(c5) == 10);
}

TEST_CASE("canonical key agrees with isomorphism") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_colored_graph(rng, 7, 2, 0.5, true);
        auto h = random_relabel(rng, g);
        CHECK(canonical_key(g) == canonical_key(h));
        auto other = random_colored_graph(rng, 7, 2, 0.5, true);
        CHECK((canonical_key(g) == canonical_key(other)) == are_isomorphic(g, other));
    }
}

TEST_CASE("canonical key handles complete graphs without blowup") {
    std::mt19937_64 rng(5);
    auto k9 = strip_colors(complete_colorful(9));
    CHECK(canonical_key(k9) == canonical_key(random_relabel(rng, k9)));
}
