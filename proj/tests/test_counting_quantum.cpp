#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcfi/counting.hpp"
#include "homcfi/generate.hpp"
#include "homcfi/iso.hpp"
#include "homcfi/json_io.hpp"
#include "homcfi/quantum.hpp"

#include <random>

using namespace homcfi;

namespace {

ColoredGraph complete_uncolored(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return ColoredGraph::make(1, std::vector<int>(n, 0), edges);
}

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

// Reference homomorphism counter: enumerate all color-respecting maps.
Integer hom_brute(const ColoredGraph& h, const ColoredGraph& g) {
    std::vector<int> img(h.n, 0);
    Integer count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == h.n) {
            for (const auto& [a, b] : h.edges) {
                if (!g.has_edge(img[a], img[b])) return;
            }
            ++count;
            return;
        }
        for (int w = 0; w < g.n; ++w) {
            if (g.color[w] != h.color[v]) continue;
            img[v] = w;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

TEST_CASE("frozen homomorphism counts") {
    CHECK(hom_count(elementary_wall(1, false), complete_uncolored(3)) == 6);
    CHECK(hom_count(complete_uncolored(3), elementary_wall(1, false)) == 0);
    CHECK(hom_count(path_uncolored(3), complete_uncolored(3)) == 12);
    // hom(S,S) = 1 for colorful S
    for (int n = 2; n <= 5; ++n) {
        CHECK(hom_count(complete_colorful(n), complete_colorful(n)) == 1);
    }
    auto wall = elementary_wall(3, true);
    CHECK(hom_count(wall, wall) == 1);
    // empty pattern has the unique empty map
    CHECK(hom_count(ColoredGraph::make(1, {}, {}), complete_uncolored(3)) == 1);
}

TEST_CASE("hom agrees with plain enumeration on random inputs") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = random_colored_graph(rng, 5, 2, 0.5, true);
        auto g = random_colored_graph(rng, 6, 2, 0.5, true);
        CHECK(hom_count(h, g) == hom_brute(h, g));
    }
}

TEST_CASE("hom factors over pattern components") {
    std::mt19937_64 rng(55);
    auto h1 = random_colored_graph(rng, 4, 2, 0.6);
    auto h2 = random_colored_graph(rng, 3, 2, 0.6);
    auto g = random_colored_graph(rng, 6, 2, 0.5, true);
    CHECK(hom_count(disjoint_union(h1, h2), g) == hom_count(h1, g) * hom_count(h2, g));
}

TEST_CASE("frozen subgraph and induced counts") {
    CHECK(sub_count(elementary_wall(1, false), complete_uncolored(3)) == 3);
    CHECK(sub_count(complete_uncolored(3), complete_uncolored(3)) == 1);
    CHECK(sub_count(path_uncolored(3), complete_uncolored(3)) == 3);
    CHECK(injective_hom_count(path_uncolored(3), complete_uncolored(3)) == 6);
    CHECK(ind_count(elementary_wall(1, false), path_uncolored(3)) == 2);
    CHECK(ind_count(ColoredGraph::make(1, {0, 0}, {}), path_uncolored(3)) == 1);
    CHECK(ind_count(path_uncolored(3), complete_uncolored(3)) == 0);
    CHECK(sub_count(elementary_wall(1, false), complete_uncolored(5)) == 10);
}

TEST_CASE("sub respects colors") {
    auto h = ColoredGraph::make(2, {0, 1}, {{0, 1}});
    auto g = ColoredGraph::make(2, {0, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(sub_count(h, g) == 2);
    CHECK(ind_count(h, g) == 2);
}

TEST_CASE("oracle ledger records calls and sizes; copies share it") {
    auto oracle = make_oracle(OracleKind::Hom, elementary_wall(1, false));
    auto copy = oracle;
    CHECK(oracle(complete_uncolored(3)) == 6);
    CHECK(copy(complete_uncolored(4)) == 12);
    CHECK(oracle.ledger().calls == 2);
    CHECK(oracle.ledger().max_vertices == 4);
    oracle.reset_ledger();
    CHECK(copy.ledger().calls == 0);
    CHECK(oracle.support_bound() == 2);
    CHECK(oracle.pure());
}

TEST_CASE("collect merges isomorphic constituents and drops zeros") {
    auto k3a = complete_uncolored(3);
    std::mt19937_64 rng(8);
    auto k3b = random_relabel(rng, k3a);
    auto merged = collect({{Rational(1, 2), k3a}, {Rational(1, 2), k3b}});
    REQUIRE(merged.size() == 1);
    CHECK(merged.coefficients[0] == 1);
    auto cancelled = collect({{Rational(1), k3a}, {Rational(-1), k3b}});
    CHECK(cancelled.empty());
}

TEST_CASE("collect is order-independent") {
    std::mt19937_64 rng(21);
    WeightedGraphs terms;
    for (int i = 0; i < 6; ++i) {
        terms.emplace_back(Rational(i + 1, 3), random_colored_graph(rng, 5, 2, 0.5));
    }
    auto a = collect(terms);
    std::reverse(terms.begin(), terms.end());
    auto b = collect(terms);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.coefficients[i] == b.coefficients[i]);
        CHECK(a.constituents[i] == b.constituents[i]);
    }
    CHECK(quantum_to_json(a) == quantum_to_json(b));
}

TEST_CASE("worked example: F = (1/24)K4 - (1/6)K3") {
    auto f = collect({{Rational(1, 24), complete_uncolored(4)},
                      {Rational(-1, 6), complete_uncolored(3)}});
    REQUIRE(f.size() == 2);
    CHECK(evaluate_linear(make_oracle(OracleKind::Hom, elementary_wall(1, false)), f) ==
          Rational(-1, 2));
    CHECK(hom_quantum(complete_uncolored(3), f) == 0);
    CHECK(hom_quantum(complete_uncolored(4), f) == 1);
}

TEST_CASE("evaluate_linear makes one oracle call per constituent") {
    auto f = collect({{Rational(1, 24), complete_uncolored(4)},
                      {Rational(-1, 6), complete_uncolored(3)}});
    auto oracle = make_oracle(OracleKind::Hom, elementary_wall(1, false));
    evaluate_linear(oracle, f);
    CHECK(oracle.ledger().calls == 2);
    CHECK(evaluate_linear(oracle, QuantumGraph{}) == 0);
}

TEST_CASE("tensor: per-class sizes multiply") {
    std::mt19937_64 rng(31);
    auto g = random_colored_graph(rng, 6, 3, 0.5, true);
    auto x = random_colored_graph(rng, 5, 3, 0.5, true);
    auto t = tensor(g, x);
    auto gs = g.color_class_sizes(), xs = x.color_class_sizes(), ts = t.color_class_sizes();
    for (int c = 0; c < 3; ++c) {
        CHECK(ts[c] == gs[c] * xs[c]);
    }
}

TEST_CASE("tensor with the colorful base is the identity on S-colored graphs") {
    auto s = make_colorful(complete_colorful(3));
    std::mt19937_64 rng(77);
    auto g = random_s_colored_graph(rng, s, 2, 0.7);
    CHECK(are_isomorphic(tensor(g, s.g), g));
}

TEST_CASE("hom is multiplicative over the tensor product (Fact 4)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_colored_graph(rng, 4, 2, 0.6);
        auto g = random_colored_graph(rng, 5, 2, 0.5, true);
        auto x = random_colored_graph(rng, 5, 2, 0.5, true);
        CHECK(hom_count(f, tensor(g, x)) == hom_count(f, g) * hom_count(f, x));
    }
}

TEST_CASE("hom is multiplicative over quantum tensor products") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_colored_graph(rng, 4, 2, 0.6);
        auto q1 = collect({{Rational(1, 2), random_colored_graph(rng, 4, 2, 0.5, true)},
                           {Rational(-2), random_colored_graph(rng, 4, 2, 0.5, true)}});
        auto q2 = collect({{Rational(3), random_colored_graph(rng, 4, 2, 0.5, true)},
                           {Rational(1, 3), random_colored_graph(rng, 4, 2, 0.5, true)}});
        CHECK(hom_quantum(f, tensor_quantum(q1, q2)) == hom_quantum(f, q1) * hom_quantum(f, q2));
    }
}

TEST_CASE("graph JSON round-trips bit-exactly") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_colored_graph(rng, 7, 3, 0.4, true);
        std::string text = graph_to_json(g);
        auto back = graph_from_json(text);
        CHECK(back == g);
        CHECK(graph_to_json(back) == text);
    }
}

TEST_CASE("quantum JSON round-trips bit-exactly with rational strings") {
    auto f = collect({{Rational(1, 24), complete_uncolored(4)},
                      {Rational(-1, 6), complete_uncolored(3)}});
    std::string text = quantum_to_json(f);
    CHECK(text.find("\"1/24\"") != std::string::npos);
    CHECK(text.find("\"-1/6\"") != std::string::npos);
    auto back = quantum_from_json(text);
    CHECK(quantum_to_json(back) == text);
    REQUIRE(back.size() == 2);
    CHECK(back.coefficients == f.coefficients);
}

TEST_CASE("DOT export mentions every vertex with its color") {
    auto g = ColoredGraph::make(2, {0, 1}, {{0, 1}});
    auto dot = graph_to_dot(g, "pair");
    CHECK(dot.find("graph pair {") != std::string::npos);
    CHECK(dot.find("0 [color=0") != std::string::npos);
    CHECK(dot.find("1 [color=1") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(tensor(complete_uncolored(2), complete_colorful(2)), std::invalid_argument);
}
