#pragma once

#include "homcfi/counting.hpp"
#include "homcfi/graph.hpp"
#include "homcfi/rational.hpp"

#include <utility>
#include <vector>

namespace homcfi {

/// Formal rational linear combination of pairwise non-isomorphic colored
/// graphs on one shared color set. Constituents are kept in a canonical,
/// input-order-independent order.
struct QuantumGraph {
    int num_colors = 1;
    std::vector<Rational> coefficients;
    std::vector<ColoredGraph> constituents;

    std::size_t size() const { return constituents.size(); }
    bool empty() const { return constituents.empty(); }
};

using WeightedGraphs = std::vector<std::pair<Rational, ColoredGraph>>;

/// Merges isomorphic constituents (summing coefficients), drops zero terms,
/// and sorts into canonical order. Rejects mixed color sets.
QuantumGraph collect(const WeightedGraphs& terms);

QuantumGraph quantum_scale(const QuantumGraph& q, const Rational& factor);
QuantumGraph quantum_add(const QuantumGraph& a, const QuantumGraph& b);

/// Colored tensor product: V_i(G (x) X) = V_i(G) x V_i(X), with an edge
/// (u_G,u_X)(v_G,v_X) iff u_G v_G in E(G) and u_X v_X in E(X).
ColoredGraph tensor(const ColoredGraph& g, const ColoredGraph& x);

QuantumGraph tensor_quantum(const QuantumGraph& a, const QuantumGraph& b);

/// p(Q) = sum of coefficient * p(constituent); one oracle call per constituent.
Rational evaluate_linear(const MotifOracle& p, const QuantumGraph& q);

/// hom(H, Q) with the built-in exact counter.
Rational hom_quantum(const ColoredGraph& h, const QuantumGraph& q);

}  // namespace homcfi
