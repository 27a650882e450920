#include "homcfi/quantum.hpp"

#include "homcfi/iso.hpp"

#include <map>
#include <stdexcept>

namespace homcfi {

QuantumGraph collect(const WeightedGraphs& terms) {
    QuantumGraph out;
    if (terms.empty()) return out;
    out.num_colors = terms.front().second.num_colors;
    // keyed by canonical form, ordered by (|V|, |E|, canonical key): merging
    // and ordering are independent of the order terms arrive in
    using OrderKey = std::tuple<int, std::size_t, std::string>;
    std::map<OrderKey, std::pair<Rational, const ColoredGraph*>> merged;
    for (const auto& [coeff, graph] : terms) {
        if (graph.num_colors != out.num_colors) {
            throw std::invalid_argument("collect: constituents must share one color set");
        }
        OrderKey key{graph.n, graph.edges.size(), canonical_key(graph)};
        auto [it, fresh] = merged.try_emplace(std::move(key), coeff, &graph);
        if (!fresh) it->second.first += coeff;
    }
    for (const auto& [key, entry] : merged) {
        if (entry.first == 0) continue;
        out.coefficients.push_back(entry.first);
        out.constituents.push_back(*entry.second);
    }
    return out;
}

QuantumGraph quantum_scale(const QuantumGraph& q, const Rational& factor) {
    if (factor == 0) return QuantumGraph{q.num_colors, {}, {}};
    QuantumGraph out = q;
    for (auto& c : out.coefficients) c *= factor;
    return out;
}

QuantumGraph quantum_add(const QuantumGraph& a, const QuantumGraph& b) {
    if (!a.empty() && !b.empty() && a.num_colors != b.num_colors) {
        throw std::invalid_argument("quantum_add: color sets differ");
    }
    WeightedGraphs terms;
    for (std::size_t i = 0; i < a.size(); ++i) terms.emplace_back(a.coefficients[i], a.constituents[i]);
    for (std::size_t i = 0; i < b.size(); ++i) terms.emplace_back(b.coefficients[i], b.constituents[i]);
    if (terms.empty()) return a.empty() ? b : a;
    return collect(terms);
}

ColoredGraph tensor(const ColoredGraph& g, const ColoredGraph& x) {
    if (g.num_colors != x.num_colors) {
        throw std::invalid_argument("tensor: factors must share one color set");
    }
    // vertices are same-color pairs, laid out g-major
    std::vector<std::vector<int>> id(g.n, std::vector<int>(x.n, -1));
    std::vector<int> colors;
    for (int u = 0; u < g.n; ++u) {
        for (int a = 0; a < x.n; ++a) {
            if (g.color[u] != x.color[a]) continue;
            id[u][a] = static_cast<int>(colors.size());
            colors.push_back(g.color[u]);
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges) {
        for (const auto& [a, b] : x.edges) {
            if (id[u][a] >= 0 && id[v][b] >= 0) edges.push_back({id[u][a], id[v][b]});
            if (id[u][b] >= 0 && id[v][a] >= 0) edges.push_back({id[u][b], id[v][a]});
        }
    }
    return ColoredGraph::make(g.num_colors, colors, edges);
}

QuantumGraph tensor_quantum(const QuantumGraph& a, const QuantumGraph& b) {
    WeightedGraphs terms;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            terms.emplace_back(a.coefficients[i] * b.coefficients[j],
                               tensor(a.constituents[i], b.constituents[j]));
        }
    }
    if (terms.empty()) return QuantumGraph{a.empty() ? b.num_colors : a.num_colors, {}, {}};
    return collect(terms);
}

Rational evaluate_linear(const MotifOracle& p, const QuantumGraph& q) {
    Rational total = 0;
    for (std::size_t i = 0; i < q.size(); ++i) total += q.coefficients[i] * p(q.constituents[i]);
    return total;
}

Rational hom_quantum(const ColoredGraph& h, const QuantumGraph& q) {
    Rational total = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        total += q.coefficients[i] * Rational(hom_count(h, q.constituents[i]));
    }
    return total;
}

}  // namespace homcfi
