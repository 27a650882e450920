#pragma once

#include "homcfi/graph.hpp"
#include "homcfi/quantum.hpp"

#include <cstdint>
#include <vector>

namespace homcfi {

inline constexpr int kCfiDegreeCap = 16;  // color classes have 2^{deg-1} vertices

/// 0/1 charge on the edges of a colorful base graph, stored parallel to the
/// sorted edge list of S.
struct ChargeFunction {
    std::vector<int> bit;

    static ChargeFunction zero(const ColorfulGraph& s);
    /// Indicator of an edge set F subseteq E(S).
    static ChargeFunction indicator(const ColorfulGraph& s, const std::vector<Edge>& f);

    int at(const ColorfulGraph& s, Edge e) const;
    ChargeFunction xored(const ChargeFunction& other) const;
    int total() const;  // number of charged edges
};

/// Edges of S incident to v, in sorted order; assignment bit i of a vertex in
/// class v refers to incident_edges(s, v)[i].
std::vector<Edge> incident_edges(const ColorfulGraph& s, int v);

/// All even 0/1-assignments on I(v), as bitmasks over incident_edges(s, v),
/// in increasing mask order. deg 0 yields the single empty assignment.
std::vector<std::uint32_t> even_assignment_masks(const ColorfulGraph& s, int v);

/// The CSP graph Gamma(S,c): color-v vertices are the even assignments on
/// I(v); classes u,v are joined by the relation a_u(uv) = a_v(uv) xor c(uv).
struct CfiGraph {
    ColorfulGraph base;
    ChargeFunction charge;
    ColoredGraph realized;  // colored by base vertex; labels carry the bit-vectors
    std::vector<int> class_start;                    // base vertex -> first realized id
    std::vector<std::vector<std::uint32_t>> masks;   // base vertex -> assignment masks

    int vertex_id(int v, std::uint32_t mask) const;
};

CfiGraph cfi_csp(const ColorfulGraph& s, const ChargeFunction& c);

/// X(S) = (Gamma(S, zero) - Gamma(S, chi_{e*})) / 2^{|E|-|V|+1} with e* the
/// least edge of S. Requires S connected without isolated vertices.
QuantumGraph cfi_filter(const ColorfulGraph& s);

/// The two constituents of X(S) with their construction metadata (same order
/// and graphs as cfi_filter before collection).
std::pair<CfiGraph, CfiGraph> cfi_filter_parts(const ColorfulGraph& s);

/// Explicit isomorphism Gamma(S,c) -> Gamma(S, c xor chi_{vu,vw}) flipping the
/// two bits on class v (the shared endpoint). vu == vw yields the identity.
struct ChargePush {
    ChargeFunction target;
    std::vector<int> map;  // vertex of Gamma(S,c) -> vertex of Gamma(S,target)
};

ChargePush push_incident(const ColorfulGraph& s, const ChargeFunction& c, Edge vu, Edge vw);

/// Composition of incident pushes along an edge path from e to e2:
/// an isomorphism Gamma(S, chi_e) -> Gamma(S, chi_{e2}).
ChargePush push_along_path(const ColorfulGraph& s, Edge e, Edge e2);

/// For a proper edge-subgraph S2 of S: an isomorphism between the two
/// constituents of X(S) after deleting the edge-color classes outside E(S2)
/// (i.e. between Gamma(S,chi_{e*}) tensor S2 and Gamma(S,zero) tensor S2).
struct DeletedClassIso {
    ColoredGraph from;      // Gamma(S, chi_{e*}) restricted to E(S2) classes
    ColoredGraph to;        // Gamma(S, zero) restricted likewise
    std::vector<int> map;   // verified bijection from -> to
};

DeletedClassIso deleted_class_isomorphism(const ColorfulGraph& s, const ColorfulGraph& s2);

}  // namespace homcfi
