#pragma once

#include "homcfi/counting.hpp"
#include "homcfi/graph.hpp"
#include "homcfi/quantum.hpp"
#include "homcfi/rational.hpp"

#include <string>
#include <vector>

namespace homcfi {

/// A color-respecting vertex partition and the graph obtained by identifying
/// each block to one vertex (loops may appear; parallel edges collapse).
struct Quotient {
    ColoredGraph graph;
    std::vector<int> block_of;  // vertex of H -> block id (= quotient vertex)
};

inline constexpr int kQuotientVertexCap = 9;   // partitions grow like Bell numbers
inline constexpr int kIndVertexCap = 7;        // plus 2^{missing edges} supersets

/// All color-respecting vertex partitions of H with their quotient graphs.
/// Quotients are returned per partition (not deduplicated); use collect on the
/// derived quantum graphs for deduplication up to isomorphism.
std::vector<Quotient> quotients(const ColoredGraph& h, int cap = kQuotientVertexCap);

/// Hom-expansion of a sub/ind count: a quantum graph whose termwise
/// hom-evaluation reproduces the counting function on every host.
struct HomExpansion {
    std::string kind;  // "sub" or "ind"
    ColoredGraph origin;
    QuantumGraph q;
};

/// sub(H,.) = (1/|aut H|) * sum over vertex partitions sigma of
/// mobius(sigma) * hom(H/sigma, .), collected over isomorphism classes.
HomExpansion sub_hom_expansion(const ColoredGraph& h, int cap = kQuotientVertexCap);

/// ind(H,.) = sum over edge-supersets H' on V(H) of
/// (-1)^{|E(H')|-|E(H)|} sub(H',.), each expanded as above.
HomExpansion ind_hom_expansion(const ColoredGraph& h, int cap = kIndVertexCap);

/// Partition-lattice Moebius value for the partition below the top element:
/// product over blocks B of (-1)^{|B|-1} (|B|-1)!.
Integer partition_mobius(const std::vector<int>& block_of);

/// Oracle computing sub/ind(pattern,.) by termwise hom-evaluation of the
/// expansion; same values as the brute-force oracle, but each call costs only
/// hom counts of patterns with <= |V(pattern)| vertices.
MotifOracle make_expansion_oracle(OracleKind kind, const ColoredGraph& pattern);

/// A quotient T of H containing S as a subgraph, obtained by identifying
/// endpoints of matching edges (one per edge of S).
struct MatchingEmbed {
    ColorfulGraph t;             // quotient with the identity coloring
    std::vector<int> block_of;   // vertex of H -> vertex of T
    std::vector<int> injection;  // vertex of S -> vertex of T (edges of S map to edges of T)
};

/// Realizes S inside a quotient of H: matching edge t is collapsed onto edge t
/// of S. `matching` must consist of >= |E(S)| pairwise disjoint edges of H;
/// S must have no isolated vertices; H must be uncolored.
MatchingEmbed matching_quotient_embed(const ColorfulGraph& s, const ColoredGraph& h,
                                      const std::vector<Edge>& matching);

}  // namespace homcfi
