#pragma once

#include "homcfi/counting.hpp"
#include "homcfi/graph.hpp"
#include "homcfi/quantum.hpp"

#include <vector>

namespace homcfi {

inline constexpr int kIeEdgeCap = 20;  // 2^{|E|} constituents

/// Partition of the color set into parts C_1..C_r with per-part vertex-count
/// targets k_1..k_r. A colored graph is eta-coarsened when it has exactly k_i
/// vertices with colors in C_i, for every i.
struct ColorCoarsening {
    std::vector<std::vector<int>> parts;
    std::vector<int> targets;

    int num_colors() const;
    void validate() const;  // parts disjoint and covering 0..num_colors-1
    bool matches(const ColoredGraph& g) const;
    /// n_i(g): vertices of g with colors in part i.
    std::vector<int> part_counts(const ColoredGraph& g) const;
};

/// Single-part coarsening: exactly k vertices over the whole color set.
ColorCoarsening total_count_coarsening(int num_colors, int k);

/// N_a: a_i vertices per color in part C_i, every vertex looped, all pairs
/// adjacent. hom(H, N_a) = prod a_i^{n_i(H)}.
ColoredGraph looped_template(const ColorCoarsening& eta, const std::vector<int>& a);

/// The interpolation filter N = sum_{a in [1..s+1]^r} beta_a N_a with
/// hom(H, N) = 1 for eta-coarsened H and 0 for all other H with <= s vertices.
/// Solved exactly over the rationals; coefficients cached per (eta, s).
QuantumGraph cardinality_filter(const ColorCoarsening& eta, int s);

/// I = sum over edge-subgraphs F of S of (-1)^{|E(S)|-|E(F)|} F; filters the
/// surjectively S-colored graphs.
QuantumGraph inclusion_exclusion_filter(const ColorfulGraph& s, int edge_cap = kIeEdgeCap);

/// p(G tensor F_1 tensor ... tensor F_q), streaming one constituent
/// combination at a time; exactly prod |F_i| oracle calls.
Rational apply_filters(const MotifOracle& p, const std::vector<QuantumGraph>& filters,
                       const ColoredGraph& g);

}  // namespace homcfi
