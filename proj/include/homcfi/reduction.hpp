#pragma once

#include "homcfi/counting.hpp"
#include "homcfi/graph.hpp"
#include "homcfi/quantum.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace homcfi {

/// Side condition under which the oracle reduction recovers hom(S,G):
///   A: S = T;
///   B: every top-size constituent of p (|V| = |V(T)|) has the same sign;
///   C: no proper edge-subgraph of T on |V(T)| vertices is a constituent of p.
/// The condition is a promise about p and is trusted, not verified.
enum class ReductionCase { A, B, C };

enum class FilterKind { Cfi, InclusionExclusion };

/// Raised when the normalization value q comes out zero, which certifies that
/// the promised side condition did not actually hold for p.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionReport {
    Rational result;
    Rational normalization;           // q, the shared constant divided out
    std::uint64_t oracle_calls = 0;   // main pipeline calls
    std::uint64_t normalization_calls = 0;
    int max_call_size = 0;            // largest graph handed to the oracle
};

/// Wraps an oracle on uncolored graphs as one on colored graphs via
/// G -> p(G with colors stripped). Same support bound and purity.
MotifOracle lift_colored(const MotifOracle& p);

/// Colored hom-expansion of an uncolored one: every constituent F is replaced
/// by all its colorings over num_colors colors, then collected. For colorful
/// constituents the collected coefficient is alpha_{F stripped} * |aut|.
QuantumGraph colored_expansion(const QuantumGraph& uncolored, int num_colors);

/// G_pad: one extra vertex per color of T outside S, then complete bipartite
/// classes for every edge of T missing from S. For T-colored H (with its
/// S-part over E(S)): hom(H, G_pad) = c_H * hom(H restricted to S, G) with
/// c_H independent of G.
ColoredGraph pad_host(const ColoredGraph& g, const ColorfulGraph& s, const ColorfulGraph& t);

/// Recovers hom(S,G) from oracle access to p (an oracle on uncolored graphs
/// whose hom-expansion has support bound <= s_bound and satisfies the case's
/// side condition with respect to T >= S). G must be S-colored.
ReductionReport reduce_hom(const ColorfulGraph& s, const ColorfulGraph& t, int s_bound,
                           const MotifOracle& p, ReductionCase which, const ColoredGraph& g,
                           FilterKind filter = FilterKind::Cfi);

/// Minor-model host lifting: from an A-colored G and a minor model of A in B,
/// builds a B-colored G' with |V(G)| * |V(B)| vertices and
/// hom(A,G) = hom(B,G').
ColoredGraph minor_lift(const ColorfulGraph& a, const ColorfulGraph& b,
                        const std::vector<std::vector<int>>& branch_sets, const ColoredGraph& g);

}  // namespace homcfi
