#pragma once

#include "homcfi/graph.hpp"
#include "homcfi/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

namespace homcfi {

/// Exact number of color-preserving homomorphisms H -> G. Backtracking over
/// V(H) with color-class domain restriction, component factorization, and
/// deferred counting of vertices whose neighbors are all placed.
Integer hom_count(const ColoredGraph& h, const ColoredGraph& g);

/// Exact number of injective color-preserving homomorphisms.
Integer injective_hom_count(const ColoredGraph& h, const ColoredGraph& g);

/// Number of (color-preserving) subgraph copies of H in G.
Integer sub_count(const ColoredGraph& h, const ColoredGraph& g);

/// Number of vertex subsets of G inducing a graph isomorphic to H.
Integer ind_count(const ColoredGraph& h, const ColoredGraph& g);

enum class OracleKind { Hom, Sub, Ind };

struct OracleLedger {
    std::uint64_t calls = 0;
    int max_vertices = 0;
};

/// Black-box evaluator of a graph motif parameter with a call/size ledger.
/// Copies share one ledger; ledger updates are serialized so pure oracles may
/// be called concurrently.
class MotifOracle {
  public:
    MotifOracle(std::function<Rational(const ColoredGraph&)> fn, int support_bound, bool pure,
                std::string name = "oracle");

    Rational operator()(const ColoredGraph& g) const;

    int support_bound() const { return support_bound_; }
    bool pure() const { return pure_; }
    const std::string& name() const { return name_; }

    OracleLedger ledger() const;
    void reset_ledger() const;

  private:
    struct LedgerState {
        mutable std::mutex mu;
        OracleLedger data;
    };
    std::function<Rational(const ColoredGraph&)> fn_;
    int support_bound_;
    bool pure_;
    std::string name_;
    std::shared_ptr<LedgerState> state_;
};

/// Brute-force counting oracle for p = hom/sub/ind(pattern, .). Support bound
/// is |V(pattern)| (quotients never gain vertices).
MotifOracle make_oracle(OracleKind kind, const ColoredGraph& pattern);

}  // namespace homcfi
