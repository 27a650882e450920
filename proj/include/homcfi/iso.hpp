#pragma once

#include "homcfi/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcfi {

/// Color-preserving isomorphism search by backtracking with color/degree
/// partition refinement as pruning. Exhaustive and exact; meant for the
/// desk-scale graphs this library works with (n up to ~40, small color
/// classes). Deterministic: always returns the lexicographically first
/// mapping found under the internal vertex order.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h);

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

/// Checks that `map` is a color- and edge-preserving bijection g -> h.
bool verify_isomorphism(const ColoredGraph& g, const ColoredGraph& h, const std::vector<int>& map);

/// Number of color-preserving automorphisms. Exhaustive; guarded by a vertex
/// cap (throws std::length_error beyond it).
std::uint64_t automorphism_count(const ColoredGraph& g, int cap = 10);

/// Canonical labeling (old id -> new id) among color-preserving relabelings,
/// by individualization-refinement minimizing the edge-list certificate.
std::vector<int> canonical_labeling(const ColoredGraph& g);

/// Isomorphism-invariant total key: two graphs have equal keys iff they are
/// color-preservingly isomorphic. Used for deterministic constituent order.
std::string canonical_key(const ColoredGraph& g);

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& old_to_new);

}  // namespace homcfi
