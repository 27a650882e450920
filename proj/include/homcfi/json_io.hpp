#pragma once

#include "homcfi/graph.hpp"
#include "homcfi/quantum.hpp"

#include <string>

namespace homcfi {

/// Graph JSON: {"colors":[0,1,...], "vertices":[{"id":0,"color":0},...],
/// "edges":[[u,v],...]}. Deterministic field and element order; parsing a
/// serialized graph reproduces it bit-exactly.
std::string graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const std::string& text);

/// Quantum JSON: {"coefficients":["1/24","-1/6"], "constituents":[<graph>,...]}
/// with rationals as "num/den" strings.
std::string quantum_to_json(const QuantumGraph& q);
QuantumGraph quantum_from_json(const std::string& text);

/// Graphviz export; vertices carry a `color` attribute (and the label
/// annotation when present).
std::string graph_to_dot(const ColoredGraph& g, const std::string& name = "G");

ColoredGraph load_graph(const std::string& path);
QuantumGraph load_quantum(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace homcfi
