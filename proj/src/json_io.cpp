#include "homcfi/json_io.hpp"

#include "homcfi/rational.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homcfi {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json graph_to_ordered(const ColoredGraph& g) {
    ordered_json j;
    j["colors"] = ordered_json::array();
    for (int c = 0; c < g.num_colors; ++c) j["colors"].push_back(c);
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < g.n; ++v) {
        ordered_json vert;
        vert["id"] = v;
        vert["color"] = g.color[v];
        if (!g.labels.empty()) vert["label"] = g.labels[v];
        j["vertices"].push_back(std::move(vert));
    }
    j["edges"] = ordered_json::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back(ordered_json::array({u, v}));
    return j;
}

ColoredGraph graph_from_parsed(const json& j) {
    if (!j.is_object() || !j.contains("colors") || !j.contains("vertices") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs colors, vertices and edges");
    }
    int num_colors = static_cast<int>(j.at("colors").size());
    for (std::size_t i = 0; i < j.at("colors").size(); ++i) {
        if (j.at("colors")[i] != static_cast<int>(i)) {
            throw std::invalid_argument("colors must be the dense list 0..k-1");
        }
    }
    int n = static_cast<int>(j.at("vertices").size());
    std::vector<int> colors(n, -1);
    std::vector<std::string> labels;
    bool any_label = false;
    for (const auto& vert : j.at("vertices")) {
        if (vert.contains("label")) any_label = true;
    }
    if (any_label) labels.assign(n, "");
    for (const auto& vert : j.at("vertices")) {
        int id = vert.at("id").get<int>();
        if (id < 0 || id >= n || colors[id] != -1) {
            throw std::invalid_argument("vertex ids must be the dense range 0..n-1, each once");
        }
        colors[id] = vert.at("color").get<int>();
        if (any_label) labels[id] = vert.value("label", "");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [u,v] pairs");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return ColoredGraph::make(std::max(num_colors, 1), colors, edges, labels);
}

}  // namespace

std::string graph_to_json(const ColoredGraph& g) {
    return graph_to_ordered(g).dump(2) + "\n";
}

ColoredGraph graph_from_json(const std::string& text) {
    return graph_from_parsed(json::parse(text));
}

std::string quantum_to_json(const QuantumGraph& q) {
    ordered_json j;
    j["coefficients"] = ordered_json::array();
    for (const auto& c : q.coefficients) j["coefficients"].push_back(rational_to_string(c));
    j["constituents"] = ordered_json::array();
    for (const auto& g : q.constituents) j["constituents"].push_back(graph_to_ordered(g));
    return j.dump(2) + "\n";
}

QuantumGraph quantum_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("coefficients") || !j.contains("constituents")) {
        throw std::invalid_argument("quantum JSON needs coefficients and constituents");
    }
    if (j.at("coefficients").size() != j.at("constituents").size()) {
        throw std::invalid_argument("coefficient/constituent length mismatch");
    }
    QuantumGraph q;
    for (std::size_t i = 0; i < j.at("coefficients").size(); ++i) {
        q.coefficients.push_back(rational_from_string(j.at("coefficients")[i].get<std::string>()));
        q.constituents.push_back(graph_from_parsed(j.at("constituents")[i]));
    }
    if (!q.constituents.empty()) {
        q.num_colors = q.constituents.front().num_colors;
        for (const auto& g : q.constituents) {
            if (g.num_colors != q.num_colors) {
                throw std::invalid_argument("quantum constituents must share one color set");
            }
        }
    }
    return q;
}

std::string graph_to_dot(const ColoredGraph& g, const std::string& name) {
    static const char* kPalette[] = {"lightblue",  "salmon",     "palegreen", "gold",
                                     "plum",       "lightcyan",  "orange",    "pink",
                                     "lightgray",  "khaki",      "aquamarine", "wheat"};
    constexpr int kPaletteSize = 12;
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [style=filled];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v << " [color=" << g.color[v] << ", fillcolor=\""
            << kPalette[g.color[v] % kPaletteSize] << "\"";
        if (!g.labels.empty() && !g.labels[v].empty()) {
            out << ", label=\"" << v << ":" << g.labels[v] << "\"";
        }
        out << "];\n";
    }
    for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

ColoredGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

QuantumGraph load_quantum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return quantum_from_json(buf.str());
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace homcfi
