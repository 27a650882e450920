#include "homcfi/iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace homcfi {

namespace {

struct VertexInvariant {
    int color;
    int degree;
    bool loop;
    auto operator<=>(const VertexInvariant&) const = default;
};

std::vector<VertexInvariant> vertex_invariants(const ColoredGraph& g) {
    std::vector<VertexInvariant> inv(g.n);
    for (int v = 0; v < g.n; ++v) inv[v] = {g.color[v], 0, false};
    for (const auto& [u, v] : g.edges) {
        ++inv[u].degree;
        if (u != v) {
            ++inv[v].degree;
        } else {
            inv[u].loop = true;
        }
    }
    return inv;
}

bool same_global_invariants(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.n != h.n || g.num_colors != h.num_colors || g.edges.size() != h.edges.size()) return false;
    auto a = vertex_invariants(g), b = vertex_invariants(h);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Backtracking mapper shared by isomorphism search and automorphism counting.
struct IsoSearch {
    const ColoredGraph& g;
    const ColoredGraph& h;
    Adjacency ag, ah;
    std::vector<VertexInvariant> ig, ih;
    std::vector<std::vector<int>> adj_g;
    std::vector<int> order;    // g vertices in search order
    std::vector<int> mapping;  // g vertex -> h vertex or -1
    std::vector<char> used;    // h vertex taken
    std::uint64_t solutions = 0;
    bool count_all = false;
    std::optional<std::vector<int>> first;

    IsoSearch(const ColoredGraph& g_, const ColoredGraph& h_)
        : g(g_), h(h_), ag(g_), ah(h_), ig(vertex_invariants(g_)), ih(vertex_invariants(h_)),
          adj_g(neighbor_lists(g_)), mapping(g_.n, -1), used(h_.n, 0) {
        // most-constrained first: small color class in h, high degree; then keep
        // the order connected so adjacency prunes early
        std::vector<int> class_size(g.num_colors, 0);
        for (int v = 0; v < h.n; ++v) ++class_size[h.color[v]];
        std::vector<int> rest(g.n);
        for (int v = 0; v < g.n; ++v) rest[v] = v;
        std::vector<char> placed(g.n, 0);
        auto better = [&](int a, int b) {
            return std::tuple(class_size[g.color[a]], -ig[a].degree, a) <
                   std::tuple(class_size[g.color[b]], -ig[b].degree, b);
        };
        std::vector<char> frontier(g.n, 0);
        for (int step = 0; step < g.n; ++step) {
            int pick = -1;
            for (int v : rest) {
                if (placed[v]) continue;
                if (pick == -1 || (frontier[v] && !frontier[pick]) ||
                    (frontier[v] == frontier[pick] && better(v, pick))) {
                    pick = v;
                }
            }
            order.push_back(pick);
            placed[pick] = 1;
            for (int w : adj_g[pick]) frontier[w] = 1;
        }
    }

    bool run(int depth) {
        if (depth == g.n) {
            ++solutions;
            if (!first) first = mapping;
            return !count_all;  // stop at the first solution unless counting
        }
        int v = order[depth];
        for (int w = 0; w < h.n; ++w) {
            if (used[w] || ih[w] != ig[v]) continue;
            bool ok = true;
            for (int x : adj_g[v]) {
                if (mapping[x] >= 0 && !ah.at(w, mapping[x])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[v] = w;
            used[w] = 1;
            if (run(depth + 1)) return true;
            mapping[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g, const ColoredGraph& h) {
    if (!same_global_invariants(g, h)) return std::nullopt;
    IsoSearch search(g, h);
    search.run(0);
    return search.first;
}

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
    return find_isomorphism(g, h).has_value();
}

bool verify_isomorphism(const ColoredGraph& g, const ColoredGraph& h, const std::vector<int>& map) {
    if (g.n != h.n || static_cast<int>(map.size()) != g.n || g.edges.size() != h.edges.size()) {
        return false;
    }
    std::vector<char> hit(h.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (map[v] < 0 || map[v] >= h.n || hit[map[v]]) return false;
        hit[map[v]] = 1;
        if (g.color[v] != h.color[map[v]]) return false;
    }
    for (const auto& [u, v] : g.edges) {
        if (!h.has_edge(map[u], map[v])) return false;
    }
    return true;  // bijection mapping E(g) into E(h); equal edge counts close it
}

std::uint64_t automorphism_count(const ColoredGraph& g, int cap) {
    if (g.n > cap) {
        throw std::length_error("automorphism_count: graph exceeds the exhaustive-search cap");
    }
    IsoSearch search(g, g);
    search.count_all = true;
    search.run(0);
    return search.solutions;
}

namespace {

using Cells = std::vector<std::vector<int>>;

Cells initial_cells(const ColoredGraph& g, const std::vector<VertexInvariant>& inv) {
    std::map<VertexInvariant, std::vector<int>> buckets;
    for (int v = 0; v < g.n; ++v) buckets[inv[v]].push_back(v);
    Cells cells;
    for (auto& [key, members] : buckets) cells.push_back(std::move(members));
    return cells;
}

// Equitable refinement: split cells by neighbor counts into every cell until stable.
void refine(const Adjacency& adj, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(adj.n, -1);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        }
        Cells next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int w = 0; w < adj.n; ++w) {
                    if (adj.at(v, w)) ++sig[cell_of[w]];
                }
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, members] : split) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
}

// A cell is interchangeable if its vertices are pairwise twins: identical
// adjacency outside the cell, and complete or empty (with uniform loops)
// inside. Any ordering of such a cell yields the same certificate, which keeps
// the search polynomial on complete graphs and looped templates.
bool interchangeable(const Adjacency& adj, const std::vector<int>& cell) {
    int a = cell[0];
    bool inner = adj.at(cell[0], cell[1]);
    bool loop = adj.at(a, a);
    for (std::size_t i = 0; i < cell.size(); ++i) {
        for (std::size_t j = i + 1; j < cell.size(); ++j) {
            if (adj.at(cell[i], cell[j]) != inner) return false;
        }
        if (adj.at(cell[i], cell[i]) != loop) return false;
    }
    std::vector<char> in_cell(adj.n, 0);
    for (int v : cell) in_cell[v] = 1;
    for (int w = 0; w < adj.n; ++w) {
        if (in_cell[w]) continue;
        bool first = adj.at(a, w);
        for (std::size_t i = 1; i < cell.size(); ++i) {
            if (adj.at(cell[i], w) != first) return false;
        }
    }
    return true;
}

struct CanonSearch {
    const ColoredGraph& g;
    Adjacency adj;
    std::vector<Edge> best_cert;
    std::vector<int> best_labeling;
    bool have_best = false;
    long nodes = 0;
    static constexpr long kNodeCap = 2'000'000;

    explicit CanonSearch(const ColoredGraph& g_) : g(g_), adj(g_) {}

    void leaf(const Cells& cells) {
        std::vector<int> label(g.n);
        int next = 0;
        for (const auto& cell : cells) {
            for (int v : cell) label[v] = next++;
        }
        std::vector<Edge> cert;
        cert.reserve(g.edges.size());
        for (const auto& [u, v] : g.edges) {
            int a = label[u], b = label[v];
            if (a > b) std::swap(a, b);
            cert.push_back({a, b});
        }
        std::sort(cert.begin(), cert.end());
        if (!have_best || cert < best_cert) {
            best_cert = std::move(cert);
            best_labeling = std::move(label);
            have_best = true;
        }
    }

    void search(Cells cells) {
        if (++nodes > kNodeCap) {
            throw std::length_error("canonical_labeling: search cap exceeded");
        }
        refine(adj, cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 &&
                (target == cells.size() || cells[c].size() < cells[target].size())) {
                target = c;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        if (interchangeable(adj, cells[target])) {
            Cells split;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    for (int v : cells[c]) split.push_back({v});
                } else {
                    split.push_back(cells[c]);
                }
            }
            search(std::move(split));
            return;
        }
        for (std::size_t i = 0; i < cells[target].size(); ++i) {
            Cells split;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    std::vector<int> rest;
                    for (std::size_t j = 0; j < cells[c].size(); ++j) {
                        if (j != i) rest.push_back(cells[c][j]);
                    }
                    split.push_back({cells[c][i]});
                    split.push_back(std::move(rest));
                } else {
                    split.push_back(cells[c]);
                }
            }
            search(std::move(split));
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const ColoredGraph& g) {
    if (g.n == 0) return {};
    CanonSearch search(g);
    search.search(initial_cells(g, vertex_invariants(g)));
    return search.best_labeling;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& old_to_new) {
    std::vector<int> colors(g.n);
    std::vector<std::string> labels(g.labels.empty() ? 0 : g.n);
    for (int v = 0; v < g.n; ++v) {
        colors[old_to_new[v]] = g.color[v];
        if (!g.labels.empty()) labels[old_to_new[v]] = g.labels[v];
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) edges.push_back({old_to_new[u], old_to_new[v]});
    return ColoredGraph::make(g.num_colors, colors, edges, labels);
}

std::string canonical_key(const ColoredGraph& g) {
    ColoredGraph canon = relabel(g, canonical_labeling(g));
    std::string key;
    key += std::to_string(g.n) + "|" + std::to_string(g.num_colors) + "|";
    for (int c : canon.color) key += std::to_string(c) + ",";
    key += "|";
    for (const auto& [u, v] : canon.edges) {
        key += std::to_string(u) + "-" + std::to_string(v) + ";";
    }
    return key;
}

}  // namespace homcfi
