#include "homcfi/cfi.hpp"

#include "homcfi/iso.hpp"
#include "homcfi/rational.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace homcfi {

namespace {

int edge_index(const ColorfulGraph& s, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    auto it = std::lower_bound(s.g.edges.begin(), s.g.edges.end(), e);
    if (it == s.g.edges.end() || *it != e) {
        throw std::invalid_argument("charge lookup: not an edge of the base graph");
    }
    return static_cast<int>(it - s.g.edges.begin());
}

}  // namespace

ChargeFunction ChargeFunction::zero(const ColorfulGraph& s) {
    return ChargeFunction{std::vector<int>(s.g.edges.size(), 0)};
}

ChargeFunction ChargeFunction::indicator(const ColorfulGraph& s, const std::vector<Edge>& f) {
    ChargeFunction c = zero(s);
    for (Edge e : f) c.bit[edge_index(s, e)] ^= 1;
    return c;
}

int ChargeFunction::at(const ColorfulGraph& s, Edge e) const {
    return bit[edge_index(s, e)];
}

ChargeFunction ChargeFunction::xored(const ChargeFunction& other) const {
    if (bit.size() != other.bit.size()) {
        throw std::invalid_argument("charge xor: different base graphs");
    }
    ChargeFunction out = *this;
    for (std::size_t i = 0; i < bit.size(); ++i) out.bit[i] ^= other.bit[i];
    return out;
}

int ChargeFunction::total() const {
    int t = 0;
    for (int b : bit) t += b;
    return t;
}

std::vector<Edge> incident_edges(const ColorfulGraph& s, int v) {
    std::vector<Edge> out;
    for (const auto& e : s.g.edges) {
        if (e.first == v || e.second == v) out.push_back(e);
    }
    return out;
}

std::vector<std::uint32_t> even_assignment_masks(const ColorfulGraph& s, int v) {
    int deg = static_cast<int>(incident_edges(s, v).size());
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << deg); ++mask) {
        if (std::popcount(mask) % 2 == 0) out.push_back(mask);
    }
    return out;
}

int CfiGraph::vertex_id(int v, std::uint32_t mask) const {
    const auto& m = masks[v];
    auto it = std::lower_bound(m.begin(), m.end(), mask);
    if (it == m.end() || *it != mask) {
        throw std::invalid_argument("cfi vertex lookup: not an even assignment");
    }
    return class_start[v] + static_cast<int>(it - m.begin());
}

CfiGraph cfi_csp(const ColorfulGraph& s, const ChargeFunction& c) {
    if (s.g.has_loops()) throw std::invalid_argument("cfi_csp: base graph must be loop-free");
    if (s.g.max_degree() > kCfiDegreeCap) {
        throw std::length_error("cfi_csp: base degree exceeds the class-size cap");
    }
    if (c.bit.size() != s.g.edges.size()) {
        throw std::invalid_argument("cfi_csp: charge not aligned with E(S)");
    }
    CfiGraph out{s, c, {}, {}, {}};
    out.class_start.resize(s.n());
    out.masks.resize(s.n());
    std::vector<std::vector<Edge>> incident(s.n());
    int total = 0;
    for (int v = 0; v < s.n(); ++v) {
        incident[v] = incident_edges(s, v);
        out.masks[v] = even_assignment_masks(s, v);
        out.class_start[v] = total;
        total += static_cast<int>(out.masks[v].size());
    }
    std::vector<int> colors(total);
    std::vector<std::string> labels(total);
    for (int v = 0; v < s.n(); ++v) {
        for (std::size_t i = 0; i < out.masks[v].size(); ++i) {
            int id = out.class_start[v] + static_cast<int>(i);
            colors[id] = v;
            std::string bits;
            for (std::size_t j = 0; j < incident[v].size(); ++j) {
                bits += (out.masks[v][i] >> j & 1) ? '1' : '0';
            }
            labels[id] = bits;
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : s.g.edges) {
        auto [u, v] = e;
        int cu = -1, cv = -1;
        for (std::size_t j = 0; j < incident[u].size(); ++j) {
            if (incident[u][j] == e) cu = static_cast<int>(j);
        }
        for (std::size_t j = 0; j < incident[v].size(); ++j) {
            if (incident[v][j] == e) cv = static_cast<int>(j);
        }
        int charge = c.bit[edge_index(s, e)];
        for (std::size_t i = 0; i < out.masks[u].size(); ++i) {
            for (std::size_t k = 0; k < out.masks[v].size(); ++k) {
                int au = out.masks[u][i] >> cu & 1;
                int av = out.masks[v][k] >> cv & 1;
                if (au == (av ^ charge)) {
                    edges.push_back({out.class_start[u] + static_cast<int>(i),
                                     out.class_start[v] + static_cast<int>(k)});
                }
            }
        }
    }
    out.realized = ColoredGraph::make(s.n(), colors, edges, labels);
    return out;
}

std::pair<CfiGraph, CfiGraph> cfi_filter_parts(const ColorfulGraph& s) {
    if (!is_connected(s.g)) {
        throw std::invalid_argument("cfi_filter: base graph must be connected");
    }
    for (int v = 0; v < s.n(); ++v) {
        if (s.g.degree(v) == 0) {
            throw std::invalid_argument("cfi_filter: base graph has an isolated vertex");
        }
    }
    if (s.g.edges.empty()) {
        throw std::invalid_argument("cfi_filter: base graph has no edges");
    }
    Edge e_star = s.g.edges.front();  // lexicographically least edge
    return {cfi_csp(s, ChargeFunction::zero(s)),
            cfi_csp(s, ChargeFunction::indicator(s, {e_star}))};
}

QuantumGraph cfi_filter(const ColorfulGraph& s) {
    auto [plain, charged] = cfi_filter_parts(s);
    long k = static_cast<long>(s.g.edges.size()) - s.n() + 1;
    Rational scale = pow2(-k);
    return collect({{scale, plain.realized}, {-scale, charged.realized}});
}

ChargePush push_incident(const ColorfulGraph& s, const ChargeFunction& c, Edge vu, Edge vw) {
    if (vu.first > vu.second) std::swap(vu.first, vu.second);
    if (vw.first > vw.second) std::swap(vw.first, vw.second);
    int shared = -1;
    for (int a : {vu.first, vu.second}) {
        if (a == vw.first || a == vw.second) shared = a;
    }
    if (shared < 0) throw std::invalid_argument("push_incident: edges share no endpoint");
    ChargeFunction target = c.xored(ChargeFunction::indicator(s, {vu, vw}));
    CfiGraph from = cfi_csp(s, c);
    CfiGraph to = cfi_csp(s, target);
    auto inc = incident_edges(s, shared);
    std::uint32_t flip = 0;
    for (std::size_t j = 0; j < inc.size(); ++j) {
        if (inc[j] == vu) flip ^= std::uint32_t(1) << j;
        if (inc[j] == vw) flip ^= std::uint32_t(1) << j;
    }
    std::vector<int> map(from.realized.n);
    for (int v = 0; v < s.n(); ++v) {
        for (std::size_t i = 0; i < from.masks[v].size(); ++i) {
            std::uint32_t mask = from.masks[v][i];
            if (v == shared) mask ^= flip;  // flips two (or zero) bits: parity kept
            map[from.class_start[v] + static_cast<int>(i)] = to.vertex_id(v, mask);
        }
    }
    return {target, map};
}

ChargePush push_along_path(const ColorfulGraph& s, Edge e, Edge e2) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e2.first > e2.second) std::swap(e2.first, e2.second);
    edge_index(s, e);
    edge_index(s, e2);
    // BFS in the incidence graph of E(S)
    int m = static_cast<int>(s.g.edges.size());
    std::vector<int> prev(m, -1);
    std::vector<char> seen(m, 0);
    int start = edge_index(s, e), goal = edge_index(s, e2);
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[goal]; ++head) {
        int cur = queue[head];
        auto [a, b] = s.g.edges[cur];
        for (int next = 0; next < m; ++next) {
            if (seen[next]) continue;
            auto [x, y] = s.g.edges[next];
            if (x == a || x == b || y == a || y == b) {
                seen[next] = 1;
                prev[next] = cur;
                queue.push_back(next);
            }
        }
    }
    if (!seen[goal]) {
        throw std::invalid_argument("push_along_path: edges lie in different components");
    }
    std::vector<int> path;  // edge indices from e to e2
    for (int cur = goal; cur != -1; cur = prev[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    ChargeFunction charge = ChargeFunction::indicator(s, {e});
    int n_vertices = cfi_csp(s, charge).realized.n;
    std::vector<int> composed(n_vertices);
    for (int v = 0; v < n_vertices; ++v) composed[v] = v;
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
        ChargePush push = push_incident(s, charge, s.g.edges[path[step]], s.g.edges[path[step + 1]]);
        for (int v = 0; v < n_vertices; ++v) composed[v] = push.map[composed[v]];
        charge = push.target;
    }
    return {charge, composed};
}

DeletedClassIso deleted_class_isomorphism(const ColorfulGraph& s, const ColorfulGraph& s2) {
    if (s2.n() != s.n()) {
        throw std::invalid_argument("deleted_class_isomorphism: S2 must share V(S)");
    }
    std::vector<Edge> deleted;
    for (const auto& e : s.g.edges) {
        if (!s2.g.has_edge(e.first, e.second)) deleted.push_back(e);
    }
    for (const auto& e : s2.g.edges) {
        if (!s.g.has_edge(e.first, e.second)) {
            throw std::invalid_argument("deleted_class_isomorphism: S2 is not a subgraph of S");
        }
    }
    if (deleted.empty()) {
        throw std::invalid_argument("deleted_class_isomorphism: S2 must be a proper subgraph");
    }
    Edge e_star = s.g.edges.front();
    // move the charge from e* onto a deleted edge; after dropping the deleted
    // classes the charged and uncharged constituents coincide
    ChargePush push = push_along_path(s, e_star, deleted.front());
    CfiGraph charged = cfi_csp(s, ChargeFunction::indicator(s, {e_star}));
    CfiGraph plain = cfi_csp(s, ChargeFunction::zero(s));
    CfiGraph moved = cfi_csp(s, push.target);
    DeletedClassIso out;
    out.from = restrict_to_edge_classes(charged.realized, s2);
    out.to = restrict_to_edge_classes(plain.realized, s2);
    // Gamma(S, chi_e) and Gamma(S, zero) share their vertex set and differ
    // only on the deleted class e, so push.map already lands in `to`
    out.map = push.map;
    if (moved.realized.n != out.to.n || !verify_isomorphism(out.from, out.to, out.map)) {
        throw std::logic_error("deleted_class_isomorphism: constructed map failed verification");
    }
    return out;
}

}  // namespace homcfi
