#include "homcfi/counting.hpp"

#include "homcfi/iso.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace homcfi {

namespace {

struct HostView {
    const ColoredGraph& g;
    Adjacency adj;
    std::vector<std::vector<int>> neighbors;
    std::vector<std::vector<int>> classes;  // per color
    std::vector<char> loop;

    explicit HostView(const ColoredGraph& g_) : g(g_), adj(g_), neighbors(neighbor_lists(g_)),
                                                classes(g_.num_colors), loop(g_.n, 0) {
        for (int v = 0; v < g.n; ++v) classes[g.color[v]].push_back(v);
        for (const auto& [u, v] : g.edges) {
            if (u == v) loop[u] = 1;
        }
    }
};

// Search order for one connected pattern component: stay connected, prefer
// small host color classes and high degree (spec'd tie-break), and schedule
// vertices so that as many as possible have all neighbors placed before them
// (those are counted by multiplication instead of branching).
struct ComponentOrder {
    std::vector<int> order;
    std::vector<char> has_later_neighbor;
    std::vector<std::vector<int>> earlier_neighbors;  // by position
};

ComponentOrder make_order(const ColoredGraph& h, const std::vector<std::vector<int>>& adj_h,
                          const HostView& host) {
    int n = h.n;
    std::vector<char> placed(n, 0), frontier(n, 0);
    std::vector<int> order;
    order.reserve(n);
    auto loops_at = [&](int v) {
        return h.has_edge(v, v);
    };
    (void)loops_at;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            // defer vertices whose every neighbor is already placed: they close
            // for free at the end of the order
            bool closes = true;
            for (int w : adj_h[v]) {
                if (w != v && !placed[w]) {
                    closes = false;
                    break;
                }
            }
            auto key = std::tuple(closes ? 1 : 0, frontier[v] ? 0 : 1,
                                  static_cast<int>(host.classes[h.color[v]].size()),
                                  -static_cast<int>(adj_h[v].size()), v);
            if (pick == -1) {
                pick = v;
                continue;
            }
            bool pick_closes = true;
            for (int w : adj_h[pick]) {
                if (w != pick && !placed[w]) {
                    pick_closes = false;
                    break;
                }
            }
            auto pick_key = std::tuple(pick_closes ? 1 : 0, frontier[pick] ? 0 : 1,
                                       static_cast<int>(host.classes[h.color[pick]].size()),
                                       -static_cast<int>(adj_h[pick].size()), pick);
            if (key < pick_key) pick = v;
        }
        order.push_back(pick);
        placed[pick] = 1;
        for (int w : adj_h[pick]) frontier[w] = 1;
    }
    ComponentOrder out;
    out.order = order;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    out.has_later_neighbor.assign(n, 0);
    out.earlier_neighbors.resize(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        for (int w : adj_h[v]) {
            if (w == v) continue;
            if (pos[w] > i) out.has_later_neighbor[i] = 1;
            if (pos[w] < i) out.earlier_neighbors[i].push_back(w);
        }
    }
    return out;
}

struct HomSearch {
    const ColoredGraph& h;
    const HostView& host;
    const ComponentOrder& ord;
    std::vector<char> h_loop;
    std::vector<int> image;

    HomSearch(const ColoredGraph& h_, const HostView& host_, const ComponentOrder& ord_)
        : h(h_), host(host_), ord(ord_), h_loop(h_.n, 0), image(h_.n, -1) {
        for (const auto& [u, v] : h.edges) {
            if (u == v) h_loop[u] = 1;
        }
    }

    bool candidate_ok(int v, int w, const std::vector<int>& earlier) const {
        if (h_loop[v] && !host.loop[w]) return false;
        for (int u : earlier) {
            if (!host.adj.at(w, image[u])) return false;
        }
        return true;
    }

    Integer count(int depth) {
        if (depth == h.n) return 1;
        int v = ord.order[depth];
        const auto& earlier = ord.earlier_neighbors[depth];
        // candidate domain: host color class, cut down via one placed neighbor
        const std::vector<int>* domain = &host.classes[h.color[v]];
        if (!earlier.empty()) domain = &host.neighbors[image[earlier[0]]];
        if (!ord.has_later_neighbor[depth]) {
            Integer choices = 0;
            for (int w : *domain) {
                if (host.g.color[w] == h.color[v] && candidate_ok(v, w, earlier)) ++choices;
            }
            if (choices == 0) return 0;
            return choices * count(depth + 1);
        }
        Integer total = 0;
        for (int w : *domain) {
            if (host.g.color[w] != h.color[v] || !candidate_ok(v, w, earlier)) continue;
            image[v] = w;
            total += count(depth + 1);
        }
        image[v] = -1;
        return total;
    }
};

// ---------------------------------------------------------------------------
// Sum-product variable elimination. For pattern components admitting an
// elimination order of width <= 2 (paths, trees, cycles, unicyclic graphs and
// their minors) the count is assembled from per-edge messages in time roughly
// |V(G)| * degree^2 per eliminated vertex, instead of exploring the whole
// backtracking tree. Wider components fall back to the search above.

constexpr int kVeWidth = 2;
using u128 = unsigned __int128;

Integer u128_to_integer(u128 v) {
    Integer out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

struct Message {
    int a = -1;
    int b = -1;  // -1 for a unary message over a alone
    std::vector<u128> table;
};

bool hom_count_ve(const ColoredGraph& h, const HostView& host, Integer& result) {
    int n = h.n;
    int host_n = host.g.n;
    // intermediate values are bounded by host_n^n; keep them inside u128
    if (n > 2 && n * std::bit_width(static_cast<unsigned>(host_n) + 1) > 120) return false;

    // greedy min-degree elimination over the fill graph; bail out beyond width 2
    std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
    std::vector<char> h_loop(n, 0);
    for (const auto& [u, v] : h.edges) {
        if (u == v) {
            h_loop[u] = 1;
        } else {
            fill[u][v] = fill[v][u] = 1;
        }
    }
    auto pattern_edge = fill;  // real edges, before fill-in
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    std::vector<std::vector<int>> separators;  // remaining fill-neighbors per step
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = n + 1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            int deg = 0;
            for (int w = 0; w < n; ++w) deg += (!gone[w] && fill[v][w]) ? 1 : 0;
            if (deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        if (best_deg > kVeWidth) return false;
        std::vector<int> sep;
        for (int w = 0; w < n; ++w) {
            if (!gone[w] && fill[best][w]) sep.push_back(w);
        }
        for (std::size_t i = 0; i < sep.size(); ++i) {
            for (std::size_t j = i + 1; j < sep.size(); ++j) {
                fill[sep[i]][sep[j]] = fill[sep[j]][sep[i]] = 1;
            }
        }
        gone[best] = 1;
        order.push_back(best);
        separators.push_back(std::move(sep));
    }

    std::vector<std::vector<int>> cand(n);
    std::vector<std::vector<char>> is_cand(n, std::vector<char>(host_n, 0));
    for (int v = 0; v < n; ++v) {
        for (int w : host.classes[h.color[v]]) {
            if (h_loop[v] && !host.loop[w]) continue;
            cand[v].push_back(w);
            is_cand[v][w] = 1;
        }
        if (cand[v].empty()) {
            result = 0;
            return true;
        }
    }

    std::vector<Message> pool;
    u128 scalar = 1;
    for (int step = 0; step < n; ++step) {
        int x = order[step];
        const auto& sep = separators[step];
        // split off the messages mentioning x; their scopes lie in {x} + sep
        std::vector<Message> unary;
        std::vector<std::vector<Message>> binary(sep.size());
        std::vector<Message> keep;
        for (auto& m : pool) {
            if (m.a != x && m.b != x) {
                keep.push_back(std::move(m));
                continue;
            }
            int other = (m.a == x) ? m.b : m.a;
            if (other < 0) {
                unary.push_back(std::move(m));
                continue;
            }
            for (std::size_t i = 0; i < sep.size(); ++i) {
                if (sep[i] == other) binary[i].push_back(std::move(m));
            }
        }
        pool = std::move(keep);

        auto unary_at = [&](int xv) {
            u128 acc = 1;
            for (const auto& m : unary) {
                acc *= m.table[xv];
                if (acc == 0) break;
            }
            return acc;
        };
        auto binary_at = [&](std::size_t i, int xv, int yv) {
            u128 acc = 1;
            for (const auto& m : binary[i]) {
                acc *= (m.a == x) ? m.table[static_cast<std::size_t>(xv) * host_n + yv]
                                  : m.table[static_cast<std::size_t>(yv) * host_n + xv];
                if (acc == 0) break;
            }
            return acc;
        };
        auto domain = [&](std::size_t i, int xv) -> const std::vector<int>& {
            return pattern_edge[x][sep[i]] ? host.neighbors[xv] : cand[sep[i]];
        };

        if (sep.empty()) {
            u128 total = 0;
            for (int xv : cand[x]) total += unary_at(xv);
            scalar *= total;
            if (scalar == 0) break;
        } else if (sep.size() == 1) {
            int y = sep[0];
            Message out{y, -1, std::vector<u128>(host_n, 0)};
            for (int xv : cand[x]) {
                u128 base = unary_at(xv);
                if (base == 0) continue;
                for (int yv : domain(0, xv)) {
                    if (!is_cand[y][yv]) continue;
                    u128 val = base * binary_at(0, xv, yv);
                    if (val != 0) out.table[yv] += val;
                }
            }
            pool.push_back(std::move(out));
        } else {
            int y = sep[0], z = sep[1];
            Message out{y, z,
                        std::vector<u128>(static_cast<std::size_t>(host_n) * host_n, 0)};
            for (int xv : cand[x]) {
                u128 base = unary_at(xv);
                if (base == 0) continue;
                for (int yv : domain(0, xv)) {
                    if (!is_cand[y][yv]) continue;
                    u128 vy = base * binary_at(0, xv, yv);
                    if (vy == 0) continue;
                    for (int zv : domain(1, xv)) {
                        if (!is_cand[z][zv]) continue;
                        u128 val = vy * binary_at(1, xv, zv);
                        if (val != 0) {
                            out.table[static_cast<std::size_t>(yv) * host_n + zv] += val;
                        }
                    }
                }
            }
            pool.push_back(std::move(out));
        }
    }
    result = u128_to_integer(scalar);
    return true;
}

Integer hom_count_component(const ColoredGraph& h, const HostView& host) {
    Integer ve_result;
    if (hom_count_ve(h, host, ve_result)) return ve_result;
    auto adj_h = neighbor_lists(h);
    auto ord = make_order(h, adj_h, host);
    HomSearch search(h, host, ord);
    return search.count(0);
}

}  // namespace

Integer hom_count(const ColoredGraph& h, const ColoredGraph& g) {
    if (h.num_colors != g.num_colors) {
        throw std::invalid_argument("hom_count: pattern and host must share one color set");
    }
    if (h.n == 0) return 1;
    HostView host(g);
    Integer total = 1;
    for (const auto& comp : connected_components(h)) {
        total *= hom_count_component(comp.graph, host);
        if (total == 0) return 0;
    }
    return total;
}

namespace {

struct InjSearch {
    const ColoredGraph& h;
    const HostView& host;
    std::vector<std::vector<int>> adj_h;
    std::vector<int> order;
    std::vector<std::vector<int>> earlier_neighbors;
    std::vector<char> h_loop;
    std::vector<int> image;
    std::vector<char> used;
    Integer total = 0;

    InjSearch(const ColoredGraph& h_, const HostView& host_)
        : h(h_), host(host_), adj_h(neighbor_lists(h_)), h_loop(h_.n, 0), image(h_.n, -1),
          used(host_.g.n, 0) {
        for (const auto& [u, v] : h.edges) {
            if (u == v) h_loop[u] = 1;
        }
        std::vector<char> placed(h.n, 0), frontier(h.n, 0);
        for (int step = 0; step < h.n; ++step) {
            int pick = -1;
            auto key = [&](int v) {
                return std::tuple(frontier[v] ? 0 : 1,
                                  static_cast<int>(host.classes[h.color[v]].size()),
                                  -static_cast<int>(adj_h[v].size()), v);
            };
            for (int v = 0; v < h.n; ++v) {
                if (placed[v]) continue;
                if (pick == -1 || key(v) < key(pick)) pick = v;
            }
            order.push_back(pick);
            placed[pick] = 1;
            for (int w : adj_h[pick]) frontier[w] = 1;
        }
        std::vector<int> pos(h.n);
        for (int i = 0; i < h.n; ++i) pos[order[i]] = i;
        earlier_neighbors.resize(h.n);
        for (int i = 0; i < h.n; ++i) {
            for (int w : adj_h[order[i]]) {
                if (w != order[i] && pos[w] < i) earlier_neighbors[i].push_back(w);
            }
        }
    }

    void run(int depth) {
        if (depth == h.n) {
            ++total;
            return;
        }
        int v = order[depth];
        const auto& earlier = earlier_neighbors[depth];
        const std::vector<int>* domain = &host.classes[h.color[v]];
        if (!earlier.empty()) domain = &host.neighbors[image[earlier[0]]];
        for (int w : *domain) {
            if (used[w] || host.g.color[w] != h.color[v]) continue;
            if (h_loop[v] && !host.loop[w]) continue;
            bool ok = true;
            for (int u : earlier) {
                if (!host.adj.at(w, image[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            run(depth + 1);
            image[v] = -1;
            used[w] = 0;
        }
    }
};

}  // namespace

Integer injective_hom_count(const ColoredGraph& h, const ColoredGraph& g) {
    if (h.num_colors != g.num_colors) {
        throw std::invalid_argument("injective_hom_count: color sets differ");
    }
    if (h.n > g.n) return 0;
    HostView host(g);
    InjSearch search(h, host);
    search.run(0);
    return search.total;
}

Integer sub_count(const ColoredGraph& h, const ColoredGraph& g) {
    Integer inj = injective_hom_count(h, g);
    if (inj == 0) return 0;
    Integer aut = automorphism_count(h, h.n);
    return inj / aut;  // exact: aut(H) acts freely on injective homomorphisms
}

Integer ind_count(const ColoredGraph& h, const ColoredGraph& g) {
    if (h.num_colors != g.num_colors) {
        throw std::invalid_argument("ind_count: color sets differ");
    }
    if (h.n > g.n) return 0;
    std::vector<int> want = h.color_class_sizes();
    Integer total = 0;
    std::vector<int> pick;
    pick.reserve(h.n);
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == h.n) {
            if (induced_subgraph(g, pick).color_class_sizes() == want &&
                are_isomorphic(h, induced_subgraph(g, pick))) {
                ++total;
            }
            return;
        }
        int remaining = h.n - static_cast<int>(pick.size());
        for (int v = start; v + remaining <= g.n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return total;
}

MotifOracle::MotifOracle(std::function<Rational(const ColoredGraph&)> fn, int support_bound,
                         bool pure, std::string name)
    : fn_(std::move(fn)), support_bound_(support_bound), pure_(pure), name_(std::move(name)),
      state_(std::make_shared<LedgerState>()) {}

Rational MotifOracle::operator()(const ColoredGraph& g) const {
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        ++state_->data.calls;
        state_->data.max_vertices = std::max(state_->data.max_vertices, g.n);
    }
    return fn_(g);
}

OracleLedger MotifOracle::ledger() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->data;
}

void MotifOracle::reset_ledger() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->data = OracleLedger{};
}

MotifOracle make_oracle(OracleKind kind, const ColoredGraph& pattern) {
    switch (kind) {
        case OracleKind::Hom:
            return MotifOracle([pattern](const ColoredGraph& g) { return Rational(hom_count(pattern, g)); },
                               pattern.n, true, "hom");
        case OracleKind::Sub:
            return MotifOracle([pattern](const ColoredGraph& g) { return Rational(sub_count(pattern, g)); },
                               pattern.n, true, "sub");
        case OracleKind::Ind:
            return MotifOracle([pattern](const ColoredGraph& g) { return Rational(ind_count(pattern, g)); },
                               pattern.n, true, "ind");
    }
    throw std::logic_error("unknown oracle kind");
}

}  // namespace homcfi
