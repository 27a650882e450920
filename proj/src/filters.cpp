#include "homcfi/filters.hpp"

#include "homcfi/rational.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace homcfi {

int ColorCoarsening::num_colors() const {
    int n = 0;
    for (const auto& part : parts) n += static_cast<int>(part.size());
    return n;
}

void ColorCoarsening::validate() const {
    if (parts.empty() || parts.size() != targets.size()) {
        throw std::invalid_argument("color coarsening: need one target per part");
    }
    std::vector<char> seen(num_colors(), 0);
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("color coarsening: empty part");
        for (int c : part) {
            if (c < 0 || c >= num_colors() || seen[c]) {
                throw std::invalid_argument("color coarsening: parts must partition 0..k-1");
            }
            seen[c] = 1;
        }
    }
    for (int k : targets) {
        if (k < 0) throw std::invalid_argument("color coarsening: negative target");
    }
}

std::vector<int> ColorCoarsening::part_counts(const ColoredGraph& g) const {
    std::vector<int> part_of(num_colors(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int c : parts[i]) part_of[c] = static_cast<int>(i);
    }
    std::vector<int> counts(parts.size(), 0);
    for (int v = 0; v < g.n; ++v) ++counts[part_of[g.color[v]]];
    return counts;
}

bool ColorCoarsening::matches(const ColoredGraph& g) const {
    return part_counts(g) == targets;
}

ColorCoarsening total_count_coarsening(int num_colors, int k) {
    std::vector<int> all(num_colors);
    for (int c = 0; c < num_colors; ++c) all[c] = c;
    return ColorCoarsening{{all}, {k}};
}

ColoredGraph looped_template(const ColorCoarsening& eta, const std::vector<int>& a) {
    eta.validate();
    if (a.size() != eta.parts.size()) {
        throw std::invalid_argument("looped_template: need one multiplicity per part");
    }
    std::vector<int> colors;
    for (std::size_t i = 0; i < eta.parts.size(); ++i) {
        if (a[i] < 1) throw std::invalid_argument("looped_template: multiplicities start at 1");
        for (int c : eta.parts[i]) {
            for (int copy = 0; copy < a[i]; ++copy) colors.push_back(c);
        }
    }
    int n = static_cast<int>(colors.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) edges.push_back({u, v});  // reflexive and complete
    }
    return ColoredGraph::make(eta.num_colors(), colors, edges);
}

namespace {

// beta coefficients for (eta, s), indexed like the row-major grid a in
// [1..s+1]^r; solved once and cached
std::vector<Rational> interpolation_coefficients(const ColorCoarsening& eta, int s) {
    static std::mutex mu;
    static std::map<std::string, std::vector<Rational>> cache;
    std::ostringstream key;
    key << s << ":";
    for (std::size_t i = 0; i < eta.parts.size(); ++i) {
        key << eta.parts[i].size() << "^" << eta.targets[i] << ",";
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key.str());
        if (it != cache.end()) return it->second;
    }
    int r = static_cast<int>(eta.parts.size());
    int side = s + 1;
    int dim = 1;
    for (int i = 0; i < r; ++i) dim *= side;
    // rows: exponent vectors n in {0..s}^r; columns: points a in {1..s+1}^r;
    // entry prod a_i^{n_i}; right-hand side 1 exactly at n = targets
    std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim + 1, 0));
    for (int row = 0; row < dim; ++row) {
        int rem = row;
        std::vector<int> n(r);
        for (int i = r - 1; i >= 0; --i) {
            n[i] = rem % side;
            rem /= side;
        }
        for (int col = 0; col < dim; ++col) {
            int crem = col;
            Integer value = 1;
            for (int i = r - 1; i >= 0; --i) {
                int a_i = crem % side + 1;
                crem /= side;
                for (int e = 0; e < n[i]; ++e) value *= a_i;
            }
            mat[row][col] = Rational(value);
        }
        bool is_target = true;
        for (int i = 0; i < r; ++i) {
            if (n[i] != eta.targets[i]) is_target = false;
        }
        mat[row][dim] = is_target ? 1 : 0;
    }
    // exact Gaussian elimination
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row) {
            if (mat[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw std::logic_error("cardinality_filter: interpolation system singular");
        std::swap(mat[col], mat[pivot]);
        Rational inv = Rational(1) / mat[col][col];
        for (int j = col; j <= dim; ++j) mat[col][j] *= inv;
        for (int row = 0; row < dim; ++row) {
            if (row == col || mat[row][col] == 0) continue;
            Rational factor = mat[row][col];
            for (int j = col; j <= dim; ++j) mat[row][j] -= factor * mat[col][j];
        }
    }
    std::vector<Rational> beta(dim);
    for (int col = 0; col < dim; ++col) beta[col] = mat[col][dim];
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key.str(), std::move(beta)).first->second;
}

}  // namespace

QuantumGraph cardinality_filter(const ColorCoarsening& eta, int s) {
    eta.validate();
    int sum = 0;
    for (int k : eta.targets) sum += k;
    if (sum > s) throw std::invalid_argument("cardinality_filter: targets exceed the size bound");
    auto beta = interpolation_coefficients(eta, s);
    int r = static_cast<int>(eta.parts.size());
    int side = s + 1;
    WeightedGraphs terms;
    for (std::size_t col = 0; col < beta.size(); ++col) {
        int crem = static_cast<int>(col);
        std::vector<int> a(r);
        for (int i = r - 1; i >= 0; --i) {
            a[i] = crem % side + 1;
            crem /= side;
        }
        terms.emplace_back(beta[col], looped_template(eta, a));
    }
    return collect(terms);
}

QuantumGraph inclusion_exclusion_filter(const ColorfulGraph& s, int edge_cap) {
    int m = static_cast<int>(s.g.edges.size());
    if (m > edge_cap) {
        throw std::length_error("inclusion_exclusion_filter: edge count exceeds the cap");
    }
    WeightedGraphs terms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1) edges.push_back(s.g.edges[i]);
        }
        int dropped = m - static_cast<int>(edges.size());
        terms.emplace_back(dropped % 2 == 0 ? 1 : -1,
                           ColoredGraph::make(s.n(), s.g.color, edges));
    }
    return collect(terms);
}

Rational apply_filters(const MotifOracle& p, const std::vector<QuantumGraph>& filters,
                       const ColoredGraph& g) {
    for (const auto& f : filters) {
        if (f.empty()) return 0;  // tensoring with the zero quantum graph
        if (f.num_colors != g.num_colors) {
            throw std::invalid_argument("apply_filters: color sets differ");
        }
    }
    Rational total = 0;
    std::vector<std::size_t> pick(filters.size(), 0);
    // stream the Cartesian product of constituent choices; one call each
    while (true) {
        Rational coeff = 1;
        ColoredGraph host = g;
        for (std::size_t i = 0; i < filters.size(); ++i) {
            coeff *= filters[i].coefficients[pick[i]];
            host = tensor(host, filters[i].constituents[pick[i]]);
        }
        total += coeff * p(host);
        std::size_t i = 0;
        for (; i < filters.size(); ++i) {
            if (++pick[i] < filters[i].size()) break;
            pick[i] = 0;
        }
        if (i == filters.size()) break;
    }
    return total;
}

}  // namespace homcfi
