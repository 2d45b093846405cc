#include "zagreb/dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "partitions.hpp"
#include "zagreb/families.hpp"

namespace zagreb {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

std::int64_t attached_cost(const Tree& t, int root, int p) {
    if (root < 0 || root >= t.vertex_count())
        throw std::invalid_argument("root out of range");
    if (p < 1) throw std::invalid_argument("virtual degree must be at least 1");
    if (t.degree(root) != 1)
        throw tree_error(tree_error::code::not_a_leaf, "attached-tree root must be a leaf");
    int sub = t.neighbors(root)[0];
    std::int64_t acc = static_cast<std::int64_t>(p) * t.degree(sub);
    t.for_each_edge([&](int u, int v) {
        if ((u == root && v == sub) || (u == sub && v == root)) return;
        acc += static_cast<std::int64_t>(t.degree(u)) * t.degree(v);
    });
    return acc;
}

void CaSolver::ensure(int n) {
    if (n <= filled_) return;
    for (int p = 2; p <= 6; ++p) cstar_[p].resize(n + 1, kInf);
    for (int d = 3; d <= 6; ++d)
        for (int j = 1; j <= d - 1; ++j) tdp_[d][j].resize(n + 1, kInf);

    for (int m = std::max(1, filled_ + 1); m <= n; ++m) {
        if (m == 1) {
            for (int p = 2; p <= 6; ++p) cstar_[p][1] = p;
            for (int d = 3; d <= 6; ++d) tdp_[d][1][1] = d;
            continue;
        }
        for (int d = 3; d <= 6; ++d)
            for (int j = 2; j <= d - 1; ++j) {
                std::int64_t best = kInf;
                for (int t = 1; t <= m - (j - 1); ++t) {
                    std::int64_t left = tdp_[d][1][t];
                    std::int64_t rest = tdp_[d][j - 1][m - t];
                    if (left < kInf && rest < kInf) best = std::min(best, left + rest);
                }
                tdp_[d][j][m] = best;
            }
        std::int64_t gt2[7];
        for (int p = 2; p <= 6; ++p) {
            std::int64_t best = kInf;
            for (int d = 3; d <= 6; ++d) {
                if (m < d - 1) continue;
                std::int64_t split = tdp_[d][d - 1][m];
                if (split < kInf)
                    best = std::min(best, static_cast<std::int64_t>(p) * d + split);
            }
            gt2[p] = best;
        }
        cstar_[2][m] = gt2[2];
        for (int p = 3; p <= 6; ++p)
            cstar_[p][m] = std::min<std::int64_t>(gt2[p], 2 * static_cast<std::int64_t>(p) + cstar_[2][m]);
        for (int d = 3; d <= 6; ++d) tdp_[d][1][m] = cstar_[d][m];
    }
    filled_ = n;
}

std::int64_t CaSolver::solve(int n, int p) {
    if (n < 1) throw std::invalid_argument("pendant count must be at least 1");
    if (p < min_virtual_degree || p > max_virtual_degree)
        throw std::invalid_argument("virtual degree outside 2..6 (use min_m2 for whole trees)");
    ensure(n);
    return cstar_[p][n];
}

CaChoice CaSolver::choice(int n, int p) {
    std::int64_t target = solve(n, p);
    if (n == 1) return {1, {}};

    // Degree-2 subroot first (it precedes d = 3..6 in the tie order), then
    // the partitions for each d in ascending lexicographic order; the first
    // candidate attaining the optimum is the lexicographically smallest.
    if (p != 2 && 2 * static_cast<std::int64_t>(p) + cstar_[2][n] == target) return {2, {n}};
    for (int d = 3; d <= 6; ++d) {
        if (n < d - 1) continue;
        CaChoice found;
        detail::for_each_partition(n, d - 1, [&](const std::vector<int>& parts) {
            if (!found.parts.empty()) return;
            std::int64_t acc = static_cast<std::int64_t>(p) * d;
            for (int part : parts) acc += cstar_[d][part];
            if (acc == target) found = {d, parts};
        });
        if (!found.parts.empty()) return found;
    }
    throw std::logic_error("no split reproduces the memoized optimum");
}

int CaSolver::build_attached(int n, int p, int parent, std::vector<Edge>& edges, int& next_id) {
    if (n == 1) {
        int leaf = next_id++;
        edges.push_back({parent, leaf});
        return leaf;
    }
    CaChoice ch = choice(n, p);
    int sub = next_id++;
    edges.push_back({parent, sub});
    if (ch.sub_root_degree == 2) {
        build_attached(n, 2, sub, edges, next_id);
    } else {
        for (int part : ch.parts) build_attached(part, ch.sub_root_degree, sub, edges, next_id);
    }
    return sub;
}

Tree CaSolver::witness(int n, int p) {
    solve(n, p);
    std::vector<Edge> edges;
    int next_id = 1;  // root is vertex 0
    build_attached(n, p, 0, edges, next_id);
    return Tree::from_edges(next_id, edges);
}

CaSolver::M2Min CaSolver::min_m2(int n) {
    if (n < 2) throw std::invalid_argument("whole-tree minimization needs n >= 2");

    M2Min best;
    best.value = star_m2(n);
    best.witness = star(n);
    if (n == 2) {
        // K_2 is the only tree with two pendants and no internal vertex.
        best.value = 1;
        best.witness = Tree::from_edges(2, {{0, 1}});
    }
    for (int d = 3; d <= 6; ++d) {
        int m = n - d + 1;
        if (m < 1) continue;
        std::int64_t value = static_cast<std::int64_t>(d - 1) * d + solve(m, d);
        if (value < best.value) {
            Tree attached = witness(m, d);
            std::vector<Edge> edges = attached.edge_list();
            int next = attached.vertex_count();
            for (int i = 0; i < d - 1; ++i) edges.push_back({0, next++});
            best.value = value;
            best.witness = Tree::from_edges(next, edges);
        }
    }
    return best;
}

namespace {
std::mutex shared_mutex;
CaSolver& shared_solver() {
    static CaSolver solver;
    return solver;
}
}  // namespace

std::int64_t solve_ca(int n, int p) {
    std::lock_guard<std::mutex> lock(shared_mutex);
    return shared_solver().solve(n, p);
}

CaChoice solve_ca_choice(int n, int p) {
    std::lock_guard<std::mutex> lock(shared_mutex);
    return shared_solver().choice(n, p);
}

Tree solve_ca_witness(int n, int p) {
    std::lock_guard<std::mutex> lock(shared_mutex);
    return shared_solver().witness(n, p);
}

CaSolver::M2Min min_m2(int n) {
    std::lock_guard<std::mutex> lock(shared_mutex);
    return shared_solver().min_m2(n);
}

GeneralizedSolver::GeneralizedSolver(WeightScheme scheme, int degree_cap, bool allow_deg2_chain)
    : scheme_(std::move(scheme)), cap_(degree_cap), allow_chain_(allow_deg2_chain) {
    if (cap_ < 3 || cap_ > 8)
        throw std::invalid_argument("degree cap must be in 3..8");
    memo_.assign(cap_ + 1, {});
}

double GeneralizedSolver::cgt2(int n, int p) {
    double best = std::numeric_limits<double>::infinity();
    for (int d = 3; d <= cap_; ++d) {
        if (n < d - 1) continue;
        double head = scheme_.vertex_cost(d) + scheme_.edge_cost(p, d);
        detail::for_each_partition(n, d - 1, [&](const std::vector<int>& parts) {
            double acc = head;
            for (int part : parts) acc += solve(part, d);
            best = std::min(best, acc);
        });
    }
    return best;
}

double GeneralizedSolver::solve(int n, int p) {
    if (n < 1) throw std::invalid_argument("pendant count must be at least 1");
    if (p < 2 || p > cap_) throw std::invalid_argument("virtual degree outside 2..cap");
    if (n == 1) return scheme_.vertex_cost(1) + scheme_.edge_cost(p, 1);

    auto& row = memo_[p];
    if (static_cast<int>(row.size()) <= n)
        row.resize(n + 1, std::numeric_limits<double>::quiet_NaN());
    if (!std::isnan(row[n])) return row[n];

    double value;
    if (p == 2) {
        // A degree-2 vertex below a degree-2 root adds c1(2) + c2(2,2) >= 0
        // per link, so chains never shorten the optimum; allow_chain only
        // widens the class, the fixed point stays cgt2(n,2).
        double step = scheme_.vertex_cost(2) + scheme_.edge_cost(2, 2);
        if (allow_chain_ && step < 0.0)
            throw std::invalid_argument("negative degree-2 chain cost is unsupported");
        value = cgt2(n, 2);
    } else {
        value = cgt2(n, p);
        double via2 = scheme_.vertex_cost(2) + scheme_.edge_cost(p, 2) + solve(n, 2);
        value = std::min(value, via2);
    }
    row[n] = value;
    return value;
}

double GeneralizedSolver::whole_tree_min(int n) {
    if (n < 2) throw std::invalid_argument("whole-tree minimization needs n >= 2");
    double best = abstract_cost(star(n), scheme_);
    if (n == 2)
        best = std::min(best, abstract_cost(Tree::from_edges(2, {{0, 1}}), scheme_));
    for (int d = 3; d <= cap_; ++d) {
        int m = n - d + 1;
        if (m < 1) continue;
        double stem = scheme_.vertex_cost(d) +
                      (d - 1) * (scheme_.vertex_cost(1) + scheme_.edge_cost(1, d)) +
                      solve(m, d);
        best = std::min(best, stem);
    }
    return best;
}

}  // namespace zagreb
