#pragma once

#include <cstdint>
#include <vector>

#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

// Cost of an attached tree: the root must be a leaf of t and carries a
// virtual degree p >= 1; the root-subroot edge contributes p * d(subroot) and
// every other edge its plain degree product. The root's own degree never
// enters any other term.
std::int64_t attached_cost(const Tree& t, int root, int p);

struct CaChoice {
    int sub_root_degree = 0;        // 1 for the n=1 base case (K_2)
    std::vector<int> parts;         // pendant split, non-increasing
};

// Exact optimal attached-tree costs C(n,p) for the M2 index over the class
// where every internal degree is at most 6 and no two degree-2 vertices are
// adjacent. Recursion:
//
//   C(1,p) = p
//   Cgt2(n,p) = min over d=3..6 and non-increasing splits n_1+...+n_{d-1}=n
//               of p*d + sum C(n_i,d)
//   C(n,2) = Cgt2(n,2)                       (degree-2 subroot forbidden)
//   C(n,p) = min(Cgt2(n,p), 2p + C(n,2))     for p = 3..6
//
// Values are filled bottom-up with an unordered-multiset DP over the split
// (summands commute, so restricting to non-increasing splits is lossless);
// the argmin split for witnesses is recovered by explicit partition
// enumeration at the queried states with (cost, d, lexicographic parts)
// tie-breaking. Costs are exact integers. Not internally synchronized; use
// the module-level solve_ca/min_m2 helpers for shared access.
class CaSolver {
public:
    static constexpr int min_virtual_degree = 2;
    static constexpr int max_virtual_degree = 6;

    std::int64_t solve(int n, int p);
    CaChoice choice(int n, int p);
    // Attached witness whose root is vertex 0; attached_cost(t, 0, p)
    // equals solve(n, p).
    Tree witness(int n, int p);

    struct M2Min {
        std::int64_t value = 0;
        Tree witness;
    };

    // Global M2 minimum over trees with n >= 2 pendants: the star, K_2 when
    // n = 2, and stem assemblies (d-1)*d + C(n-d+1, d) for stem degrees
    // d = 3..6 are compared.
    M2Min min_m2(int n);

private:
    void ensure(int n);
    std::int64_t cgt2(int n, int p) const;
    std::int64_t best_split(int n, int d) const;
    int build_attached(int n, int p, int parent, std::vector<Edge>& edges, int& next_id);

    // cstar_[p][n]; tdp_[d][j][m] = min over j-part splits of m of
    // sum C(part, d).
    std::vector<std::int64_t> cstar_[7];
    std::vector<std::int64_t> tdp_[7][6];
    int filled_ = 0;
};

// Shared-solver conveniences (serialized internally; results are
// deterministic, so interleaving cannot be observed).
std::int64_t solve_ca(int n, int p);
CaChoice solve_ca_choice(int n, int p);
Tree solve_ca_witness(int n, int p);
CaSolver::M2Min min_m2(int n);

// Same Bellman skeleton with pluggable costs and degree cap. Exact for the
// M2 scheme with cap 6; for anything else this searches a restricted class
// (degrees <= cap, no adjacent degree-2 vertices unless allow_deg2_chain) and
// is a heuristic upper estimate of the unrestricted minimum, not a proven
// optimum. With non-negative costs, adjacent degree-2 vertices never improve
// an attached tree, so allow_deg2_chain widens the class without changing the
// value; both paths are kept and tested equal.
class GeneralizedSolver {
public:
    GeneralizedSolver(WeightScheme scheme, int degree_cap, bool allow_deg2_chain);

    double solve(int n, int p);      // 2 <= p <= degree_cap
    double whole_tree_min(int n);    // star + K_2 + stem assemblies

private:
    double cgt2(int n, int p);

    WeightScheme scheme_;
    int cap_;
    bool allow_chain_;
    // memo_[p][n], NaN = unset
    std::vector<std::vector<double>> memo_;
};

}  // namespace zagreb
