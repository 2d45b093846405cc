#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

// Constraints for exhaustive generation of non-isomorphic trees with a fixed
// pendant count.
//
// reduced=true restricts to trees with no edge whose endpoints both have
// degree <= 2 (K_2 is admitted as the single n=2 member; the restriction is
// only meaningful from n >= 3). For reduced trees the order is provably
// bounded: internal vertices of degree >= 3 number at most n-2 by the degree
// identity, each degree-2 vertex has both neighbors of degree >= 3 and these
// subdivide distinct internal edges, of which there are at most n-3, hence
// N <= n + (n-2) + (n-3) = 3n-5. The same default cap is used for
// reduced=false so the two classes are comparable.
struct EnumConstraints {
    int pendants = 0;
    bool reduced = false;
    std::optional<int> max_degree;  // >= 3 when set
    std::optional<int> max_order;   // default max(n, 3n-5)
    std::uint64_t budget = 1'000'000'000;  // candidate-expansion cap
    int threads = 1;
};

int default_max_order(int pendants);

// True iff t satisfies every constraint in c (pendant count, reduced
// predicate, degree cap, order cap). Used by the generator's own tests.
bool satisfies_constraints(const Tree& t, const EnumConstraints& c);

// Streams every tree with exactly c.pendants pendant vertices satisfying the
// constraints, once per isomorphism class, in a deterministic order that does
// not depend on c.threads. Throws budget_error when the candidate budget is
// exceeded.
//
// Generation works skeleton-first: free trees on the degree->=3 vertices are
// enumerated by leaf augmentation with canonical deduplication, then degree-2
// chains are distributed over skeleton edges (at most one per edge when
// reduced) and pendant bundles over skeleton vertices subject to the degree
// identity. Isomorphic duplicates can only arise within one skeleton, so
// deduplication memory stays per-skeleton.
void enumerate_trees(const EnumConstraints& c, const std::function<void(const Tree&)>& sink);

std::uint64_t count_trees(const EnumConstraints& c);

struct MinimizationResult {
    double min_value = 0.0;
    bool integer_valued = false;
    std::vector<Tree> witnesses;  // all minimizers, sorted by canonical code
    std::uint64_t trees_examined = 0;
};

// Exact minimum of the index over the enumerated class, with all minimizers.
MinimizationResult brute_min(const EnumConstraints& c, const NamedIndex& index);

}  // namespace zagreb
