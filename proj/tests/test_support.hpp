#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zagreb/enumerate.hpp"
#include "zagreb/tree.hpp"

// Independent oracles used by the unit and acceptance suites. These stay
// deliberately naive: they validate the production generator and the DP by a
// second route, so they must not share code paths with either.
namespace zagreb::testsupport {

// Every free tree of order 1..max_order, built by attach-a-vertex BFS with
// canonical deduplication. Small orders only (the catalogue through order 13
// is ~2300 trees).
std::vector<Tree> all_trees_up_to_order(int max_order);

// The naive generator filtered through independent constraint checks.
std::vector<Tree> naive_trees_with_pendants(const EnumConstraints& c);

// True when no edge has both endpoints of degree <= 2 (K_2 exempt).
bool is_reduced(const Tree& t);

// Exhaustive minimum attached-tree cost: enumerates every attached tree with
// n pendants whose internal degrees are at most 6 and in which no two
// degree-2 vertices are adjacent (a degree-2 subroot directly under the root
// is excluded when p = 2), then evaluates each cost directly from the built
// tree. n <= 6 is the intended scale.
std::int64_t attached_oracle_min(int n, int p);

// All attached trees of the class above, root = vertex 0.
std::vector<Tree> attached_oracle_class(int n, bool allow_deg2_subroot);

// Uniform random labeled tree of the given order via Pruefer sequences.
Tree random_tree(std::mt19937& rng, int order);

// Random tree with an exact pendant count: a random internal degree multiset
// satisfying the degree identity is realized through a Pruefer sequence.
Tree random_tree_with_pendants(std::mt19937& rng, int pendants);

// Random tree whose internal vertices all have degree 3, with the given leaf
// count (grown by repeatedly expanding a random leaf into a degree-3 vertex).
Tree random_three_tree(std::mt19937& rng, int leaves);

}  // namespace zagreb::testsupport
