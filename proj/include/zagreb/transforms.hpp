#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

struct MoveResult {
    Tree tree;
    std::int64_t delta = 0;  // m2(after) - m2(before), exact
};

// Deletes the degree-2 vertex v_prime and joins its neighbors v, v''.
// delta = d*d'' - 2d - 2d'' where d, d'' are the neighbor degrees. In strict
// mode at least one neighbor must have degree <= 2 (the configuration that is
// always improving); relaxed mode allows any degree-2 vertex, the delta
// formula stays exact. Vertex ids above v_prime shift down by one.
MoveResult contract_degree2(const Tree& t, int v_prime, bool relaxed = false);

// Splits a vertex v of degree p >= 5: the three highest-degree neighbors
// (ties by ascending id) stay on v, a degree-2 vertex v' and a collector v''
// are inserted, and neighbors 4..p move to v''. New ids are appended.
// delta = 2p + 4 - 2*sum(d_i, i=4..p) - (p-4)*sum(d_i, i=1..3).
MoveResult split_high_degree(const Tree& t, int v);

struct TrajectoryStep {
    int step = 0;
    std::string move;   // "contract" | "split"
    int target = 0;
    std::int64_t delta = 0;
    std::int64_t m2_after = 0;
};

// Applies strictly improving moves until none applies: vertices are scanned
// in ascending id, contractions before splits, first improving move taken.
// Pendant count is invariant and m2 strictly decreases each step, so the
// search terminates.
Tree local_search(const Tree& t, std::vector<TrajectoryStep>* trajectory = nullptr);

}  // namespace zagreb
