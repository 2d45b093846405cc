#pragma once

#include <vector>

namespace zagreb::detail {

template <typename F>
void partition_rec(int remaining, int slots, int max_part, std::vector<int>& buf, F& f) {
    if (slots == 1) {
        if (remaining >= 1 && remaining <= max_part) {
            buf.push_back(remaining);
            f(buf);
            buf.pop_back();
        }
        return;
    }
    int lo = (remaining + slots - 1) / slots;  // keep the suffix feasible
    int hi = std::min(max_part, remaining - slots + 1);
    for (int first = lo; first <= hi; ++first) {
        buf.push_back(first);
        partition_rec(remaining - first, slots - 1, first, buf, f);
        buf.pop_back();
    }
}

// Visits every partition of n into exactly k positive non-increasing parts,
// in ascending lexicographic order of the part tuple.
template <typename F>
void for_each_partition(int n, int k, F f) {
    if (k < 1 || n < k) return;
    std::vector<int> buf;
    buf.reserve(k);
    partition_rec(n, k, n, buf, f);
}

}  // namespace zagreb::detail
