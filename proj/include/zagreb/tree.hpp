#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

// Validation failure while constructing or decoding a tree. Each failure mode
// carries its own code so callers can tell malformed input apart from
// structurally wrong graphs.
class tree_error : public std::runtime_error {
public:
    enum class code {
        self_loop,
        duplicate_edge,
        cycle,
        disconnected,
        vertex_out_of_range,
        too_many_vertices,
        empty,
        bad_format,
        not_a_leaf,
    };

    tree_error(code c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    code error_code() const noexcept { return code_; }

private:
    code code_;
};

// Search/evaluation budget exhausted; never a silent truncation.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u;
    int v;
};

// Undirected labeled tree over dense vertex ids 0..N-1. Immutable once built;
// every operation on it is pure, so values can be shared between threads.
class Tree {
public:
    static constexpr int max_vertices = 1 << 16;

    Tree() = default;

    // N inferred as max vertex id + 1.
    static Tree from_edges(const std::vector<Edge>& edges);
    // Explicit vertex count (graph6 decoding needs isolated-vertex detection).
    static Tree from_edges(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return vertex_count() > 0 ? vertex_count() - 1 : 0; }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int pendant_count() const noexcept { return pendants_; }
    int max_degree() const noexcept { return max_degree_; }
    bool adjacent(int u, int v) const;

    // Each edge once with u < v, sorted.
    std::vector<Edge> edge_list() const;

    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) f(u, v);
    }

private:
    std::vector<std::vector<int>> adj_;
    int pendants_ = 0;
    int max_degree_ = 0;
};

Tree build_tree(const std::vector<Edge>& edges);

struct DegreeSummary {
    int pendant_count;                  // n
    int internal_count;                 // q
    std::vector<int> internal_degrees;  // ascending
};

// n, q and the internal degree multiset. For n > 2 the identity
// n - 2 = sum(d_i - 2) is checked and a violation throws (it cannot happen
// for a valid tree; the check guards this module's own bookkeeping).
DegreeSummary degree_summary(const Tree& t);

// Canonical byte string, equal iff the trees are isomorphic. Center-rooted
// level encoding of the free tree; when the center is an edge, the smaller of
// the two rooted codes is taken.
using CanonicalCode = std::string;
CanonicalCode canonical_code(const Tree& t);

// One or two center vertices (the middle of a longest path).
std::vector<int> tree_centers(const Tree& t);

}  // namespace zagreb
