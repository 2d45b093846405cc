#include "zagreb/tree.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace zagreb {

Tree Tree::from_edges(const std::vector<Edge>& edges) {
    if (edges.empty())
        throw tree_error(tree_error::code::empty, "empty edge list");
    int n = 0;
    for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
    return from_edges(n, edges);
}

Tree Tree::from_edges(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 1)
        throw tree_error(tree_error::code::empty, "tree needs at least one vertex");
    if (vertex_count > max_vertices)
        throw tree_error(tree_error::code::too_many_vertices,
                         "vertex count exceeds supported maximum");

    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw tree_error(tree_error::code::vertex_out_of_range, "vertex id out of range");
        if (e.u == e.v)
            throw tree_error(tree_error::code::self_loop, "self-loop");
    }

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (const Edge& e : edges)
        normalized.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw tree_error(tree_error::code::duplicate_edge, "duplicate edge");

    if (static_cast<int>(edges.size()) > vertex_count - 1)
        throw tree_error(tree_error::code::cycle, "cycle detected");
    if (static_cast<int>(edges.size()) < vertex_count - 1)
        throw tree_error(tree_error::code::disconnected, "disconnected input");

    Tree t;
    t.adj_.assign(vertex_count, {});
    for (const auto& [u, v] : normalized) {
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());

    // Edge count is N-1, so connectivity is equivalent to acyclicity here;
    // a failed BFS means some component carries the cycle.
    std::vector<char> seen(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : t.adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    if (reached != vertex_count)
        throw tree_error(tree_error::code::disconnected, "disconnected input");

    for (const auto& nb : t.adj_) {
        if (nb.size() == 1) ++t.pendants_;
        t.max_degree_ = std::max(t.max_degree_, static_cast<int>(nb.size()));
    }
    return t;
}

bool Tree::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edge_list() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(std::max(0, edge_count())));
    for_each_edge([&](int u, int v) { out.push_back({u, v}); });
    return out;
}

Tree build_tree(const std::vector<Edge>& edges) { return Tree::from_edges(edges); }

DegreeSummary degree_summary(const Tree& t) {
    DegreeSummary s{};
    s.pendant_count = t.pendant_count();
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) >= 2) s.internal_degrees.push_back(t.degree(v));
    std::sort(s.internal_degrees.begin(), s.internal_degrees.end());
    s.internal_count = static_cast<int>(s.internal_degrees.size());

    if (s.pendant_count > 2) {
        long long acc = 0;
        for (int d : s.internal_degrees) acc += d - 2;
        if (acc != s.pendant_count - 2)
            throw std::logic_error("degree identity violated");
    }
    return s;
}

std::vector<int> tree_centers(const Tree& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    std::vector<int> deg(n);
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(frontier.size());
        for (int v : frontier)
            for (int u : t.neighbors(v))
                if (--deg[u] == 1) next.push_back(u);
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

namespace {

// Level encoding rooted at `root`: code(v) = '(' + sorted child codes + ')'.
std::string rooted_code(const Tree& t, int root) {
    int n = t.vertex_count();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int v : t.neighbors(u))
            if (parent[v] == -1) {
                parent[v] = u;
                order.push_back(v);
            }
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        std::vector<std::string> child_codes;
        for (int v : t.neighbors(u))
            if (v != u && parent[v] == u) child_codes.push_back(std::move(code[v]));
        std::sort(child_codes.begin(), child_codes.end());
        std::string& c = code[u];
        c.reserve(2 + child_codes.size() * 2);
        c.push_back('(');
        for (const auto& cc : child_codes) c += cc;
        c.push_back(')');
    }
    return code[root];
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
    std::vector<int> centers = tree_centers(t);
    std::string best = rooted_code(t, centers[0]);
    for (std::size_t i = 1; i < centers.size(); ++i) {
        std::string c = rooted_code(t, centers[i]);
        if (c < best) best = std::move(c);
    }
    return best;
}

}  // namespace zagreb
