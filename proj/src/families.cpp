#include "zagreb/families.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

Tree star(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 1; i <= n; ++i) edges.push_back({0, i});
    return Tree::from_edges(n + 1, edges);
}

Tree double_broom(int a, int m, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("double broom needs a, b >= 1");
    if (m < 2) throw std::invalid_argument("double broom needs m >= 2 path vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
    int next = m;
    for (int i = 0; i < a; ++i) edges.push_back({0, next++});
    for (int i = 0; i < b; ++i) edges.push_back({m - 1, next++});
    return Tree::from_edges(m + a + b, edges);
}

Tree delta_tree(int delta, int n) {
    if (delta < 3) throw std::invalid_argument("delta tree needs delta >= 3");
    if (n < 2 || (n - 2) % (delta - 2) != 0)
        throw std::invalid_argument("delta tree needs (n-2) divisible by (delta-2)");
    int q = (n - 2) / (delta - 2);
    if (q == 1) return star(n);  // single internal vertex of degree delta = n
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i) edges.push_back({i, i + 1});
    int next = q;
    for (int i = 0; i < q; ++i) {
        int bundle = (i == 0 || i == q - 1) ? delta - 1 : delta - 2;
        for (int j = 0; j < bundle; ++j) edges.push_back({i, next++});
    }
    return Tree::from_edges(next, edges);
}

Tree caterpillar_three_tree(int leaves) {
    if (leaves < 3) throw std::invalid_argument("3-tree needs at least 3 leaves");
    if (leaves == 3) return star(3);
    int q = leaves - 2;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < q; ++i) edges.push_back({i, i + 1});
    int next = q;
    for (int i = 0; i < q; ++i) {
        int bundle = (i == 0 || i == q - 1) ? 2 : 1;
        for (int j = 0; j < bundle; ++j) edges.push_back({i, next++});
    }
    return Tree::from_edges(next, edges);
}

Tree t45_on_skeleton(const Tree& three_tree, int s4) {
    std::vector<int> leaves;
    for (int v = 0; v < three_tree.vertex_count(); ++v) {
        int d = three_tree.degree(v);
        if (d == 1)
            leaves.push_back(v);
        else if (d != 3)
            throw std::invalid_argument("skeleton is not a 3-tree");
    }
    if (s4 < 0 || s4 > static_cast<int>(leaves.size()))
        throw std::invalid_argument("s4 out of range for skeleton");
    std::vector<Edge> edges = three_tree.edge_list();
    int next = three_tree.vertex_count();
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        int bundle = (static_cast<int>(i) < s4) ? 3 : 4;
        for (int j = 0; j < bundle; ++j) edges.push_back({leaves[i], next++});
    }
    return Tree::from_edges(next, edges);
}

Tree t45(int s4, int s5) {
    if (s4 < 0 || s5 < 0 || s4 + s5 < 3)
        throw std::invalid_argument("t45 needs s4, s5 >= 0 and s4 + s5 >= 3");
    return t45_on_skeleton(caterpillar_three_tree(s4 + s5), s4);
}

std::int64_t star_m1(int n) {
    return static_cast<std::int64_t>(n) * n + n;
}

std::int64_t star_m2(int n) {
    return static_cast<std::int64_t>(n) * n;
}

std::int64_t double_broom_m2(int a, int m, int b) {
    if (a < 1 || b < 1 || m < 2) throw std::invalid_argument("bad double broom parameters");
    std::int64_t left = static_cast<std::int64_t>(a) * (a + 1);
    std::int64_t right = static_cast<std::int64_t>(b) * (b + 1);
    if (m == 2) return left + right + static_cast<std::int64_t>(a + 1) * (b + 1);
    // Hub-chain edges contribute 2(a+1) and 2(b+1); interior chain edges 4 each.
    return left + right + 2 * static_cast<std::int64_t>(a + 1) + 2 * static_cast<std::int64_t>(b + 1) + 4 * static_cast<std::int64_t>(m - 3);
}

std::int64_t delta_tree_m1(int delta, int n) {
    if (delta < 3 || n < 2 || (n - 2) % (delta - 2) != 0)
        throw std::invalid_argument("bad delta tree parameters");
    std::int64_t q = (n - 2) / (delta - 2);
    return n + q * delta * delta;
}

std::int64_t t45_m2(int s4, int s5) {
    if (s4 < 0 || s5 < 0 || s4 + s5 < 3) throw std::invalid_argument("bad t45 parameters");
    return 33LL * s4 + 44LL * s5 - 27;
}

namespace {

int need(const std::map<std::string, int>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing family parameter '" + key + "'");
    return it->second;
}

}  // namespace

std::int64_t closed_form(const std::string& family,
                         const std::map<std::string, int>& params,
                         const std::string& index) {
    if (family == "star" && index == "m1") return star_m1(need(params, "n"));
    if (family == "star" && index == "m2") return star_m2(need(params, "n"));
    if (family == "double-broom" && index == "m2")
        return double_broom_m2(need(params, "a"), need(params, "m"), need(params, "b"));
    if (family == "delta-tree" && index == "m1")
        return delta_tree_m1(need(params, "delta"), need(params, "n"));
    if (family == "t45" && index == "m2")
        return t45_m2(need(params, "s4"), need(params, "s5"));
    throw std::invalid_argument("no closed form stored for " + family + "/" + index);
}

Tree construct_family(const std::string& family, const std::map<std::string, int>& params) {
    if (family == "star") return star(need(params, "n"));
    if (family == "double-broom")
        return double_broom(need(params, "a"), need(params, "m"), need(params, "b"));
    if (family == "delta-tree") return delta_tree(need(params, "delta"), need(params, "n"));
    if (family == "t45") return t45(need(params, "s4"), need(params, "s5"));
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace zagreb
