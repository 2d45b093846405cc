#include "zagreb/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "zagreb/indices.hpp"

namespace zagreb {

namespace {

// Rebuild with vertex v removed and the given extra edges added; ids above v
// shift down by one.
Tree rebuild_without(const Tree& t, int removed, const std::vector<Edge>& extra) {
    std::vector<Edge> edges;
    auto remap = [removed](int v) { return v > removed ? v - 1 : v; };
    t.for_each_edge([&](int u, int v) {
        if (u == removed || v == removed) return;
        edges.push_back({remap(u), remap(v)});
    });
    for (const Edge& e : extra) edges.push_back({remap(e.u), remap(e.v)});
    return Tree::from_edges(t.vertex_count() - 1, edges);
}

}  // namespace

MoveResult contract_degree2(const Tree& t, int v_prime, bool relaxed) {
    if (v_prime < 0 || v_prime >= t.vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (t.degree(v_prime) != 2)
        throw std::invalid_argument("contract target must have degree 2");
    int a = t.neighbors(v_prime)[0];
    int b = t.neighbors(v_prime)[1];
    std::int64_t da = t.degree(a), db = t.degree(b);
    if (!relaxed && da > 2 && db > 2)
        throw std::invalid_argument(
            "strict contract needs a neighbor of degree at most 2");

    MoveResult out;
    out.delta = da * db - 2 * da - 2 * db;
    out.tree = rebuild_without(t, v_prime, {{a, b}});
    return out;
}

MoveResult split_high_degree(const Tree& t, int v) {
    if (v < 0 || v >= t.vertex_count()) throw std::invalid_argument("vertex out of range");
    int p = t.degree(v);
    if (p < 5) throw std::invalid_argument("split target must have degree at least 5");

    std::vector<int> nb = t.neighbors(v);
    std::sort(nb.begin(), nb.end(), [&](int x, int y) {
        if (t.degree(x) != t.degree(y)) return t.degree(x) > t.degree(y);
        return x < y;
    });

    std::int64_t top3 = 0, rest = 0;
    for (int i = 0; i < p; ++i)
        (i < 3 ? top3 : rest) += t.degree(nb[i]);

    MoveResult out;
    out.delta = 2 * static_cast<std::int64_t>(p) + 4 - 2 * rest - static_cast<std::int64_t>(p - 4) * top3;

    int v1 = t.vertex_count();      // degree-2 bridge
    int v2 = t.vertex_count() + 1;  // collector for neighbors 4..p
    std::vector<Edge> edges;
    t.for_each_edge([&](int x, int y) {
        int other = x == v ? y : (y == v ? x : -1);
        if (other < 0) {
            edges.push_back({x, y});
            return;
        }
        bool kept = std::find(nb.begin(), nb.begin() + 3, other) != nb.begin() + 3;
        edges.push_back({kept ? v : v2, other});
    });
    edges.push_back({v, v1});
    edges.push_back({v1, v2});
    out.tree = Tree::from_edges(t.vertex_count() + 2, edges);
    return out;
}

Tree local_search(const Tree& t, std::vector<TrajectoryStep>* trajectory) {
    Tree current = t;
    int step = 0;
    for (;;) {
        bool moved = false;
        for (int v = 0; v < current.vertex_count() && !moved; ++v) {
            if (current.degree(v) != 2) continue;
            MoveResult mr = contract_degree2(current, v, /*relaxed=*/true);
            if (mr.delta < 0) {
                if (trajectory)
                    trajectory->push_back({++step, "contract", v, mr.delta, m2(mr.tree)});
                current = std::move(mr.tree);
                moved = true;
            }
        }
        if (moved) continue;
        for (int v = 0; v < current.vertex_count() && !moved; ++v) {
            if (current.degree(v) < 5) continue;
            MoveResult mr = split_high_degree(current, v);
            if (mr.delta < 0) {
                if (trajectory)
                    trajectory->push_back({++step, "split", v, mr.delta, m2(mr.tree)});
                current = std::move(mr.tree);
                moved = true;
            }
        }
        if (!moved) return current;
    }
}

}  // namespace zagreb
