#include "zagreb/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace zagreb {

int default_max_order(int pendants) { return std::max(pendants, 3 * pendants - 5); }

namespace {

// Free trees on k vertices, deduplicated by canonical code and sorted by it.
// Built by leaf augmentation from the catalogue one size down; k stays small
// (skeletons have at most n-2 vertices), so no fancier generator is needed.
const std::vector<Tree>& free_trees(int k) {
    static std::mutex mu;
    static std::vector<std::vector<Tree>> cache;  // cache[k]
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= k) cache.resize(k + 1);
    if (k >= 1 && cache[1].empty())
        cache[1].push_back(Tree::from_edges(1, {}));
    for (int j = 2; j <= k; ++j) {
        if (!cache[j].empty()) continue;
        std::unordered_set<std::string> seen;
        std::vector<std::pair<CanonicalCode, Tree>> found;
        for (const Tree& t : cache[j - 1]) {
            std::vector<Edge> base = t.edge_list();
            for (int v = 0; v < j - 1; ++v) {
                std::vector<Edge> edges = base;
                edges.push_back({v, j - 1});
                Tree cand = Tree::from_edges(j, edges);
                CanonicalCode code = canonical_code(cand);
                if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(cand));
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [code, t] : found) cache[j].push_back(std::move(t));
    }
    return cache[k];
}

struct GenParams {
    int n = 0;
    bool reduced = false;
    int max_order = 0;
    int max_degree = Tree::max_vertices;
    std::uint64_t budget = 0;
};

// Expands one skeleton (the tree induced on the degree->=3 vertices of the
// final tree) into every final tree it supports: pendant bundles per vertex,
// degree-2 chains per skeleton edge, and (non-reduced only) degree-2 legs
// between a vertex and each of its pendants. Two parameter assignments give
// isomorphic trees only via skeleton automorphisms, so deduplication by
// canonical code within the skeleton is complete.
class SkeletonExpander {
public:
    SkeletonExpander(const Tree& skel, const GenParams& gp, std::atomic<std::uint64_t>& used)
        : skel_(skel), gp_(gp), used_(used) {}

    std::vector<Tree> run() {
        k_ = skel_.vertex_count();
        low_.resize(k_);
        high_.resize(k_);
        for (int v = 0; v < k_; ++v) {
            int ds = skel_.degree(v);
            if (ds > gp_.max_degree) return {};
            low_[v] = std::max(0, 3 - ds);
            high_[v] = std::min(gp_.n, gp_.max_degree - ds);
            if (low_[v] > high_[v]) return {};
        }
        low_suffix_.assign(k_ + 1, 0);
        high_suffix_.assign(k_ + 1, 0);
        for (int v = k_ - 1; v >= 0; --v) {
            low_suffix_[v] = low_suffix_[v + 1] + low_[v];
            high_suffix_[v] = high_suffix_[v + 1] + high_[v];
        }
        extra_ = gp_.max_order - k_ - gp_.n;
        if (extra_ < 0 || low_suffix_[0] > gp_.n) return {};

        skel_edges_ = skel_.edge_list();
        bundles_.assign(k_, 0);
        chains_.assign(skel_edges_.size(), 0);
        legs_.assign(k_, {});
        descend_bundles(0, gp_.n);
        return std::move(result_);
    }

private:
    void descend_bundles(int v, int remaining) {
        if (v == k_) {
            descend_chains(0, extra_);
            return;
        }
        int lo = std::max(low_[v], remaining - high_suffix_[v + 1]);
        int hi = std::min({high_[v], remaining - low_suffix_[v + 1]});
        for (int b = lo; b <= hi; ++b) {
            bundles_[v] = b;
            descend_bundles(v + 1, remaining - b);
        }
    }

    void descend_chains(std::size_t e, int left) {
        if (e == chains_.size()) {
            if (gp_.reduced) {
                for (auto& l : legs_) l.clear();
                emit();
            } else {
                descend_legs(0, left);
            }
            return;
        }
        int cap = gp_.reduced ? std::min(1, left) : left;
        for (int c = 0; c <= cap; ++c) {
            chains_[e] = c;
            descend_chains(e + 1, left - c);
        }
    }

    void descend_legs(int v, int left) {
        if (v == k_) {
            emit();
            return;
        }
        legs_[v].assign(bundles_[v], 0);
        leg_slots(v, 0, left, left);
    }

    // Non-increasing leg lengths within one vertex (legs at a vertex are
    // unordered).
    void leg_slots(int v, int slot, int left, int prev) {
        if (slot == bundles_[v]) {
            descend_legs(v + 1, left);
            return;
        }
        for (int len = 0; len <= std::min(prev, left); ++len) {
            legs_[v][slot] = len;
            leg_slots(v, slot + 1, left - len, len);
        }
    }

    void emit() {
        if (++used_ > gp_.budget)
            throw budget_error("enumeration budget exceeded");
        std::vector<Edge> edges;
        int next = k_;
        for (std::size_t e = 0; e < skel_edges_.size(); ++e) {
            int u = skel_edges_[e].u, v = skel_edges_[e].v;
            int prev = u;
            for (int c = 0; c < chains_[e]; ++c) {
                edges.push_back({prev, next});
                prev = next++;
            }
            edges.push_back({prev, v});
        }
        for (int v = 0; v < k_; ++v)
            for (int len : legs_[v]) {
                int prev = v;
                for (int c = 0; c < len; ++c) {
                    edges.push_back({prev, next});
                    prev = next++;
                }
                edges.push_back({prev, next});
                ++next;  // pendant
            }
        if (gp_.reduced)
            for (int v = 0; v < k_; ++v)
                for (int b = 0; b < bundles_[v]; ++b) edges.push_back({v, next++});

        Tree t = Tree::from_edges(next, edges);
        CanonicalCode code = canonical_code(t);
        if (seen_.insert(code).second) result_.push_back(std::move(t));
    }

    const Tree& skel_;
    const GenParams& gp_;
    std::atomic<std::uint64_t>& used_;
    int k_ = 0;
    int extra_ = 0;
    std::vector<int> low_, high_, low_suffix_, high_suffix_;
    std::vector<Edge> skel_edges_;
    std::vector<int> bundles_, chains_;
    std::vector<std::vector<int>> legs_;
    std::unordered_set<std::string> seen_;
    std::vector<Tree> result_;
};

GenParams resolve(const EnumConstraints& c) {
    if (c.pendants < 2) throw std::invalid_argument("pendant count must be at least 2");
    if (c.max_degree && *c.max_degree < 3)
        throw std::invalid_argument("max_degree must be at least 3");
    GenParams gp;
    gp.n = c.pendants;
    gp.reduced = c.reduced;
    gp.max_order = c.max_order.value_or(default_max_order(c.pendants));
    if (gp.max_order < 2) throw std::invalid_argument("max_order must be at least 2");
    if (gp.max_order > Tree::max_vertices)
        throw std::invalid_argument("max_order beyond supported maximum");
    gp.max_degree = c.max_degree.value_or(Tree::max_vertices);
    gp.budget = c.budget;
    return gp;
}

Tree make_path(int order) {
    if (order == 1) return Tree::from_edges(1, {});
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < order; ++i) edges.push_back({i, i + 1});
    return Tree::from_edges(order, edges);
}

}  // namespace

bool satisfies_constraints(const Tree& t, const EnumConstraints& c) {
    if (t.pendant_count() != c.pendants) return false;
    int cap = c.max_order.value_or(default_max_order(c.pendants));
    if (t.vertex_count() > cap) return false;
    if (c.max_degree && t.max_degree() > *c.max_degree) return false;
    if (c.reduced && t.vertex_count() > 2) {
        bool ok = true;
        t.for_each_edge([&](int u, int v) {
            if (t.degree(u) <= 2 && t.degree(v) <= 2) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

void enumerate_trees(const EnumConstraints& c, const std::function<void(const Tree&)>& sink) {
    GenParams gp = resolve(c);
    std::atomic<std::uint64_t> used{0};

    // Trees with 2 pendants are exactly paths; K_2 is the only reduced one.
    if (gp.n == 2) {
        int top = gp.reduced ? 2 : gp.max_order;
        for (int order = 2; order <= top; ++order) {
            if (++used > gp.budget) throw budget_error("enumeration budget exceeded");
            sink(make_path(order));
        }
        return;
    }

    int k_max = std::min(gp.n - 2, gp.max_order - gp.n);
    std::vector<const Tree*> skeletons;
    for (int k = 1; k <= k_max; ++k)
        for (const Tree& s : free_trees(k)) skeletons.push_back(&s);

    if (c.threads <= 1) {
        for (const Tree* s : skeletons) {
            SkeletonExpander ex(*s, gp, used);
            for (const Tree& t : ex.run()) sink(t);
        }
        return;
    }

    std::vector<std::future<std::vector<Tree>>> futures;
    futures.reserve(skeletons.size());
    for (const Tree* s : skeletons)
        futures.push_back(std::async(std::launch::async, [s, &gp, &used]() {
            SkeletonExpander ex(*s, gp, used);
            return ex.run();
        }));
    for (auto& f : futures)
        for (const Tree& t : f.get()) sink(t);
}

std::uint64_t count_trees(const EnumConstraints& c) {
    std::uint64_t count = 0;
    enumerate_trees(c, [&](const Tree&) { ++count; });
    return count;
}

MinimizationResult brute_min(const EnumConstraints& c, const NamedIndex& index) {
    MinimizationResult res;
    res.integer_valued = index.integer_valued;
    bool first = true;
    double best = 0.0;
    enumerate_trees(c, [&](const Tree& t) {
        ++res.trees_examined;
        double value = index.eval(t);
        if (first || value < best) {
            first = false;
            best = value;
            res.witnesses.clear();
            res.witnesses.push_back(t);
        } else if (value == best) {
            res.witnesses.push_back(t);
        }
    });
    if (first) throw std::invalid_argument("empty enumeration class");
    res.min_value = best;
    std::sort(res.witnesses.begin(), res.witnesses.end(), [](const Tree& a, const Tree& b) {
        return canonical_code(a) < canonical_code(b);
    });
    return res;
}

}  // namespace zagreb
