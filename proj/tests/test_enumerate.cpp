#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph6.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

using namespace zagreb;

namespace {

std::set<std::string> code_set(const EnumConstraints& c) {
    std::set<std::string> out;
    enumerate_trees(c, [&](const Tree& t) { out.insert(canonical_code(t)); });
    return out;
}

std::set<std::string> naive_code_set(const EnumConstraints& c) {
    std::set<std::string> out;
    for (const Tree& t : testsupport::naive_trees_with_pendants(c))
        out.insert(canonical_code(t));
    return out;
}

EnumConstraints reduced_c(int n) {
    EnumConstraints c;
    c.pendants = n;
    c.reduced = true;
    return c;
}

EnumConstraints full_c(int n) {
    EnumConstraints c;
    c.pendants = n;
    c.reduced = false;
    return c;
}

}  // namespace

TEST_CASE("reduced hand counts for small n") {
    CHECK(count_trees(reduced_c(3)) == 1);
    std::vector<Tree> trees;
    enumerate_trees(reduced_c(3), [&](const Tree& t) { trees.push_back(t); });
    CHECK(canonical_code(trees.at(0)) == canonical_code(star(3)));

    CHECK(count_trees(reduced_c(4)) == 3);
    std::set<std::string> expected{
        canonical_code(star(4)),
        canonical_code(build_tree({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}})),  // two hubs
        canonical_code(double_broom(2, 3, 2)),
    };
    CHECK(code_set(reduced_c(4)) == expected);

    EnumConstraints chem = reduced_c(4);
    chem.max_degree = 4;
    CHECK(code_set(chem) == expected);
}

TEST_CASE("reduced class for n=2 is K_2 alone") {
    std::vector<Tree> trees;
    enumerate_trees(reduced_c(2), [&](const Tree& t) { trees.push_back(t); });
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].vertex_count() == 2);
}

TEST_CASE("completeness against the naive generator for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(code_set(reduced_c(n)) == naive_code_set(reduced_c(n)));
        CHECK(code_set(full_c(n)) == naive_code_set(full_c(n)));
    }
}

TEST_CASE("naive catalogue matches the known free-tree counts") {
    // t(1..10) = 1,1,1,2,3,6,11,23,47,106
    std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    std::vector<std::size_t> got(10, 0);
    for (const Tree& t : testsupport::all_trees_up_to_order(10))
        ++got[t.vertex_count() - 1];
    CHECK(got == expected);
}

TEST_CASE("count_trees cross-checked at n=5") {
    CHECK(count_trees(reduced_c(5)) == naive_code_set(reduced_c(5)).size());
    CHECK(count_trees(full_c(5)) == naive_code_set(full_c(5)).size());
}

TEST_CASE("every emitted tree passes independent validation") {
    for (bool reduced : {true, false}) {
        EnumConstraints c = reduced ? reduced_c(6) : full_c(6);
        c.max_degree = 5;
        enumerate_trees(c, [&](const Tree& t) {
            CHECK(t.pendant_count() == 6);
            CHECK(t.max_degree() <= 5);
            CHECK(t.vertex_count() <= default_max_order(6));
            if (reduced) CHECK(testsupport::is_reduced(t));
        });
    }
}

TEST_CASE("reduction safety: reduced and full minima agree for m2") {
    NamedIndex ix = make_named_index("m2");
    for (int n = 3; n <= 8; ++n) {
        MinimizationResult a = brute_min(reduced_c(n), ix);
        MinimizationResult b = brute_min(full_c(n), ix);
        CHECK(a.min_value == b.min_value);
        CHECK(a.trees_examined <= b.trees_examined);
    }
}

TEST_CASE("enlarging the cap beyond 3n-5 does not change reduced results") {
    for (int n : {5, 6}) {
        EnumConstraints wide = reduced_c(n);
        wide.max_order = 3 * n - 2;
        CHECK(code_set(reduced_c(n)) == code_set(wide));
        NamedIndex ix = make_named_index("m2");
        CHECK(brute_min(reduced_c(n), ix).min_value == brute_min(wide, ix).min_value);
    }
}

TEST_CASE("stream is deterministic and thread independent") {
    auto collect = [](int threads) {
        EnumConstraints c = reduced_c(7);
        c.threads = threads;
        std::vector<std::string> codes;
        enumerate_trees(c, [&](const Tree& t) { codes.push_back(canonical_code(t)); });
        return codes;
    };
    std::vector<std::string> one = collect(1);
    CHECK(one == collect(1));
    CHECK(one == collect(4));
    CHECK(std::set<std::string>(one.begin(), one.end()).size() == one.size());
}

TEST_CASE("brute_min star regime and counterexample") {
    NamedIndex ix = make_named_index("m2");
    MinimizationResult r7 = brute_min(reduced_c(7), ix);
    CHECK(r7.min_value == 49.0);
    REQUIRE(r7.witnesses.size() == 1);
    CHECK(canonical_code(r7.witnesses[0]) == canonical_code(star(7)));

    MinimizationResult r8 = brute_min(reduced_c(8), ix);
    CHECK(r8.min_value == 60.0);
    REQUIRE(!r8.witnesses.empty());
    CHECK(canonical_code(r8.witnesses[0]) == canonical_code(double_broom(4, 3, 4)));
}

TEST_CASE("budget is enforced as an error") {
    EnumConstraints c = reduced_c(8);
    c.budget = 10;
    CHECK_THROWS_AS(count_trees(c), budget_error);
}

TEST_CASE("constraint validation") {
    EnumConstraints c;
    c.pendants = 1;
    CHECK_THROWS_AS(count_trees(c), std::invalid_argument);
    c.pendants = 5;
    c.max_degree = 2;
    CHECK_THROWS_AS(count_trees(c), std::invalid_argument);
}
