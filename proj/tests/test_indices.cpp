#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

using namespace zagreb;

TEST_CASE("m1 examples") {
    CHECK(m1(star(4)) == 20);
    CHECK(m1(delta_tree(4, 6)) == 38);  // 9*6-16
    CHECK(m1(build_tree({{0, 1}, {1, 2}})) == 6);
}

TEST_CASE("m2 examples") {
    CHECK(m2(star(3)) == 9);
    CHECK(m2(double_broom(4, 3, 4)) == 60);
    CHECK(m2(build_tree({{0, 1}})) == 1);
}

TEST_CASE("multiplicative zagreb") {
    Tree k2 = build_tree({{0, 1}});
    CHECK(multiplicative_zagreb(k2, MultiplicativeKind::first).value.value() == 1.0);
    CHECK(multiplicative_zagreb(k2, MultiplicativeKind::second).value.value() == 1.0);

    Tree s3 = star(3);
    CHECK(multiplicative_zagreb(s3, MultiplicativeKind::first).value.value() == 9.0);
    CHECK(multiplicative_zagreb(s3, MultiplicativeKind::second).value.value() == 27.0);

    // ln Pi2 of the 5-star equals 5 ln 5 = (5 ln 5 / 3)(5 - 2)
    double got = multiplicative_zagreb(star(5), MultiplicativeKind::second).log_value;
    CHECK(got == doctest::Approx(5.0 * std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("pi2 equals the product of d^d over vertices") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        Tree t = testsupport::random_tree(rng, 2 + rep % 60);
        double lhs = multiplicative_zagreb(t, MultiplicativeKind::second).log_value;
        double rhs = 0.0;
        for (int v = 0; v < t.vertex_count(); ++v)
            rhs += t.degree(v) * std::log(static_cast<double>(t.degree(v)));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("pi goes log-space only above 64 vertices") {
    std::mt19937 rng(3);
    Tree small = testsupport::random_tree(rng, 64);
    CHECK(multiplicative_zagreb(small, MultiplicativeKind::second).value.has_value());
    Tree large = testsupport::random_tree(rng, 65);
    CHECK(!multiplicative_zagreb(large, MultiplicativeKind::second).value.has_value());
}

TEST_CASE("randic reductions") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 50; ++rep) {
        Tree t = testsupport::random_tree(rng, 2 + rep);
        CHECK(randic_zeroth(t, 2.0) == static_cast<double>(m1(t)));
        CHECK(randic_zeroth(t, 0.0) == static_cast<double>(t.vertex_count()));
        CHECK(randic_zeroth(t, 1.0) == static_cast<double>(2 * (t.vertex_count() - 1)));
    }
}

TEST_CASE("abstract cost reductions") {
    std::mt19937 rng(9);
    WeightScheme w_m1 = WeightScheme::first_zagreb();
    WeightScheme w_m2 = WeightScheme::second_zagreb();
    WeightScheme w_sum = WeightScheme::zagreb_sum();
    for (int rep = 0; rep < 50; ++rep) {
        Tree t = testsupport::random_tree(rng, 2 + rep);
        CHECK(abstract_cost(t, w_m1) == static_cast<double>(m1(t)));
        CHECK(abstract_cost(t, w_m2) == static_cast<double>(m2(t)));
        CHECK(abstract_cost(t, w_sum) == static_cast<double>(m1(t) + m2(t)));
    }
    // m1 + m2 on D(4;3;4): (25+4+25+8) + 60
    CHECK(abstract_cost(double_broom(4, 3, 4), w_sum) == 122.0);
}

TEST_CASE("indices are relabeling invariant") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        Tree t = testsupport::random_tree(rng, 4 + rep);
        std::vector<int> perm(t.vertex_count());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        t.for_each_edge([&](int u, int v) { edges.push_back({perm[u], perm[v]}); });
        Tree r = Tree::from_edges(t.vertex_count(), edges);
        CHECK(m1(r) == m1(t));
        CHECK(m2(r) == m2(t));
        CHECK(randic_zeroth(r, -0.5) == doctest::Approx(randic_zeroth(t, -0.5)).epsilon(1e-13));
    }
}

TEST_CASE("integer schemes are exact on large trees") {
    Tree big = star(10000);
    CHECK(m2(big) == 100000000LL);
    CHECK(m1(big) == 100010000LL);
}

TEST_CASE("scheme cap and table errors") {
    WeightScheme w = WeightScheme::second_zagreb();
    CHECK_THROWS_AS(w.vertex_cost(65), std::domain_error);
    CHECK_THROWS_AS(abstract_cost(star(70), w), std::domain_error);

    CHECK_THROWS_AS(WeightScheme::from_tables({0, 1}, {{0, 1}, {2, 1}}),
                    std::invalid_argument);
    WeightScheme table = WeightScheme::from_tables({0, 1, 4, 9},
                                                   {{0, 0, 0, 0},
                                                    {0, 1, 2, 3},
                                                    {0, 2, 4, 6},
                                                    {0, 3, 6, 9}});
    CHECK(table.integer_valued);
    CHECK(abstract_cost(star(3), table) ==
          static_cast<double>(m1(star(3)) + m2(star(3))));
    CHECK_THROWS_AS(abstract_cost(star(4), table), std::out_of_range);
}

TEST_CASE("named index dispatch") {
    Tree d = double_broom(4, 3, 4);
    CHECK(make_named_index("m2").eval(d) == 60.0);
    CHECK(make_named_index("m1+m2").eval(d) == 122.0);
    CHECK(make_named_index("randic0:2").eval(d) == static_cast<double>(m1(d)));
    CHECK(make_named_index("pi2").log_scale);
    CHECK_THROWS_AS(make_named_index("wiener"), std::invalid_argument);
    CHECK_THROWS_AS(make_named_index("randic0:x"), std::invalid_argument);
}
