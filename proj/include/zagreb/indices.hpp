#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

// First Zagreb index: sum over vertices of d(v)^2. Exact.
std::int64_t m1(const Tree& t);

// Second Zagreb index: sum over edges of d(u)*d(v). Exact.
std::int64_t m2(const Tree& t);

// Zeroth order general Randic index: sum over vertices of d(v)^alpha.
double randic_zeroth(const Tree& t, double alpha);

enum class MultiplicativeKind { first, second };

// Multiplicative indices can overflow any fixed-width type, so the natural
// log is always reported; the direct product is only materialized for small
// trees (N <= 64).
struct ProductValue {
    double log_value;
    std::optional<double> value;
};

ProductValue multiplicative_zagreb(const Tree& t, MultiplicativeKind kind);

// Abstract degree-based index: vertex costs c1(d) plus symmetric edge costs
// c2(d,d'). Total over degrees 1..64; queries beyond the cap throw.
struct WeightScheme {
    static constexpr int degree_cap = 64;

    std::function<double(int)> c1;
    std::function<double(int, int)> c2;
    bool integer_valued = false;

    double vertex_cost(int d) const;
    double edge_cost(int a, int b) const;  // evaluated with a <= b

    static WeightScheme first_zagreb();          // c1 = d^2, c2 = 0
    static WeightScheme second_zagreb();         // c1 = 0,   c2 = a*b
    static WeightScheme zagreb_sum();            // M1 + M2
    static WeightScheme randic0(double alpha);   // c1 = d^alpha, c2 = 0
    // Tabulated scheme; c1[d] and c2[a][b] indexed by degree, index 0 unused.
    // The matrix must be symmetric.
    static WeightScheme from_tables(std::vector<double> c1_table,
                                    std::vector<std::vector<double>> c2_table);
};

double abstract_cost(const Tree& t, const WeightScheme& w);

// Name-dispatched index for the CLI and for generic minimization:
// "m1", "m2", "pi1", "pi2", "randic0:<alpha>", "m1+m2".
// The multiplicative indices evaluate to their natural log (monotone, so
// minimizers are unchanged).
struct NamedIndex {
    std::string name;
    bool integer_valued = false;
    bool log_scale = false;
    std::function<double(const Tree&)> eval;
};

NamedIndex make_named_index(const std::string& name);
NamedIndex make_custom_index(const WeightScheme& w);

}  // namespace zagreb
