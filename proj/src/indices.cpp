#include "zagreb/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace zagreb {

std::int64_t m1(const Tree& t) {
    std::int64_t acc = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::int64_t d = t.degree(v);
        acc += d * d;
    }
    return acc;
}

std::int64_t m2(const Tree& t) {
    std::int64_t acc = 0;
    t.for_each_edge([&](int u, int v) {
        acc += static_cast<std::int64_t>(t.degree(u)) * t.degree(v);
    });
    return acc;
}

double randic_zeroth(const Tree& t, double alpha) {
    double acc = 0.0;
    for (int v = 0; v < t.vertex_count(); ++v) acc += std::pow(t.degree(v), alpha);
    return acc;
}

ProductValue multiplicative_zagreb(const Tree& t, MultiplicativeKind kind) {
    ProductValue out{0.0, std::nullopt};
    if (kind == MultiplicativeKind::first) {
        for (int v = 0; v < t.vertex_count(); ++v)
            out.log_value += 2.0 * std::log(static_cast<double>(t.degree(v)));
    } else {
        t.for_each_edge([&](int u, int v) {
            out.log_value += std::log(static_cast<double>(t.degree(u))) +
                             std::log(static_cast<double>(t.degree(v)));
        });
    }
    if (t.vertex_count() <= 64) {
        double prod = 1.0;
        if (kind == MultiplicativeKind::first) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                double d = t.degree(v);
                prod *= d * d;
            }
        } else {
            t.for_each_edge([&](int u, int v) {
                prod *= static_cast<double>(t.degree(u)) * t.degree(v);
            });
        }
        out.value = prod;
    }
    return out;
}

double WeightScheme::vertex_cost(int d) const {
    if (d < 1 || d > degree_cap)
        throw std::domain_error("weight scheme queried beyond degree cap");
    return c1(d);
}

double WeightScheme::edge_cost(int a, int b) const {
    if (a < 1 || a > degree_cap || b < 1 || b > degree_cap)
        throw std::domain_error("weight scheme queried beyond degree cap");
    if (a > b) std::swap(a, b);
    return c2(a, b);
}

WeightScheme WeightScheme::first_zagreb() {
    WeightScheme w;
    w.c1 = [](int d) { return static_cast<double>(d) * d; };
    w.c2 = [](int, int) { return 0.0; };
    w.integer_valued = true;
    return w;
}

WeightScheme WeightScheme::second_zagreb() {
    WeightScheme w;
    w.c1 = [](int) { return 0.0; };
    w.c2 = [](int a, int b) { return static_cast<double>(a) * b; };
    w.integer_valued = true;
    return w;
}

WeightScheme WeightScheme::zagreb_sum() {
    WeightScheme w;
    w.c1 = [](int d) { return static_cast<double>(d) * d; };
    w.c2 = [](int a, int b) { return static_cast<double>(a) * b; };
    w.integer_valued = true;
    return w;
}

WeightScheme WeightScheme::randic0(double alpha) {
    WeightScheme w;
    w.c1 = [alpha](int d) { return std::pow(d, alpha); };
    w.c2 = [](int, int) { return 0.0; };
    return w;
}

WeightScheme WeightScheme::from_tables(std::vector<double> c1_table,
                                       std::vector<std::vector<double>> c2_table) {
    for (std::size_t a = 0; a < c2_table.size(); ++a)
        for (std::size_t b = 0; b < c2_table[a].size(); ++b) {
            if (b >= c2_table.size() || a >= c2_table[b].size() ||
                c2_table[a][b] != c2_table[b][a])
                throw std::invalid_argument("edge cost table is not symmetric");
        }
    bool integral = true;
    for (double x : c1_table)
        if (x != std::floor(x)) integral = false;
    for (const auto& row : c2_table)
        for (double x : row)
            if (x != std::floor(x)) integral = false;

    WeightScheme w;
    w.integer_valued = integral;
    w.c1 = [t = std::move(c1_table)](int d) {
        if (d < 0 || static_cast<std::size_t>(d) >= t.size())
            throw std::out_of_range("vertex cost undefined at degree " + std::to_string(d));
        return t[d];
    };
    w.c2 = [t = std::move(c2_table)](int a, int b) {
        if (a < 0 || static_cast<std::size_t>(a) >= t.size() || b < 0 ||
            static_cast<std::size_t>(b) >= t[a].size())
            throw std::out_of_range("edge cost undefined at degree pair");
        return t[a][b];
    };
    return w;
}

double abstract_cost(const Tree& t, const WeightScheme& w) {
    double acc = 0.0;
    for (int v = 0; v < t.vertex_count(); ++v) acc += w.vertex_cost(t.degree(v));
    t.for_each_edge([&](int u, int v) { acc += w.edge_cost(t.degree(u), t.degree(v)); });
    return acc;
}

NamedIndex make_named_index(const std::string& name) {
    NamedIndex ix;
    ix.name = name;
    if (name == "m1") {
        ix.integer_valued = true;
        ix.eval = [](const Tree& t) { return static_cast<double>(m1(t)); };
    } else if (name == "m2") {
        ix.integer_valued = true;
        ix.eval = [](const Tree& t) { return static_cast<double>(m2(t)); };
    } else if (name == "m1+m2") {
        ix.integer_valued = true;
        ix.eval = [](const Tree& t) { return static_cast<double>(m1(t) + m2(t)); };
    } else if (name == "pi1") {
        ix.log_scale = true;
        ix.eval = [](const Tree& t) {
            return multiplicative_zagreb(t, MultiplicativeKind::first).log_value;
        };
    } else if (name == "pi2") {
        ix.log_scale = true;
        ix.eval = [](const Tree& t) {
            return multiplicative_zagreb(t, MultiplicativeKind::second).log_value;
        };
    } else if (name.rfind("randic0:", 0) == 0) {
        double alpha = 0.0;
        try {
            alpha = std::stod(name.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad randic0 exponent in '" + name + "'");
        }
        ix.eval = [alpha](const Tree& t) { return randic_zeroth(t, alpha); };
    } else {
        throw std::invalid_argument("unknown index '" + name + "'");
    }
    return ix;
}

NamedIndex make_custom_index(const WeightScheme& w) {
    NamedIndex ix;
    ix.name = "custom";
    ix.integer_valued = w.integer_valued;
    ix.eval = [w](const Tree& t) { return abstract_cost(t, w); };
    return ix;
}

}  // namespace zagreb
