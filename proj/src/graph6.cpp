#include "zagreb/graph6.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zagreb {

namespace {

constexpr int bias = 63;

void append_bit_groups(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int group = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            group <<= 1;
            if (i + j < bits.size() && bits[i + j]) group |= 1;
        }
        out.push_back(static_cast<char>(group + bias));
    }
}

}  // namespace

std::string write_graph6(const Tree& t) {
    int n = t.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + bias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + bias));
        out.push_back(static_cast<char>((n & 0x3f) + bias));
    }
    // Upper-triangle bits column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(t.adjacent(i, j));
    append_bit_groups(out, bits);
    return out;
}

Tree read_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty())
        throw tree_error(tree_error::code::bad_format, "empty graph6 line");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw tree_error(tree_error::code::too_many_vertices,
                             "graph6 order beyond supported maximum");
        if (s.size() < 4)
            throw tree_error(tree_error::code::bad_format, "truncated graph6 header");
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(s[k]);
            if (c < bias || c > 126)
                throw tree_error(tree_error::code::bad_format, "invalid graph6 header byte");
            n = (n << 6) | (c - bias);
        }
        pos = 4;
    } else {
        int c = static_cast<unsigned char>(s[0]);
        if (c < bias || c > 126)
            throw tree_error(tree_error::code::bad_format, "invalid graph6 header byte");
        n = c - bias;
        pos = 1;
    }
    if (n < 1)
        throw tree_error(tree_error::code::bad_format, "graph6 order must be positive");
    if (n > Tree::max_vertices)
        throw tree_error(tree_error::code::too_many_vertices,
                         "graph6 order beyond supported maximum");

    long long bit_count = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bit_count + 5) / 6);
    if (s.size() - pos != body)
        throw tree_error(tree_error::code::bad_format, "graph6 body length mismatch");

    std::vector<Edge> edges;
    long long bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = pos; k < s.size(); ++k) {
        int c = static_cast<unsigned char>(s[k]);
        if (c < bias || c > 126)
            throw tree_error(tree_error::code::bad_format, "invalid graph6 body byte");
        int group = c - bias;
        for (int b = 5; b >= 0 && bit < bit_count; --b, ++bit) {
            if (group & (1 << b)) edges.push_back({i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Tree::from_edges(static_cast<int>(n), edges);
}

std::string write_dot(const Tree& t, bool degree_labels) {
    std::string out = "graph tree {\n";
    if (degree_labels) {
        for (int v = 0; v < t.vertex_count(); ++v)
            out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) +
                   " (d=" + std::to_string(t.degree(v)) + ")\"];\n";
    }
    t.for_each_edge([&](int u, int v) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    });
    out += "}\n";
    return out;
}

}  // namespace zagreb
