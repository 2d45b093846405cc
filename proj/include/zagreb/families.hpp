#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zagreb/tree.hpp"

namespace zagreb {

// Star K_{1,n}: hub of degree n, n pendants. n >= 1.
Tree star(int n);

// Two-sided broom D(a;m;b): a path of m >= 2 internal vertices with a
// pendants on the first and b on the last. n = a + b pendants,
// N = a + b + m vertices. D(4;3;4) has exactly one degree-2 vertex.
Tree double_broom(int a, int m, int b);

// Tree with n pendants whose internal vertices all have degree delta,
// caterpillar skeleton. Requires (n-2) divisible by (delta-2), delta >= 3.
Tree delta_tree(int delta, int n);

// Tree whose stem vertices have degree 4 (s4 of them, 3 pendants each) or
// degree 5 (s5 of them, 4 pendants each) and all other internal vertices have
// degree 3. Built on the caterpillar 3-tree with s4+s5 leaves; s4+s5 >= 3.
// n = 3*s4 + 4*s5.
Tree t45(int s4, int s5);

// Attaches stems to the leaves of an arbitrary 3-tree (every internal degree
// exactly 3) with s4+s5 leaves: the first s4 leaves in id order become
// degree-4 stems, the rest degree-5 stems.
Tree t45_on_skeleton(const Tree& three_tree, int s4);

// Caterpillar 3-tree with the given number of leaves (>= 3).
Tree caterpillar_three_tree(int leaves);

// Closed-form index values.
std::int64_t star_m1(int n);                             // n(n+1)
std::int64_t star_m2(int n);                             // n^2
std::int64_t double_broom_m2(int a, int m, int b);       // any a,b >= 1, m >= 2
std::int64_t delta_tree_m1(int delta, int n);            // n + (n-2)/(delta-2) * delta^2
std::int64_t t45_m2(int s4, int s5);                     // 33*s4 + 44*s5 - 27

// String-keyed dispatch used by the CLI. Families: "star" (n),
// "double-broom" (a,m,b), "delta-tree" (delta,n), "t45" (s4,s5).
// Throws std::invalid_argument when no closed form is stored for the pair.
std::int64_t closed_form(const std::string& family,
                         const std::map<std::string, int>& params,
                         const std::string& index);

Tree construct_family(const std::string& family,
                      const std::map<std::string, int>& params);

}  // namespace zagreb
