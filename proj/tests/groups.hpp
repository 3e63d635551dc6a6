#pragma once

// Small groups built from first principles, and a class-count oracle.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "qfrob/hopfcore.hpp"

namespace qfrob::groups {

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::make(names, t);
}

// Permutations of {0, 1, 2} in lexicographic order, composed right to left.
inline FiniteGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::make(names, t);
}

// Even permutations of symmetric3().
inline std::vector<std::size_t> alternating3() { return {0, 3, 4}; }

inline std::size_t class_count(const FiniteGroup& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> c;
    for (std::size_t y = 0; y < g.order(); ++y) {
      std::size_t yinv = 0;
      while (g.mul(y, yinv) != g.identity) ++yinv;
      c.insert(g.mul(g.mul(y, x), yinv));
    }
    classes.insert(c);
  }
  return classes.size();
}

}  // namespace qfrob::groups
