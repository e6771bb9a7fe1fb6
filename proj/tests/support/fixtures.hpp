#ifndef CARTDEC_TEST_FIXTURES_HPP
#define CARTDEC_TEST_FIXTURES_HPP

#include <string>
#include <unordered_set>
#include <vector>

#include "cartdec/perm_group.hpp"

namespace fixtures {

using cartdec::Permutation;
using cartdec::PermGroup;
using cartdec::Point;

inline Permutation cyc(std::size_t degree, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

inline PermGroup symmetric(std::size_t n) {
  if (n < 2)
    return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<Point> all(n);
  for (Point i = 0; i < n; ++i)
    all[i] = i;
  return PermGroup(n, {cyc(n, {{0, 1}}), cyc(n, {all})});
}

inline PermGroup alternating(std::size_t n) {
  if (n < 3)
    return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(cyc(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

inline PermGroup cyclic(std::size_t n) {
  std::vector<Point> all(n);
  for (Point i = 0; i < n; ++i)
    all[i] = i;
  return PermGroup(n, {cyc(n, {all})});
}

/// Closure of the generators by breadth-first multiplication.
inline std::size_t brute_force_order(PermGroup const &g) {
  std::unordered_set<Permutation> seen{Permutation(g.degree())};
  std::vector<Permutation> frontier{Permutation(g.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const &x : frontier) {
      for (auto const &s : g.generators()) {
        Permutation y = x * s;
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

} // namespace fixtures

#endif
