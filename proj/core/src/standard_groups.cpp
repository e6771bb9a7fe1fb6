#include "cartdec/standard_groups.hpp"

#include <array>
#include <functional>

namespace cartdec {

namespace {

std::vector<Point> all_points(std::size_t n) {
  std::vector<Point> out(n);
  for (Point i = 0; i < n; ++i)
    out[i] = i;
  return out;
}

// GF(9) as pairs (a, b) meaning a + b*i with i^2 = -1, indexed a + 3b.
struct F9 {
  static int add(int x, int y) { return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3); }
  static int mul(int x, int y) {
    int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    int re = ((a * c - b * d) % 3 + 3) % 3;
    int im = (a * d + b * c) % 3;
    return re + 3 * im;
  }
  static int inverse(int x) {
    for (int y = 1; y < 9; ++y) {
      if (mul(x, y) == 1)
        return y;
    }
    return 0;
  }
  static int frobenius(int x) { return mul(x, mul(x, x)); }
};

constexpr int kInfinity = 9;

Permutation line_map(std::function<int(int)> const &f) {
  std::vector<Point> images(10);
  for (int z = 0; z < 10; ++z)
    images[z] = static_cast<Point>(f(z));
  return Permutation(std::move(images));
}

/// z -> (a z + b) / (c z + d).
Permutation moebius(int a, int b, int c, int d) {
  return line_map([=](int z) {
    if (z == kInfinity)
      return c == 0 ? kInfinity : F9::mul(a, F9::inverse(c));
    int den = F9::add(F9::mul(c, z), d);
    if (den == 0)
      return kInfinity;
    return F9::mul(F9::add(F9::mul(a, z), b), F9::inverse(den));
  });
}

} // namespace

PermGroup symmetric_group(std::size_t n) {
  if (n < 2)
    return PermGroup::trivial(n == 0 ? 1 : n);
  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1}}),
                       Permutation::from_cycles(n, {all_points(n)})});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3)
    return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n < 2)
    return PermGroup::trivial(n == 0 ? 1 : n);
  return PermGroup(n, {Permutation::from_cycles(n, {all_points(n)})});
}

PermGroup projective_line_group_9(LineGroup kind) {
  int const one = 1;
  int const generator = 1 + 3; // 1 + i has multiplicative order 8
  int const square = F9::mul(generator, generator);
  std::vector<Permutation> gens{moebius(one, one, 0, one), moebius(square, 0, 0, one),
                                moebius(0, 2, one, 0)};
  BigInt order = 360;
  if (kind != LineGroup::psl) {
    gens.push_back(moebius(generator, 0, 0, one));
    order = 720;
  }
  if (kind == LineGroup::pgammal) {
    gens.push_back(line_map([](int z) { return z == kInfinity ? z : F9::frobenius(z); }));
    order = 1440;
  }
  return PermGroup(10, std::move(gens), ChainOptions{order, {}});
}

} // namespace cartdec
