// Writes the table of an outer automorphism of Alt(6) that swaps the two
// classes of A5 subgroups. Alt(6) is matched with PSL(2,9) on the projective
// line, and the automorphism is conjugation by an involution of PGL(2,9)
// outside PSL(2,9).
#include <iostream>
#include <map>
#include <optional>

#include "cartdec/catalog.hpp"
#include "cartdec/standard_groups.hpp"

using namespace cartdec;

namespace {

Permutation join(Permutation const &x, Permutation const &y) {
  std::vector<Point> images;
  for (Point p = 0; p < x.degree(); ++p)
    images.push_back(x[p]);
  for (Point p = 0; p < y.degree(); ++p)
    images.push_back(static_cast<Point>(x.degree() + y[p]));
  return Permutation(std::move(images));
}

Permutation left(Permutation const &d, std::size_t n) {
  std::vector<Point> images(d.images().begin(), d.images().begin() + n);
  return Permutation(std::move(images));
}

Permutation right(Permutation const &d, std::size_t n) {
  std::vector<Point> images;
  for (Point p = static_cast<Point>(n); p < d.degree(); ++p)
    images.push_back(static_cast<Point>(d[p] - n));
  return Permutation(std::move(images));
}

std::size_t order_of(Permutation const &x) {
  std::size_t k = 1;
  for (Permutation y = x; !y.is_identity(); y = y * x)
    ++k;
  return k;
}

} // namespace

int main() {
  PermGroup a6 = alternating_group(6);
  Permutation a = Permutation::from_cycles(6, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(6, {{1, 2, 3, 4, 5}});
  PermGroup psl = projective_line_group_9(LineGroup::psl);
  PermGroup pgl = projective_line_group_9(LineGroup::pgl);
  auto line = psl.elements();

  std::optional<PermGroup> graph;
  for (auto const &x : line) {
    if (order_of(x) != 3)
      continue;
    for (auto const &y : line) {
      if (order_of(y) != 5)
        continue;
      PermGroup d(16, {join(a, x), join(b, y)});
      if (d.order() == 360) {
        graph = d;
        break;
      }
    }
    if (graph)
      break;
  }
  if (!graph) {
    std::cerr << "no isomorphism found\n";
    return 1;
  }

  std::map<Permutation, Permutation> psi, psi_inverse;
  graph->for_each_element([&](Permutation const &d) {
    psi.emplace(left(d, 6), right(d, 6));
    psi_inverse.emplace(right(d, 6), left(d, 6));
  });

  std::optional<Permutation> z;
  pgl.for_each_element([&](Permutation const &g) {
    if (!z && !g.is_identity() && (g * g).is_identity() && !psl.contains(g))
      z = g;
  });

  std::cout << "# Outer automorphism of Alt(6) swapping the two A5 classes.\n"
            << "# Each line maps an element to its image, cycles on points 1..6.\n"
            << "degree 6\n";
  for (auto const &[t, image] : psi) {
    Permutation tau = psi_inverse.at(image.conjugated_by(*z));
    std::cout << "map " << to_cycle_string(t) << ' ' << to_cycle_string(tau) << '\n';
  }
  return 0;
}
