#include "cartdec/cartesian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"

namespace cartdec {

namespace {

void require_same_degree(std::vector<Partition> const &partitions) {
  if (partitions.empty())
    throw InputError("a decomposition needs at least one partition");
  for (auto const &p : partitions) {
    if (p.degree() != partitions.front().degree())
      throw InputError("partitions of different degrees");
  }
}

bool contains_partition(std::vector<Partition> const &set, Partition const &p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

PermGroup intersect_all(std::vector<PermGroup> const &groups, PermGroup const &whole,
                        std::size_t skip) {
  PermGroup out = whole;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (j != skip)
      out = subgroup_intersection(out, groups[j]);
  }
  return out;
}

} // namespace

bool is_cartesian_decomposition(std::vector<Partition> const &partitions) {
  require_same_degree(partitions);
  std::size_t const n = partitions.front().degree();
  std::size_t product = 1;
  for (auto const &p : partitions) {
    if (product > n / p.size())
      return false;
    product *= p.size();
  }
  if (product != n)
    return false;
  std::vector<char> seen(n, 0);
  for (Point x = 0; x < n; ++x) {
    std::size_t code = 0;
    for (auto const &p : partitions)
      code = code * p.size() + p.part_index(x);
    if (seen[code])
      return false;
    seen[code] = 1;
  }
  return true;
}

bool is_cartesian_by_counting(std::vector<Partition> const &partitions) {
  require_same_degree(partitions);
  std::size_t const n = partitions.front().degree();
  std::map<std::vector<std::size_t>, std::size_t> meets;
  for (Point x = 0; x < n; ++x) {
    std::vector<std::size_t> tuple;
    for (auto const &p : partitions)
      tuple.push_back(p.part_index(x));
    ++meets[tuple];
  }
  BigInt tuples = 1;
  for (auto const &p : partitions)
    tuples *= p.size();
  if (tuples != meets.size())
    return false;
  return std::all_of(meets.begin(), meets.end(),
                     [](auto const &entry) { return entry.second == 1; });
}

CartesianDecomposition::CartesianDecomposition(std::vector<Partition> partitions)
    : partitions_(std::move(partitions)) {
  std::sort(partitions_.begin(), partitions_.end());
  if (!is_cartesian_decomposition(partitions_))
    throw StructureError("partitions do not form a Cartesian decomposition");
}

std::vector<std::size_t> CartesianDecomposition::part_counts() const {
  std::vector<std::size_t> out;
  for (auto const &p : partitions_)
    out.push_back(p.size());
  return out;
}

bool CartesianDecomposition::is_homogeneous() const {
  return std::all_of(partitions_.begin(), partitions_.end(), [&](Partition const &p) {
    return p.size() == partitions_.front().size();
  });
}

Identification coordinates(CartesianDecomposition const &decomposition) {
  Identification out;
  out.factor_sizes = decomposition.part_counts();
  out.table.resize(decomposition.degree());
  for (Point x = 0; x < decomposition.degree(); ++x) {
    for (auto const &p : decomposition.partitions())
      out.table[x].push_back(static_cast<Point>(p.part_index(x)));
  }
  return out;
}

CartesianDecomposition decomposition_from_identification(Identification const &phi) {
  std::size_t const ell = phi.factor_sizes.size();
  if (ell == 0 || phi.table.empty())
    throw InputError("empty identification");
  std::size_t product = 1;
  for (std::size_t s : phi.factor_sizes) {
    if (s == 0 || product > phi.degree() / s)
      throw InputError("identification is not onto the Cartesian product");
    product *= s;
  }
  if (product != phi.degree())
    throw InputError("identification is not onto the Cartesian product");
  std::vector<char> hit(product, 0);
  for (auto const &tuple : phi.table) {
    if (tuple.size() != ell)
      throw InputError("identification tuple of the wrong length");
    std::size_t code = 0;
    for (std::size_t i = 0; i < ell; ++i) {
      if (tuple[i] >= phi.factor_sizes[i])
        throw InputError("identification coordinate out of range");
      code = code * phi.factor_sizes[i] + tuple[i];
    }
    if (hit[code])
      throw InputError("identification is not injective");
    hit[code] = 1;
  }
  std::vector<Partition> partitions;
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<std::size_t> labels(phi.degree());
    for (std::size_t x = 0; x < phi.degree(); ++x)
      labels[x] = phi.table[x][i];
    partitions.push_back(Partition::from_labels(labels));
  }
  return CartesianDecomposition(std::move(partitions));
}

bool identifications_equivalent(Identification const &a, Identification const &b) {
  if (a.degree() != b.degree())
    throw InputError("identifications of different degrees");
  return decomposition_from_identification(a) == decomposition_from_identification(b);
}

DecompositionSymmetry decomposition_symmetry(PermGroup const &group,
                                             CartesianDecomposition const &decomposition) {
  if (group.degree() != decomposition.degree())
    throw InputError("group and decomposition degrees differ");
  auto const &parts = decomposition.partitions();
  DecompositionSymmetry out;
  // Images of each partition under each generator, as indices.
  std::vector<std::vector<std::size_t>> moves(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto const &g : group.generators()) {
      auto it = std::find(parts.begin(), parts.end(), parts[i].image(g));
      if (it == parts.end())
        return out;
      moves[i].push_back(static_cast<std::size_t>(it - parts.begin()));
    }
  }
  out.invariant = true;
  std::vector<char> reached(parts.size(), 0);
  std::vector<std::size_t> queue{0};
  reached[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t j : moves[queue[k]]) {
      if (!reached[j]) {
        reached[j] = 1;
        queue.push_back(j);
      }
    }
  }
  out.transitive = queue.size() == parts.size();
  return out;
}

CartesianSystem make_system(PermGroup plinth, Point omega, std::vector<PermGroup> subgroups) {
  if (omega >= plinth.degree())
    throw InputError("base point out of range");
  PermGroup stabilizer = point_stabilizer(plinth, omega);
  return CartesianSystem{std::move(plinth), omega, std::move(stabilizer),
                         std::move(subgroups)};
}

bool SystemReport::passed() const {
  return cs1 && std::all_of(cs2.begin(), cs2.end(), [](bool b) { return b; }) &&
         gomega_closed.value_or(true);
}

SystemReport verify_cartesian_system(CartesianSystem const &system,
                                     std::optional<PermGroup> const &g_omega) {
  auto const &m = system.plinth;
  auto const &ks = system.subgroups;
  if (ks.empty())
    throw InputError("a Cartesian system needs at least one subgroup");
  for (auto const &k : ks) {
    if (k.degree() != m.degree() || !m.contains_group(k))
      throw InputError("system subgroup is not contained in the plinth");
  }

  SystemReport report;
  PermGroup meet = intersect_all(ks, m, ks.size());
  report.cs1 = meet.same_group(system.stabilizer);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    // K_i times the intersection of the others is a product of two
    // subgroups, so it is all of M exactly when the orders balance.
    PermGroup others = intersect_all(ks, m, i);
    BigInt both = subgroup_intersection(ks[i], others).order();
    report.cs2.push_back(ks[i].order() * others.order() == both * m.order());
  }
  if (g_omega) {
    bool closed = true;
    for (auto const &g : g_omega->generators()) {
      for (auto const &k : ks) {
        PermGroup image = conjugate_subgroup(k, g);
        closed = closed && std::any_of(ks.begin(), ks.end(), [&](PermGroup const &other) {
                   return other.same_group(image);
                 });
      }
    }
    report.gomega_closed = closed;
  }
  return report;
}

CartesianSystem system_from_decomposition(PermGroup const &plinth,
                                          CartesianDecomposition const &decomposition,
                                          Point omega) {
  if (!plinth.is_transitive())
    throw InputError("plinth must be transitive");
  std::vector<PermGroup> ks;
  for (auto const &p : decomposition.partitions()) {
    if (!is_invariant_partition(plinth, p))
      throw StructureError("a partition of the decomposition is not plinth-invariant");
    ks.push_back(partition_stabilizer(plinth, p, omega));
  }
  CartesianSystem out = make_system(plinth, omega, std::move(ks));
  if (!verify_cartesian_system(out).passed())
    throw StructureError("subgroups of the decomposition fail the system conditions");
  return out;
}

CartesianDecomposition decomposition_from_system(CartesianSystem const &system) {
  if (!system.omega)
    throw InputError("system has no base point, so there is no action to decompose");
  if (!verify_cartesian_system(system).passed())
    throw StructureError("not a Cartesian system");
  std::vector<Partition> partitions;
  for (auto const &k : system.subgroups)
    partitions.push_back(partition_from_subgroup(system.plinth, k, *system.omega));
  return CartesianDecomposition(std::move(partitions));
}

bool same_subgroup_set(std::vector<PermGroup> const &a, std::vector<PermGroup> const &b) {
  auto covered = [](std::vector<PermGroup> const &xs, std::vector<PermGroup> const &ys) {
    return std::all_of(xs.begin(), xs.end(), [&](PermGroup const &x) {
      return std::any_of(ys.begin(), ys.end(),
                         [&](PermGroup const &y) { return x.same_group(y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

std::vector<CartesianDecomposition>
find_invariant_decompositions(PermGroup const &group, PermGroup const &plinth, Point omega,
                              SearchCaps const &caps) {
  if (group.degree() != plinth.degree())
    throw InputError("group and plinth degrees differ");
  if (!group.is_transitive() || !plinth.is_transitive())
    throw InputError("decomposition search needs transitive group and plinth");
  if (!group.contains_group(plinth) || !is_normal_subgroup(group, plinth))
    throw InputError("plinth is not a normal subgroup of the group");
  std::size_t const n = group.degree();

  std::vector<Partition> candidates;
  for (auto &p : all_invariant_partitions(plinth, omega, caps.max_partitions)) {
    if (!p.is_trivial())
      candidates.push_back(std::move(p));
  }
  std::unordered_map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    index.emplace(candidates[i], i);

  std::vector<std::vector<std::size_t>> orbits;
  std::vector<char> placed(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (placed[i])
      continue;
    std::vector<std::size_t> orbit{i};
    placed[i] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto const &g : group.generators()) {
        auto it = index.find(candidates[orbit[k]].image(g));
        if (it == index.end())
          throw StructureError("group does not permute the plinth-invariant partitions");
        if (!placed[it->second]) {
          placed[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    // An orbit whose part counts already overshoot the degree is useless.
    std::size_t product = 1;
    bool fits = true;
    for (std::size_t j : orbit) {
      if (n % (product * candidates[j].size()) != 0) {
        fits = false;
        break;
      }
      product *= candidates[j].size();
    }
    if (fits)
      orbits.push_back(std::move(orbit));
  }
  if (orbits.size() > caps.max_orbits)
    throw CapExceeded(std::to_string(orbits.size()) +
                      " candidate partition orbits exceed the cap of " +
                      std::to_string(caps.max_orbits));

  std::vector<std::size_t> weight(orbits.size(), 1);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (std::size_t j : orbits[o])
      weight[o] *= candidates[j].size();
  }

  std::vector<CartesianDecomposition> found;
  std::vector<std::size_t> chosen;
  std::size_t visited = 0;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from,
                                                             std::size_t product) {
    if (++visited > caps.max_combinations)
      throw CapExceeded("orbit-subset search exceeds the cap of " +
                        std::to_string(caps.max_combinations));
    if (product == n) {
      std::vector<Partition> parts;
      for (std::size_t o : chosen) {
        for (std::size_t j : orbits[o])
          parts.push_back(candidates[j]);
      }
      if (parts.size() > caps.max_ell)
        throw CapExceeded("candidate decomposition with " + std::to_string(parts.size()) +
                          " partitions exceeds the arity cap of " +
                          std::to_string(caps.max_ell));
      if (parts.size() >= 2 && is_cartesian_decomposition(parts))
        found.emplace_back(std::move(parts));
      return;
    }
    for (std::size_t o = from; o < orbits.size(); ++o) {
      if ((n / product) % weight[o] != 0)
        continue;
      chosen.push_back(o);
      extend(o + 1, product * weight[o]);
      chosen.pop_back();
    }
  };
  extend(0, 1);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Partition> invariant_partitions_by_subsets(PermGroup const &group) {
  std::size_t const n = group.degree();
  if (n > 20)
    throw CapExceeded("subset scan for blocks is limited to degree 20");
  if (!group.is_transitive())
    throw InputError("block computations need a transitive group");
  using Mask = std::uint32_t;
  auto image = [&](Mask set, Permutation const &g) {
    Mask out = 0;
    for (Point x = 0; x < n; ++x) {
      if (set >> x & 1u)
        out |= Mask{1} << g[x];
    }
    return out;
  };
  // A set through 0 is a block iff its translates are pairwise disjoint.
  std::vector<Partition> out;
  for (Mask rest = 0; rest < (Mask{1} << (n - 1)); ++rest) {
    Mask const block = (rest << 1) | 1u;
    std::vector<Mask> translates{block};
    Mask covered = block;
    bool ok = true;
    for (std::size_t k = 0; ok && k < translates.size(); ++k) {
      for (auto const &g : group.generators()) {
        Mask b = image(translates[k], g);
        if (std::find(translates.begin(), translates.end(), b) != translates.end())
          continue;
        if (b & covered) {
          ok = false;
          break;
        }
        covered |= b;
        translates.push_back(b);
      }
    }
    if (!ok)
      continue;
    std::vector<std::vector<Point>> parts;
    for (Mask b : translates) {
      parts.emplace_back();
      for (Point x = 0; x < n; ++x) {
        if (b >> x & 1u)
          parts.back().push_back(x);
      }
    }
    out.emplace_back(n, std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CartesianDecomposition>
oracle_invariant_decompositions(PermGroup const &group, PermGroup const &plinth,
                                std::size_t max_degree) {
  std::size_t const n = group.degree();
  if (n > max_degree)
    throw CapExceeded("oracle limited to degree " + std::to_string(max_degree));
  std::vector<Partition> all =
      n <= 16 ? invariant_partitions_by_subsets(plinth) : all_invariant_partitions(plinth, 0);
  std::vector<Partition> candidates;
  for (auto &p : all) {
    if (!p.is_trivial())
      candidates.push_back(std::move(p));
  }

  std::vector<CartesianDecomposition> found;
  std::vector<Partition> chosen;
  // Distinct part tuples meet in disjoint sets, so a subset whose part
  // counts multiply past the degree cannot qualify.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from,
                                                             std::size_t product) {
    if (product == n && chosen.size() >= 2 && is_cartesian_by_counting(chosen)) {
      bool invariant = std::all_of(
          group.generators().begin(), group.generators().end(), [&](Permutation const &g) {
            return std::all_of(chosen.begin(), chosen.end(), [&](Partition const &p) {
              return contains_partition(chosen, p.image(g));
            });
          });
      if (invariant)
        found.emplace_back(chosen);
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (product * candidates[i].size() > n)
        continue;
      chosen.push_back(candidates[i]);
      extend(i + 1, product * candidates[i].size());
      chosen.pop_back();
    }
  };
  extend(0, 1);
  std::sort(found.begin(), found.end());
  return found;
}

PermGroup decomposition_stabilizer_bruteforce(PermGroup const &ambient,
                                              CartesianDecomposition const &decomposition,
                                              std::size_t cap) {
  if (ambient.order() > cap)
    throw CapExceeded("ambient group larger than the element cap");
  auto const &parts = decomposition.partitions();
  std::vector<Permutation> members;
  ambient.for_each_element(
      [&](Permutation const &g) {
        bool keeps = std::all_of(parts.begin(), parts.end(), [&](Partition const &p) {
          return contains_partition(parts, p.image(g));
        });
        if (keeps)
          members.push_back(g);
      },
      cap);
  PermGroup out = PermGroup::trivial(ambient.degree());
  for (auto const &g : members) {
    if (!out.contains(g)) {
      auto gens = out.generators();
      gens.push_back(g);
      out = PermGroup(ambient.degree(), std::move(gens));
    }
  }
  if (out.order() != members.size())
    throw StructureError("stabilizer scan is not closed under products");
  return out;
}

} // namespace cartdec
