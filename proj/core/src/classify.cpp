#include "cartdec/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"

namespace cartdec {

namespace {

std::uint64_t element_order(Permutation const &p) {
  std::uint64_t out = 1;
  for (auto const &c : p.cycles())
    out = std::lcm(out, static_cast<std::uint64_t>(c.size()));
  return out;
}

Permutation power(Permutation const &p, std::uint64_t e) {
  Permutation out(p.degree());
  Permutation base = p;
  for (; e > 0; e >>= 1) {
    if (e & 1)
      out *= base;
    base = base * base;
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

PermGroup join(std::size_t degree, std::vector<PermGroup> const &groups,
               std::optional<BigInt> order = {}) {
  std::vector<Permutation> gens;
  for (auto const &g : groups)
    gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  if (order)
    return PermGroup::from_redundant_generators(degree, gens, ChainOptions{*order, {}});
  return PermGroup::from_redundant_generators(degree, gens);
}

Point least_moved_point(PermGroup const &g) {
  Point out = static_cast<Point>(g.degree());
  for (auto const &s : g.generators())
    out = std::min(out, static_cast<Point>(s.smallest_moved_point()));
  return out;
}

bool pairwise_commute(std::vector<PermGroup> const &groups) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (!groups[i].commutes_with(groups[j]))
        return false;
    }
  }
  return true;
}

} // namespace

std::vector<PermGroup> plinths(PermGroup const &group, std::size_t cap) {
  if (!group.is_transitive())
    throw InputError("plinths are defined for transitive groups");
  std::vector<PermGroup> out;
  for (auto &n : minimal_normal_subgroups(group, cap)) {
    if (n.is_transitive())
      out.push_back(std::move(n));
  }
  return out;
}

bool is_innately_transitive(PermGroup const &group, std::size_t cap) {
  return group.is_transitive() && !plinths(group, cap).empty();
}

void require_nonabelian_plinth(PermGroup const &plinth) {
  if (plinth.is_abelian())
    throw StructureError("abelian plinth: classification is only defined for "
                         "nonabelian plinths");
}

bool is_simple_group(PermGroup const &group, std::size_t cap) {
  if (group.is_trivial())
    return false;
  if (group.order() > cap)
    throw CapExceeded("simplicity scan needs a group of order at most " + std::to_string(cap));
  if (group.is_abelian())
    return prime_divisors(static_cast<std::uint64_t>(group.order())) ==
           std::vector<std::uint64_t>{static_cast<std::uint64_t>(group.order())};
  for (auto const &rep : conjugacy_class_representatives(group, cap)) {
    if (!rep.is_identity() && normal_closure(group, {rep}).order() != group.order())
      return false;
  }
  return true;
}

DirectFactorization::DirectFactorization(PermGroup plinth, std::vector<PermGroup> factors,
                                         std::size_t factor_cap)
    : plinth_(std::move(plinth)), factors_(std::move(factors)) {
  if (factors_.empty())
    throw StructureError("a direct factorization needs at least one factor");
  BigInt product = 1;
  for (auto const &t : factors_) {
    if (!plinth_.contains_group(t))
      throw StructureError("factor is not contained in the plinth");
    if (!is_simple_group(t, factor_cap))
      throw StructureError("factor of order " + t.order().str() + " is not simple");
    product *= t.order();
  }
  if (product != plinth_.order())
    throw StructureError("factor orders do not multiply to the plinth order");
  if (!pairwise_commute(factors_))
    throw StructureError("factors do not commute");
  if (join(plinth_.degree(), factors_).order() != plinth_.order())
    throw StructureError("factors do not generate the plinth");

  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<PermGroup> others;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (j != i)
        others.push_back(factors_[j]);
    }
    BigInt order = plinth_.order() / factors_[i].order();
    complements_.push_back(others.empty() ? PermGroup::trivial(plinth_.degree())
                                          : join(plinth_.degree(), others, order));
    elements_.push_back(factors_[i].elements(factor_cap));
  }
}

Permutation DirectFactorization::project(Permutation const &m, std::size_t i) const {
  for (auto const &t : elements_.at(i)) {
    if (complement(i).contains(m * t.inverse()))
      return t;
  }
  throw StructureError("element has no projection; it is not in the plinth");
}

PermGroup DirectFactorization::project(PermGroup const &subgroup, std::size_t i) const {
  std::vector<Permutation> gens;
  for (auto const &g : subgroup.generators())
    gens.push_back(project(g, i));
  return PermGroup::from_redundant_generators(plinth_.degree(), gens);
}

PermGroup DirectFactorization::product(std::vector<std::size_t> const &cell) const {
  std::vector<PermGroup> parts;
  BigInt order = 1;
  for (std::size_t t : cell) {
    parts.push_back(factor(t));
    order *= factor(t).order();
  }
  if (parts.empty())
    return PermGroup::trivial(plinth_.degree());
  return join(plinth_.degree(), parts, order);
}

DirectFactorization simple_direct_factors(PermGroup const &plinth, std::size_t factor_cap) {
  if (plinth.is_trivial() || plinth.is_abelian())
    throw StructureError("plinth is not a nonabelian characteristically simple group");
  std::mt19937_64 rng(0x5eed5eedULL);

  // Normal closures of prime-order powers of random elements are products of
  // the factors on which that power is nontrivial. Their inclusion-minimal
  // members, refined by intersection, are the factors.
  std::vector<PermGroup> pool;
  auto remember = [&](PermGroup n) {
    if (n.is_trivial())
      return;
    for (auto const &m : pool) {
      if (m.same_group(n))
        return;
    }
    pool.push_back(std::move(n));
  };
  auto minimal = [&]() {
    std::vector<PermGroup> out;
    for (auto const &n : pool) {
      bool has_smaller = std::any_of(pool.begin(), pool.end(), [&](PermGroup const &m) {
        return m.order() < n.order() && n.contains_group(m);
      });
      if (!has_smaller)
        out.push_back(n);
    }
    return out;
  };

  for (int round = 0; round < 400; ++round) {
    Permutation x = plinth.random_element(rng);
    if (x.is_identity())
      continue;
    std::uint64_t o = element_order(x);
    for (std::uint64_t p : prime_divisors(o))
      remember(normal_closure(plinth, {power(x, o / p)}));
    if (round % 8 != 7)
      continue;

    auto atoms = minimal();
    BigInt product = 1;
    for (auto const &a : atoms)
      product *= a.order();
    if (product == plinth.order() && pairwise_commute(atoms)) {
      std::stable_sort(atoms.begin(), atoms.end(), [](PermGroup const &a, PermGroup const &b) {
        return least_moved_point(a) < least_moved_point(b);
      });
      return DirectFactorization(plinth, std::move(atoms), factor_cap);
    }
    // Two incomparable minimal candidates overlap in a smaller product.
    if (atoms.size() > 1 && product > plinth.order()) {
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
          if (!atoms[i].commutes_with(atoms[j]))
            remember(subgroup_intersection(atoms[i], atoms[j]));
        }
      }
    }
  }
  throw StructureError("could not split the plinth into simple direct factors");
}

bool projective_factorization_holds(DirectFactorization const &f,
                                    std::vector<PermGroup> const &ks, std::size_t i,
                                    std::size_t j) {
  PermGroup const &t = f.factor(i);
  PermGroup sj = f.project(ks.at(j), i);
  PermGroup rest = t;
  for (std::size_t m = 0; m < ks.size(); ++m) {
    if (m != j)
      rest = subgroup_intersection(rest, f.project(ks[m], i));
  }
  return product_covers(t, sj, {rest});
}

std::vector<FactorSet> factor_sets(DirectFactorization const &f,
                                   std::vector<PermGroup> const &ks) {
  std::vector<FactorSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    FactorSet set{i, {}};
    for (auto const &k : ks) {
      PermGroup s = f.project(k, i);
      if (s.order() == f.factor(i).order())
        continue;
      bool seen = std::any_of(set.subgroups.begin(), set.subgroups.end(),
                              [&](PermGroup const &x) { return x.same_group(s); });
      if (!seen)
        set.subgroups.push_back(std::move(s));
    }
    if (set.subgroups.size() > 3)
      throw StructureError("factor set " + std::to_string(i + 1) + " has " +
                           std::to_string(set.subgroups.size()) +
                           " members; at most 3 are possible for a Cartesian system");
    out.push_back(std::move(set));
  }
  for (auto const &set : out) {
    if (set.subgroups.size() != out.front().subgroups.size())
      throw StructureError("factor sets differ in size between factors");
  }
  return out;
}

bool is_strong_multiple_factorization(PermGroup const &t, PermGroup const &a,
                                      PermGroup const &b, PermGroup const &c) {
  for (auto const *x : {&a, &b, &c}) {
    if (!t.contains_group(*x) || x->order() == t.order())
      throw InputError("strong multiple factorisation needs proper subgroups of T");
  }
  return product_covers(t, a, {subgroup_intersection(b, c)}) &&
         product_covers(t, b, {subgroup_intersection(c, a)}) &&
         product_covers(t, c, {subgroup_intersection(a, b)});
}

std::optional<NormalWitness> find_normal_witness(DirectFactorization const &f,
                                                 CartesianSystem const &system) {
  auto const &ks = system.subgroups;
  std::size_t const k = f.size();
  std::size_t const ell = ks.size();
  if (k < ell)
    return std::nullopt;

  // K_i must contain every factor outside its own cell.
  std::vector<std::vector<char>> holds(ell, std::vector<char>(k));
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t t = 0; t < k; ++t)
      holds[i][t] = ks[i].contains_group(f.factor(t));
  }

  std::vector<std::size_t> cell_of(k);
  std::optional<NormalWitness> found;
  auto check = [&]() {
    NormalWitness cells(ell);
    for (std::size_t t = 0; t < k; ++t)
      cells[cell_of[t]].push_back(t);
    for (auto const &c : cells) {
      if (c.empty())
        return false;
    }
    for (std::size_t i = 0; i < ell; ++i) {
      PermGroup mi = f.product(cells[i]);
      PermGroup local = subgroup_intersection(mi, system.stabilizer);
      BigInt order = local.order();
      std::vector<Permutation> gens = local.generators();
      for (std::size_t t = 0; t < k; ++t) {
        if (cell_of[t] != i) {
          order *= f.factor(t).order();
          auto const &tg = f.factor(t).generators();
          gens.insert(gens.end(), tg.begin(), tg.end());
        }
      }
      if (order != ks[i].order())
        return false;
      PermGroup rebuilt =
          PermGroup::from_redundant_generators(f.plinth().degree(), gens, ChainOptions{order, {}});
      if (!rebuilt.same_group(ks[i]))
        return false;
    }
    found = std::move(cells);
    return true;
  };
  // Assignments in lexicographic order; a factor may join cell i only if
  // every other K_j contains it.
  std::function<bool(std::size_t)> assign = [&](std::size_t t) {
    if (t == k)
      return check();
    for (std::size_t i = 0; i < ell; ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < ell && fits; ++j)
        fits = j == i || holds[j][t];
      if (!fits)
        continue;
      cell_of[t] = i;
      if (assign(t + 1))
        return true;
    }
    return false;
  };
  assign(0);
  return found;
}

std::vector<DiagonalPair> diagonal_profile(DirectFactorization const &f,
                                           std::vector<PermGroup> const &ks) {
  std::vector<DiagonalPair> out;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    std::vector<char> onto(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      onto[i] = f.project(ks[j], i).order() == f.factor(i).order();
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        if (!onto[a] || !onto[b])
          continue;
        std::vector<Permutation> gens;
        for (auto const &g : ks[j].generators())
          gens.push_back(f.project(g, a) * f.project(g, b));
        PermGroup pair = PermGroup::from_redundant_generators(f.plinth().degree(), gens);
        if (pair.order() == f.factor(a).order() &&
            pair.order() < f.factor(a).order() * f.factor(b).order())
          out.push_back({a, b, j});
      }
    }
  }
  return out;
}

bool conjugation_transitive(PermGroup const &g_omega, std::vector<PermGroup> const &ks) {
  std::vector<char> reached(ks.size(), 0);
  std::vector<std::size_t> queue{0};
  reached[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto const &g : g_omega.generators()) {
      PermGroup image = conjugate_subgroup(ks[queue[q]], g);
      for (std::size_t j = 0; j < ks.size(); ++j) {
        if (!reached[j] && ks[j].same_group(image)) {
          reached[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  return queue.size() == ks.size();
}

void verify_plinth(PermGroup const &group, DirectFactorization const &f,
                   CartesianSystem const &system, std::optional<PermGroup> const &g_omega) {
  PermGroup const &m = f.plinth();
  require_nonabelian_plinth(m);
  if (!is_normal_subgroup(group, m))
    throw StructureError("plinth is not a normal subgroup of the group");
  if (system.omega) {
    if (!m.is_transitive())
      throw StructureError("plinth is not transitive");
  } else {
    if (!g_omega)
      throw InputError("a system without a base point needs the point stabilizer in G");
    PermGroup local = subgroup_intersection(m, *g_omega);
    if (m.order() * g_omega->order() != local.order() * group.order())
      throw StructureError("plinth is not transitive on the cosets of G_omega");
    if (!local.same_group(system.stabilizer))
      throw StructureError("plinth meets G_omega in a group other than M_omega");
  }
  // Minimal normality: the factors form a single conjugation orbit.
  std::vector<char> reached(f.size(), 0);
  std::vector<std::size_t> queue{0};
  reached[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto const &g : group.generators()) {
      PermGroup image = conjugate_subgroup(f.factor(queue[q]), g);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (!reached[j] && f.factor(j).same_group(image)) {
          reached[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  if (queue.size() != f.size())
    throw StructureError("group does not permute the simple factors transitively, so the "
                         "plinth is not minimal normal");
}

ClassificationReport classify_system(PermGroup const &group, CartesianSystem const &system,
                                     std::optional<PermGroup> g_omega,
                                     ClassifyOptions const &options) {
  PermGroup const &m = system.plinth;
  require_nonabelian_plinth(m);
  if (system.omega && !g_omega)
    g_omega = point_stabilizer(group, *system.omega);
  DirectFactorization f = options.factorization
                              ? *options.factorization
                              : simple_direct_factors(m, options.factor_cap);
  if (!f.plinth().same_group(m))
    throw InputError("factorization belongs to a different plinth");
  verify_plinth(group, f, system, g_omega);
  if (!verify_cartesian_system(system, g_omega).passed())
    throw StructureError("input is not a Cartesian system");

  auto const &ks = system.subgroups;
  ClassificationReport report;
  report.ell = ks.size();

  BigInt degree = m.order() / system.stabilizer.order();
  if (system.omega && degree <= options.max_degree) {
    CartesianDecomposition e = decomposition_from_system(system);
    report.homogeneous = e.is_homogeneous();
    report.g_transitive = decomposition_symmetry(group, e).transitive;
  } else {
    // |Gamma_i| = |M : K_i|, and G acts on the partitions as G_omega acts
    // on the K_i by conjugation.
    report.homogeneous = std::all_of(ks.begin(), ks.end(), [&](PermGroup const &k) {
      return k.order() == ks.front().order();
    });
    if (g_omega)
      report.g_transitive = conjugation_transitive(*g_omega, ks);
  }

  report.normal_cells = find_normal_witness(f, system);
  report.factor_sets = factor_sets(f, ks);
  report.factor_set_size = report.factor_sets.front().subgroups.size();
  report.diagonal_pairs = diagonal_profile(f, ks);
  if (report.factor_set_size == 3) {
    auto const &s = report.factor_sets.front().subgroups;
    report.smf_detected = is_strong_multiple_factorization(f.factor(0), s[0], s[1], s[2]);
  }
  return report;
}

} // namespace cartdec
