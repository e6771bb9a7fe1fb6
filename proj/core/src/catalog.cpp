#include "cartdec/catalog.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <sstream>

#include "cartdec/blocks.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/standard_groups.hpp"

namespace cartdec {

namespace {

PermGroup on_segment(PermGroup const &x, std::size_t segment, std::size_t k) {
  std::size_t const n = x.degree();
  std::vector<Permutation> gens;
  for (auto const &g : x.generators()) {
    std::vector<Point> images(k * n);
    for (Point p = 0; p < images.size(); ++p)
      images[p] = p;
    for (Point p = 0; p < n; ++p)
      images[segment * n + p] = static_cast<Point>(segment * n + g[p]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(k * n, std::move(gens), ChainOptions{x.order(), {}});
}

/// {(t, t)} on two segments.
PermGroup diagonal_on(PermGroup const &t, std::size_t s1, std::size_t s2, std::size_t k) {
  std::size_t const n = t.degree();
  std::vector<Permutation> gens;
  for (auto const &g : t.generators()) {
    std::vector<Point> images(k * n);
    for (Point p = 0; p < images.size(); ++p)
      images[p] = p;
    for (Point p = 0; p < n; ++p) {
      images[s1 * n + p] = static_cast<Point>(s1 * n + g[p]);
      images[s2 * n + p] = static_cast<Point>(s2 * n + g[p]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(k * n, std::move(gens), ChainOptions{t.order(), {}});
}

/// Subgroup generated by commuting pieces with trivial pairwise overlap.
PermGroup combine(std::size_t degree, std::vector<PermGroup> const &pieces) {
  std::vector<Permutation> gens;
  BigInt order = 1;
  for (auto const &p : pieces) {
    gens.insert(gens.end(), p.generators().begin(), p.generators().end());
    order *= p.order();
  }
  if (gens.empty())
    return PermGroup::trivial(degree);
  return PermGroup::from_redundant_generators(degree, gens, ChainOptions{order, {}});
}

/// Product X_1 x ... x X_k of subgroups of T, one per segment.
PermGroup segment_product(std::vector<PermGroup> const &parts) {
  std::size_t const k = parts.size();
  std::vector<PermGroup> pieces;
  for (std::size_t i = 0; i < k; ++i)
    pieces.push_back(on_segment(parts[i], i, k));
  return combine(k * parts.front().degree(), pieces);
}

PermGroup intersect_all(std::vector<PermGroup> const &groups) {
  PermGroup out = groups.front();
  for (std::size_t i = 1; i < groups.size(); ++i)
    out = subgroup_intersection(out, groups[i]);
  return out;
}

void require_subgroup(PermGroup const &t, PermGroup const &x, char const *what) {
  if (x.degree() != t.degree() || !t.contains_group(x))
    throw InputError(std::string(what) + " is not a subgroup of T");
}

/// Builds the point level from the coset action of G on G_omega.
std::optional<PointLevel> point_level(PermGroup const &group, PermGroup const &plinth,
                                      PermGroup const &g_omega, CartesianSystem const &system,
                                      BuildOptions const &options) {
  BigInt degree = plinth.order() / system.stabilizer.order();
  if (degree > options.max_degree)
    return std::nullopt;
  auto act = coset_action(group, g_omega, {options.max_degree, true});
  PermGroup image_plinth = act.image_of(plinth);
  std::vector<PermGroup> ks;
  for (auto const &k : system.subgroups)
    ks.push_back(act.image_of(k));
  CartesianSystem image_system = make_system(image_plinth, 0, std::move(ks));
  CartesianDecomposition e = decomposition_from_system(image_system);
  return PointLevel{act.image(), image_plinth, 0, std::move(image_system), std::move(e)};
}

struct WreathSpec {
  std::string name;
  std::string description;
  PermGroup t;
  PermGroup top;
  std::vector<PermGroup> ks;
};

Instance wreath_instance(WreathSpec w, BuildOptions const &options) {
  std::size_t const k = w.top.degree();
  std::size_t const degree = k * w.t.degree();
  Instance out{w.name, w.description,
               wreath_product_imprimitive_action(w.t, w.top)};
  std::vector<PermGroup> factors;
  for (std::size_t i = 0; i < k; ++i)
    factors.push_back(on_segment(w.t, i, k));
  PermGroup m = combine(degree, factors);
  PermGroup stabilizer = intersect_all(w.ks);

  std::vector<Permutation> local = stabilizer.generators();
  for (auto const &h : w.top.generators())
    local.push_back(segment_permutation(h, w.t.degree()));
  PermGroup g_omega = PermGroup::from_redundant_generators(
      degree, local, ChainOptions{stabilizer.order() * w.top.order(), {}});

  out.plinth = m;
  out.system = CartesianSystem{m, std::nullopt, stabilizer, w.ks};
  out.g_omega = g_omega;
  out.factorization = DirectFactorization(m, factors);
  out.points = point_level(out.group, m, g_omega, *out.system, options);

  auto &x = out.expected;
  x.group_order = m.order() * w.top.order();
  x.plinth_order = m.order();
  BigInt omega_size = m.order() / stabilizer.order();
  if (omega_size <= SIZE_MAX)
    x.degree = static_cast<std::size_t>(omega_size);
  for (auto const &kk : w.ks)
    x.subgroup_orders.push_back(kk.order());
  x.stabilizer_order = stabilizer.order();
  return out;
}

} // namespace

Instance build_grid_2x3() {
  auto c = [](std::vector<std::vector<Point>> cycles) {
    return Permutation::from_cycles(6, cycles);
  };
  // Cell (i, j) of the 2x3 grid is point 3i + j.
  PermGroup g(6, {c({{0, 3}, {1, 4}, {2, 5}}), c({{0, 1, 2}, {3, 4, 5}}), c({{0, 1}, {3, 4}})});
  Partition rows(6, {{0, 1, 2}, {3, 4, 5}});
  Partition columns(6, {{0, 3}, {1, 4}, {2, 5}});
  CartesianDecomposition e({rows, columns});

  Instance out{"grid_2x3", "S2 x S3 on the cells of a 2x3 grid", g};
  out.points = PointLevel{g, std::nullopt, 0, std::nullopt, e};
  out.ambient = symmetric_group(6);
  auto &x = out.expected;
  x.group_order = 12;
  x.degree = 6;
  x.innately_transitive = false;
  x.homogeneous = false;
  x.invariant = true;
  x.g_transitive = false;
  x.ambient_stabilizer_order = 12;
  return out;
}

Instance build_wreath_product_action(std::size_t gamma_size, std::size_t ell,
                                     BuildOptions const &options) {
  if (gamma_size < 2 || ell < 2)
    throw InputError("wreath product action needs |Gamma| >= 2 and ell >= 2");
  PermGroup w = wreath_product_product_action(symmetric_group(gamma_size), ell,
                                              symmetric_group(ell), options.max_degree);
  std::size_t const n = w.degree();
  Identification phi;
  phi.factor_sizes.assign(ell, gamma_size);
  for (Point p = 0; p < n; ++p)
    phi.table.push_back(decode_tuple(p, gamma_size, ell));
  CartesianDecomposition e = decomposition_from_identification(phi);

  Instance out{"wreath_product_action",
               "Sym(Gamma) wr S_ell in product action, |Gamma| = " +
                   std::to_string(gamma_size) + ", ell = " + std::to_string(ell),
               w};
  auto &x = out.expected;
  BigInt order = symmetric_group(ell).order();
  for (std::size_t i = 0; i < ell; ++i)
    order *= symmetric_group(gamma_size).order();
  x.group_order = order;
  x.degree = n;
  x.homogeneous = true;
  x.invariant = true;
  x.g_transitive = true;

  std::optional<PermGroup> plinth;
  std::optional<CartesianSystem> system;
  if (gamma_size >= 5) {
    PermGroup alt = alternating_group(gamma_size);
    plinth = wreath_product_product_action(alt, ell, PermGroup::trivial(ell), options.max_degree);
    system = system_from_decomposition(*plinth, e, 0);
    std::vector<PermGroup> factors;
    for (std::size_t i = 0; i < ell; ++i) {
      std::vector<Permutation> gens;
      for (auto const &g : alt.generators())
        gens.push_back(coordinate_permutation(g, i, ell));
      factors.emplace_back(n, std::move(gens), ChainOptions{alt.order(), {}});
    }
    out.plinth = plinth;
    out.system = system;
    out.g_omega = point_stabilizer(w, 0);
    out.factorization = DirectFactorization(*plinth, factors);
    x.plinth_order = plinth->order();
    BigInt k_order = alt.order() / gamma_size;
    for (std::size_t i = 1; i < ell; ++i)
      k_order *= alt.order();
    x.subgroup_orders.assign(ell, k_order);
    x.normal = true;
    x.factor_set_size = 1;
    x.diagonal_pair_count = 0;
  }
  out.points = PointLevel{w, plinth, 0, system, e};
  return out;
}

A6Subgroups a6_on_36_subgroups(std::size_t which_d10) {
  PermGroup a6 = alternating_group(6);
  auto elements = a6.elements();
  std::vector<PermGroup> d10s;
  for (auto const &x : elements) {
    if (x.cycles().size() != 1 || x.cycles().front().size() != 5)
      continue;
    for (auto const &y : elements) {
      if (y.is_identity() || !(y * y).is_identity() || x.conjugated_by(y) != x.inverse())
        continue;
      PermGroup d(6, {x, y});
      bool known = std::any_of(d10s.begin(), d10s.end(),
                               [&](PermGroup const &e) { return e.same_group(d); });
      if (!known)
        d10s.push_back(d);
      break;
    }
    if (d10s.size() > which_d10)
      break;
  }
  if (d10s.size() <= which_d10)
    throw InputError("no D10 subgroup with that index");
  PermGroup d10 = d10s[which_d10];

  Point fixed = 0;
  while (d10.orbit(fixed).size() != 1)
    ++fixed;
  PermGroup natural = point_stabilizer(a6, fixed);
  for (auto const &z : elements) {
    auto gens = d10.generators();
    gens.push_back(z);
    PermGroup h(6, gens);
    if (h.order() == 60 && h.is_transitive())
      return {a6, d10, natural, h};
  }
  throw StructureError("no transitive A5 contains the D10");
}

Instance build_a6_on_36(bool projective_extension, BuildOptions const &options) {
  PermGroup group, plinth, d10;
  std::vector<PermGroup> ks;
  if (!projective_extension) {
    auto s = a6_on_36_subgroups();
    group = plinth = s.a6;
    d10 = s.d10;
    ks = {s.natural_a5, s.transitive_a5};
  } else {
    group = projective_line_group_9(LineGroup::pgammal);
    plinth = projective_line_group_9(LineGroup::psl);
    auto elements = plinth.elements();
    for (auto const &x : elements) {
      if (x.cycles().size() != 2 || x.cycles().front().size() != 5)
        continue;
      for (auto const &y : elements) {
        if (!y.is_identity() && (y * y).is_identity() && x.conjugated_by(y) == x.inverse()) {
          d10 = PermGroup(10, {x, y});
          break;
        }
      }
      break;
    }
    for (auto const &z : elements) {
      auto gens = d10.generators();
      gens.push_back(z);
      PermGroup h(10, gens);
      bool known = std::any_of(ks.begin(), ks.end(),
                               [&](PermGroup const &k) { return k.same_group(h); });
      if (h.order() == 60 && !known)
        ks.push_back(h);
      if (ks.size() == 2)
        break;
    }
  }

  // G_omega: the normalizer of D10 in G, found by scanning G.
  std::vector<Permutation> normalizing;
  std::size_t count = 0;
  group.for_each_element([&](Permutation const &g) {
    bool keeps = std::all_of(d10.generators().begin(), d10.generators().end(),
                             [&](Permutation const &s) { return d10.contains(s.conjugated_by(g)); });
    if (keeps) {
      ++count;
      normalizing.push_back(g);
    }
  });
  PermGroup local = PermGroup::from_redundant_generators(group.degree(), normalizing,
                                                         ChainOptions{BigInt(count), {}});

  auto act = coset_action(group, local, {options.max_degree, true});
  PermGroup m = act.image_of(plinth);
  std::vector<PermGroup> image_ks;
  for (auto const &k : ks)
    image_ks.push_back(act.image_of(k));
  CartesianSystem system = make_system(m, 0, std::move(image_ks));
  CartesianDecomposition e = decomposition_from_system(system);

  Instance out{projective_extension ? "a6_on_36_pgammal" : "a6_on_36",
               projective_extension ? "PGammaL(2,9) on the 36 cosets of N(D10), plinth A6"
                                    : "A6 on the 36 cosets of D10",
               act.image()};
  out.plinth = m;
  out.system = system;
  out.g_omega = point_stabilizer(out.group, 0);
  out.factorization = DirectFactorization(m, {m});
  out.points = PointLevel{out.group, m, 0, system, e};
  auto &x = out.expected;
  x.group_order = projective_extension ? 1440 : 360;
  x.plinth_order = 360;
  x.degree = 36;
  x.subgroup_orders = {60, 60};
  x.stabilizer_order = 10;
  x.homogeneous = true;
  x.invariant = true;
  x.g_transitive = projective_extension;
  x.normal = false;
  x.factor_set_size = 2;
  x.diagonal_pair_count = 0;
  return out;
}

Instance build_ex61(PermGroup const &t, BuildOptions const &options) {
  PermGroup d8(4, {Permutation::from_cycles(4, {{0, 1}}),
                   Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::size_t const degree = 4 * t.degree();
  PermGroup k1 = combine(degree, {diagonal_on(t, 0, 1, 4), on_segment(t, 2, 4),
                                  on_segment(t, 3, 4)});
  PermGroup k2 = combine(degree, {on_segment(t, 0, 4), on_segment(t, 1, 4),
                                  diagonal_on(t, 2, 3, 4)});
  Instance out = wreath_instance({"ex61", "T wr D8 with K1 = D(TxT)xTxT, K2 = TxTxD(TxT)", t, d8,
                                  {k1, k2}},
                                 options);
  auto &x = out.expected;
  x.normal = true;
  x.normal_cells = NormalWitness{{0, 1}, {2, 3}};
  x.factor_set_size = 0;
  x.diagonal_pair_count = 2;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

Instance build_ex62(PermGroup const &t, PermGroup const &a, BuildOptions const &options) {
  require_subgroup(t, a, "A");
  if (a.order() == t.order())
    throw InputError("A must be a proper subgroup of T");
  PermGroup k1 = segment_product({t, a});
  PermGroup k2 = segment_product({a, t});
  Instance out = wreath_instance({"ex62", "T wr S2 with K1 = TxA, K2 = AxT", t,
                                  symmetric_group(2), {k1, k2}},
                                 options);
  auto &x = out.expected;
  x.normal = true;
  x.normal_cells = NormalWitness{{0}, {1}};
  x.factor_set_size = 1;
  x.diagonal_pair_count = 0;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

Instance build_ex64(PermGroup const &t, PermGroup const &a, PermGroup const &b,
                    BuildOptions const &options) {
  require_subgroup(t, a, "A");
  require_subgroup(t, b, "B");
  if (a.order() == t.order() || b.order() == t.order())
    throw InputError("A and B must be proper subgroups of T");
  if (!product_covers(t, a, {b}))
    throw InputError("T is not the product AB");
  PermGroup k1 = segment_product({a, b});
  PermGroup k2 = segment_product({b, a});
  Instance out = wreath_instance({"ex64", "T wr S2 with K1 = AxB, K2 = BxA for T = AB", t,
                                  symmetric_group(2), {k1, k2}},
                                 options);
  auto &x = out.expected;
  x.normal = false;
  x.factor_set_size = 2;
  x.diagonal_pair_count = 0;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

Instance build_ex65(PermGroup const &t, PermGroup const &a, PermGroup const &b,
                    PermGroup const &c, BuildOptions const &options) {
  require_subgroup(t, a, "A");
  require_subgroup(t, b, "B");
  require_subgroup(t, c, "C");
  if (!is_strong_multiple_factorization(t, a, b, c))
    throw InputError("A, B, C do not form a strong multiple factorisation of T");
  PermGroup k1 = segment_product({a, b, c});
  PermGroup k2 = segment_product({b, c, a});
  PermGroup k3 = segment_product({c, a, b});
  Instance out = wreath_instance({"ex65", "T wr C3 with K1 = AxBxC, K2 = BxCxA, K3 = CxAxB", t,
                                  cyclic_group(3), {k1, k2, k3}},
                                 options);
  auto &x = out.expected;
  x.normal = false;
  x.factor_set_size = 3;
  x.smf = true;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

Instance build_companion_normal(PermGroup const &t, std::vector<PermGroup> const &factors,
                                BuildOptions const &options) {
  std::size_t const ell = factors.size();
  if (ell != 2 && ell != 3)
    throw InputError("companion systems exist for two or three subgroups");
  for (auto const &f : factors)
    require_subgroup(t, f, "factor subgroup");
  PermGroup common = intersect_all(factors);
  std::vector<PermGroup> ks;
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<PermGroup> parts(ell, t);
    parts[i] = common;
    ks.push_back(segment_product(parts));
  }
  PermGroup top = ell == 2 ? symmetric_group(2) : cyclic_group(3);
  Instance out = wreath_instance(
      {"companion_normal", "the M-normal system built from the common intersection", t, top,
       std::move(ks)},
      options);
  auto &x = out.expected;
  x.normal = true;
  NormalWitness cells;
  for (std::size_t i = 0; i < ell; ++i)
    cells.push_back({i});
  x.normal_cells = cells;
  x.factor_set_size = common.order() == t.order() ? 0 : 1;
  x.diagonal_pair_count = 0;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

AutomorphismTable::AutomorphismTable(PermGroup group,
                                     std::unordered_map<Permutation, Permutation> map)
    : group_(std::move(group)), map_(std::move(map)) {}

Permutation AutomorphismTable::apply(Permutation const &x) const {
  auto it = map_.find(x);
  if (it == map_.end())
    throw InputError("element is not in the automorphism table");
  return it->second;
}

PermGroup AutomorphismTable::apply(PermGroup const &subgroup) const {
  std::vector<Permutation> gens;
  for (auto const &g : subgroup.generators())
    gens.push_back(apply(g));
  return PermGroup(group_.degree(), std::move(gens), ChainOptions{subgroup.order(), {}});
}

bool AutomorphismTable::is_automorphism() const {
  if (group_.order() != map_.size())
    return false;
  std::unordered_set<Permutation> images;
  for (auto const &[x, y] : map_) {
    if (!group_.contains(x) || !group_.contains(y) || !images.insert(y).second)
      return false;
  }
  // Multiplicative on (element, generator) pairs, hence on all pairs.
  for (auto const &[x, y] : map_) {
    for (auto const &s : group_.generators()) {
      if (apply(x * s) != y * apply(s))
        return false;
    }
  }
  return true;
}

bool AutomorphismTable::is_involution() const {
  return std::all_of(map_.begin(), map_.end(),
                     [&](auto const &entry) { return apply(entry.second) == entry.first; });
}

AutomorphismTable parse_automorphism_table(std::string const &text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> degree;
  std::unordered_map<Permutation, Permutation> map;
  std::vector<Permutation> keys;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword))
      continue;
    if (keyword == "degree") {
      std::size_t n = 0;
      if (!(words >> n) || n == 0)
        throw InputError("automorphism table line " + std::to_string(line_no) +
                         ": bad degree");
      degree = n;
    } else if (keyword == "map") {
      std::string from, to;
      if (!degree || !(words >> from >> to))
        throw InputError("automorphism table line " + std::to_string(line_no) +
                         ": expected 'map <cycles> <cycles>' after a degree line");
      Permutation x = parse_cycles(*degree, from);
      if (!map.emplace(x, parse_cycles(*degree, to)).second)
        throw InputError("automorphism table line " + std::to_string(line_no) +
                         ": element listed twice");
      keys.push_back(x);
    } else {
      throw InputError("automorphism table line " + std::to_string(line_no) +
                       ": unknown keyword '" + keyword + "'");
    }
  }
  if (!degree || keys.empty())
    throw InputError("automorphism table is empty");
  PermGroup group = PermGroup::from_redundant_generators(*degree, keys);
  return AutomorphismTable(std::move(group), std::move(map));
}

TauCheck check_tau(AutomorphismTable const &tau) {
  TauCheck out;
  out.automorphism = tau.is_automorphism();
  if (!out.automorphism)
    return out;
  out.involution = tau.is_involution();
  PermGroup const &t = tau.group();
  PermGroup a = point_stabilizer(t, static_cast<Point>(t.degree() - 1));
  PermGroup b = tau.apply(a);
  // A fixes a point and B does not, so they lie in different classes.
  out.swaps_classes = !a.is_transitive() && b.is_transitive() && tau.apply(b).same_group(a);
  return out;
}

Instance build_ex63(BuildOptions const &options) {
  AutomorphismTable tau = parse_automorphism_table(tau_fixture_text());
  TauCheck check = check_tau(tau);
  if (!check.automorphism || !check.involution || !check.swaps_classes)
    throw StructureError("the shipped automorphism fixture does not validate");
  PermGroup const &t6 = tau.group();
  PermGroup a6 = point_stabilizer(t6, 5);
  PermGroup b6 = tau.apply(a6);

  // T on 12 points: the natural 6 points followed by the conjugation action
  // on the class of B, realized as the coset action on B.
  auto classes = coset_action(t6, b6, {12, true});
  auto lift = [&](Permutation const &x) {
    std::vector<Point> images(12);
    Permutation y = classes.image_of(x);
    for (Point p = 0; p < 6; ++p) {
      images[p] = x[p];
      images[6 + p] = 6 + y[p];
    }
    return Permutation(std::move(images));
  };
  auto lift_group = [&](PermGroup const &g) {
    std::vector<Permutation> gens;
    for (auto const &s : g.generators())
      gens.push_back(lift(s));
    return PermGroup(12, std::move(gens), ChainOptions{g.order(), {}});
  };

  // tau as a permutation of the 12 points: A_i = Stab(i) goes to a member
  // of B's class, which goes back to some A_i'.
  std::vector<Point> hat(12);
  for (Point i = 0; i < 6; ++i) {
    PermGroup image = tau.apply(point_stabilizer(t6, i));
    for (Point j = 0; j < 6; ++j) {
      PermGroup bj = conjugate_subgroup(b6, classes.labels()[j]);
      if (bj.same_group(image)) {
        hat[i] = 6 + j;
        PermGroup back = tau.apply(bj);
        Point fixed = 0;
        while (back.orbit(fixed).size() != 1)
          ++fixed;
        hat[6 + j] = fixed;
      }
    }
  }
  Permutation tau_hat(hat);
  bool realized = true;
  t6.for_each_element([&](Permutation const &x) {
    realized = realized && lift(tau.apply(x)) == lift(x).conjugated_by(tau_hat);
  });
  if (!realized || !(tau_hat * tau_hat).is_identity())
    throw StructureError("automorphism fixture is not realized on the 12-point action");

  PermGroup t = lift_group(t6);
  PermGroup a = lift_group(a6);
  PermGroup b = lift_group(b6);
  std::size_t const degree = 48;
  std::vector<PermGroup> factors;
  for (std::size_t i = 0; i < 4; ++i)
    factors.push_back(on_segment(t, i, 4));
  PermGroup m = combine(degree, factors);
  PermGroup k1 = combine(degree, {on_segment(a, 0, 4), on_segment(b, 1, 4),
                                  diagonal_on(t, 2, 3, 4)});
  PermGroup k2 = combine(degree, {diagonal_on(t, 0, 1, 4), on_segment(a, 2, 4),
                                  on_segment(b, 3, 4)});

  // (t1, t2)^x = (t2^tau, t1^tau) on a pair of segments.
  auto twisted_swap = [&](std::size_t s1, std::size_t s2) {
    std::vector<Point> images(degree);
    for (Point p = 0; p < degree; ++p)
      images[p] = p;
    for (Point p = 0; p < 12; ++p) {
      images[s1 * 12 + p] = static_cast<Point>(s2 * 12 + tau_hat[p]);
      images[s2 * 12 + p] = static_cast<Point>(s1 * 12 + tau_hat[p]);
    }
    return Permutation(std::move(images));
  };
  Permutation x1 = twisted_swap(0, 1);
  Permutation x2 = twisted_swap(2, 3);
  Permutation pairs = segment_permutation(Permutation::from_cycles(4, {{0, 2}, {1, 3}}), 12);

  std::vector<Permutation> gens = m.generators();
  gens.insert(gens.end(), {x1, pairs});
  PermGroup g(degree, gens, ChainOptions{m.order() * 8, {}});
  PermGroup stabilizer = subgroup_intersection(k1, k2);
  std::vector<Permutation> local = stabilizer.generators();
  local.insert(local.end(), {x1, x2, pairs});
  PermGroup g_omega = PermGroup::from_redundant_generators(
      degree, local, ChainOptions{stabilizer.order() * 8, {}});

  Instance out{"ex63",
               "(T^2 : S2) wr S2 for T = A6 with the twisted swap, K1 = AxBxD(TxT), "
               "K2 = D(TxT)xAxB",
               g};
  out.plinth = m;
  out.system = CartesianSystem{m, std::nullopt, stabilizer, {k1, k2}};
  out.g_omega = g_omega;
  out.factorization = DirectFactorization(m, factors);
  BigInt omega_size = m.order() / stabilizer.order();
  if (omega_size <= options.max_degree)
    out.points = point_level(g, m, g_omega, *out.system, options);
  auto &x = out.expected;
  x.group_order = m.order() * 8;
  x.plinth_order = m.order();
  x.degree = static_cast<std::size_t>(omega_size);
  x.subgroup_orders = {1296000, 1296000};
  x.stabilizer_order = 100;
  x.normal = false;
  x.factor_set_size = 1;
  x.diagonal_pair_count = 2;
  x.homogeneous = true;
  x.g_transitive = true;
  return out;
}

std::vector<std::string> catalog_names() {
  return {"grid_2x3", "wreath_product_action", "a6_on_36", "a6_on_36_pgammal", "ex61",
          "ex62",     "ex63",                  "ex64",     "ex65",             "companion_normal"};
}

Instance build_instance(std::string const &name, BuildOptions const &options) {
  PermGroup a5 = alternating_group(5);
  PermGroup a4 = point_stabilizer(a5, 4);
  PermGroup c5 = cyclic_group(5);
  if (name == "grid_2x3")
    return build_grid_2x3();
  if (name == "wreath_product_action")
    return build_wreath_product_action(5, 2, options);
  if (name == "a6_on_36")
    return build_a6_on_36(false, options);
  if (name == "a6_on_36_pgammal")
    return build_a6_on_36(true, options);
  if (name == "ex63")
    return build_ex63(options);
  if (name == "ex61")
    return build_ex61(a5, options);
  if (name == "ex62")
    return build_ex62(a5, a4, options);
  if (name == "ex64")
    return build_ex64(a5, a4, c5, options);
  if (name == "companion_normal")
    return build_companion_normal(a5, {a4, c5}, options);
  if (name == "ex65")
    throw InputError("ex65 has no default parameters; supply T, A, B, C");
  throw InputError("unknown catalog instance '" + name + "'");
}

Instance build_instance(std::string const &name, FactorParams const &params,
                        BuildOptions const &options) {
  auto const &s = params.subgroups;
  auto need = [&](std::size_t count) {
    if (s.size() != count)
      throw InputError(name + " needs " + std::to_string(count) + " subgroups of T, got " +
                       std::to_string(s.size()));
  };
  if (name == "ex61") {
    need(0);
    return build_ex61(params.t, options);
  }
  if (name == "ex62") {
    need(1);
    return build_ex62(params.t, s[0], options);
  }
  if (name == "ex64") {
    need(2);
    return build_ex64(params.t, s[0], s[1], options);
  }
  if (name == "ex65") {
    need(3);
    return build_ex65(params.t, s[0], s[1], s[2], options);
  }
  if (name == "companion_normal")
    return build_companion_normal(params.t, s, options);
  throw InputError("catalog instance '" + name + "' takes no parameters");
}

namespace {

std::string show(bool b) { return b ? "true" : "false"; }
std::string show(BigInt const &x) { return x.str(); }
std::string show(std::size_t x) { return std::to_string(x); }

std::string show(NormalWitness const &w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += i ? ",{" : "{";
    for (std::size_t j = 0; j < w[i].size(); ++j)
      out += (j ? "," : "") + std::to_string(w[i][j] + 1);
    out += "}";
  }
  return out + "}";
}

std::set<std::vector<std::size_t>> as_set(NormalWitness const &w) {
  return {w.begin(), w.end()};
}

} // namespace

std::vector<std::string> validate_instance(Instance const &instance) {
  std::vector<std::string> diffs;
  auto const &x = instance.expected;
  auto compare = [&](std::string const &field, auto const &expected, auto const &actual) {
    if (expected && !(*expected == actual))
      diffs.push_back(field + ": expected " + show(*expected) + ", got " + show(actual));
  };

  compare("group_order", x.group_order, instance.group.order());
  if (instance.plinth)
    compare("plinth_order", x.plinth_order, instance.plinth->order());
  if (x.innately_transitive)
    compare("innately_transitive", x.innately_transitive,
            is_innately_transitive(instance.group));

  if (instance.system) {
    auto const &s = *instance.system;
    if (!verify_cartesian_system(s, instance.g_omega).passed())
      diffs.push_back("system: fails the Cartesian system conditions");
    std::vector<BigInt> orders;
    for (auto const &k : s.subgroups)
      orders.push_back(k.order());
    if (!x.subgroup_orders.empty()) {
      auto want = x.subgroup_orders;
      std::sort(want.begin(), want.end());
      std::sort(orders.begin(), orders.end());
      if (want != orders)
        diffs.push_back("subgroup_orders: recomputed orders differ");
    }
    compare("stabilizer_order", x.stabilizer_order, s.stabilizer.order());
    BigInt omega_size = s.plinth.order() / s.stabilizer.order();
    if (x.degree && BigInt(*x.degree) != omega_size)
      diffs.push_back("degree: expected " + show(*x.degree) + ", got " + omega_size.str());
  }

  if (instance.points) {
    auto const &p = *instance.points;
    auto const &e = p.decomposition;
    compare("degree", x.degree, e.degree());
    compare("homogeneous", x.homogeneous, e.is_homogeneous());
    auto symmetry = decomposition_symmetry(p.group, e);
    compare("invariant", x.invariant, symmetry.invariant);
    compare("g_transitive", x.g_transitive, symmetry.transitive);
    if (!is_cartesian_by_counting(e.partitions()))
      diffs.push_back("decomposition: some intersection does not have exactly one point");
    if (p.plinth) {
      for (auto const &part : e.partitions()) {
        if (!is_invariant_partition(*p.plinth, part))
          diffs.push_back("decomposition: a partition is not plinth-invariant");
      }
    }
    if (p.system) {
      if (!(decomposition_from_system(*p.system) == e))
        diffs.push_back("round trip: system does not give back the decomposition");
      auto again = system_from_decomposition(*p.plinth, e, p.omega);
      if (!same_subgroup_set(again.subgroups, p.system->subgroups))
        diffs.push_back("round trip: decomposition does not give back the system");
    }
    if (instance.ambient)
      compare("ambient_stabilizer_order", x.ambient_stabilizer_order,
              decomposition_stabilizer_bruteforce(*instance.ambient, e).order());
  }

  bool wants_report = x.normal || x.normal_cells || x.factor_set_size ||
                      x.diagonal_pair_count || x.smf;
  if (wants_report && instance.system && instance.plinth) {
    ClassifyOptions options;
    options.factorization = instance.factorization;
    auto report = classify_system(instance.group, *instance.system, instance.g_omega, options);
    compare("normal", x.normal, report.normal_cells.has_value());
    if (x.normal_cells) {
      if (!report.normal_cells || as_set(*report.normal_cells) != as_set(*x.normal_cells))
        diffs.push_back("normal_cells: expected " + show(*x.normal_cells) + ", got " +
                        (report.normal_cells ? show(*report.normal_cells) : "none"));
    }
    compare("factor_set_size", x.factor_set_size, report.factor_set_size);
    compare("diagonal_pair_count", x.diagonal_pair_count, report.diagonal_pairs.size());
    compare("smf", x.smf, report.smf_detected);
    if (!instance.points) {
      if (report.homogeneous)
        compare("homogeneous", x.homogeneous, *report.homogeneous);
      if (report.g_transitive)
        compare("g_transitive", x.g_transitive, *report.g_transitive);
    }
  }
  return diffs;
}

} // namespace cartdec
