#include <doctest.h>

#include <algorithm>

#include "cartdec/actions.hpp"
#include "cartdec/blocks.hpp"
#include "cartdec/cartesian.hpp"
#include "cartdec/catalog.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/io.hpp"
#include "cartdec/standard_groups.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace cartdec;
using fixtures::alternating;
using fixtures::cyc;

namespace {

Partition grid_rows() { return Partition(6, {{0, 1, 2}, {3, 4, 5}}); }
Partition grid_columns() { return Partition(6, {{0, 3}, {1, 4}, {2, 5}}); }

Identification grid_identification(bool transposed) {
  Identification phi;
  phi.factor_sizes = transposed ? std::vector<std::size_t>{3, 2} : std::vector<std::size_t>{2, 3};
  for (Point p = 0; p < 6; ++p) {
    if (transposed)
      phi.table.push_back({p % 3, p / 3});
    else
      phi.table.push_back({p / 3, p % 3});
  }
  return phi;
}

PermGroup group_file(std::string const &name) {
  return parse_group(read_text_file(std::string(CARTDEC_CORPUS_DIR "/") + name + ".txt"));
}

} // namespace

TEST_CASE("decomposition predicate") {
  CHECK(is_cartesian_decomposition({grid_rows(), grid_columns()}));
  CHECK(is_cartesian_decomposition({Partition::singletons(6)}));
  CHECK_FALSE(is_cartesian_decomposition({grid_rows(), grid_rows()}));
  CHECK_FALSE(is_cartesian_decomposition({grid_rows(), Partition(6, {{0, 1}, {2, 3}, {4, 5}})}));
  CHECK_THROWS_AS(is_cartesian_decomposition({grid_rows(), Partition::singletons(4)}),
                  InputError);
  CHECK_THROWS_AS(CartesianDecomposition({grid_rows(), grid_rows()}), StructureError);
}

TEST_CASE("predicate agrees with intersection counting") {
  // Every pair and triple of invariant partitions of a few regular groups.
  for (auto const &name : {"c2cubed_regular", "c12_regular", "s3_regular", "c3sq_inv_on_9"}) {
    PermGroup g = group_file(name);
    auto parts = all_invariant_partitions(g, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        CHECK(is_cartesian_decomposition({parts[i], parts[j]}) ==
              is_cartesian_by_counting({parts[i], parts[j]}));
        for (std::size_t k = j + 1; k < parts.size(); ++k)
          CHECK(is_cartesian_decomposition({parts[i], parts[j], parts[k]}) ==
                is_cartesian_by_counting({parts[i], parts[j], parts[k]}));
      }
    }
  }
}

TEST_CASE("coordinates and identifications") {
  CartesianDecomposition e({grid_rows(), grid_columns()});
  Identification psi = coordinates(e);
  CHECK(psi.degree() == 6);
  CHECK(decomposition_from_identification(psi) == e);
  CHECK(decomposition_from_identification(grid_identification(false)) == e);

  CartesianDecomposition single({Partition::singletons(5)});
  Identification id = coordinates(single);
  CHECK(id.factor_sizes == std::vector<std::size_t>{5});
  CHECK(decomposition_from_identification(id) == single);

  // Coordinates of the product action are the mixed-radix digits.
  Identification phi;
  phi.factor_sizes = {5, 5};
  for (Point p = 0; p < 25; ++p)
    phi.table.push_back(decode_tuple(p, 5, 2));
  CartesianDecomposition coords = decomposition_from_identification(phi);
  CHECK(coords.arity() == 2);
  CHECK(coords.is_homogeneous());
  CHECK(decomposition_from_identification(coordinates(coords)) == coords);

  Identification broken = grid_identification(false);
  broken.table[5] = broken.table[4];
  CHECK_THROWS_AS(decomposition_from_identification(broken), InputError);
}

TEST_CASE("equivalent identifications") {
  Identification phi = grid_identification(false);
  Identification renamed = phi;
  for (auto &t : renamed.table)
    t[1] = (t[1] + 1) % 3;
  CHECK(identifications_equivalent(phi, renamed));
  CHECK(identifications_equivalent(phi, grid_identification(true)));

  Identification swapped;
  swapped.factor_sizes = {5, 5};
  Identification straight = swapped;
  for (Point p = 0; p < 25; ++p) {
    straight.table.push_back({p / 5, p % 5});
    swapped.table.push_back({p % 5, p / 5});
  }
  CHECK(identifications_equivalent(straight, swapped));

  Identification flat;
  flat.factor_sizes = {6};
  for (Point p = 0; p < 6; ++p)
    flat.table.push_back({p});
  CHECK_FALSE(identifications_equivalent(phi, flat));
}

TEST_CASE("symmetry and homogeneity") {
  Instance grid = build_grid_2x3();
  auto s = decomposition_symmetry(grid.group, grid.points->decomposition);
  CHECK(s.invariant);
  CHECK_FALSE(s.transitive);
  CHECK_FALSE(grid.points->decomposition.is_homogeneous());

  Instance w = build_wreath_product_action(5, 2);
  auto t = decomposition_symmetry(w.group, w.points->decomposition);
  CHECK(t.invariant);
  CHECK(t.transitive);
  CHECK(w.points->decomposition.is_homogeneous());
  PermGroup base = wreath_product_product_action(symmetric_group(5), 2, PermGroup::trivial(2));
  auto u = decomposition_symmetry(base, w.points->decomposition);
  CHECK(u.invariant);
  CHECK_FALSE(u.transitive);

  CHECK(CartesianDecomposition({Partition::singletons(4)}).is_homogeneous());
}

TEST_CASE("systems from decompositions") {
  Instance a6 = build_a6_on_36();
  PermGroup const &m = *a6.points->plinth;
  CartesianSystem s = system_from_decomposition(m, a6.points->decomposition, 0);
  REQUIRE(s.subgroups.size() == 2);
  CHECK(s.subgroups[0].order() == 60);
  CHECK(s.subgroups[1].order() == 60);
  CHECK(subgroup_intersection(s.subgroups[0], s.subgroups[1]).order() == 10);
  CHECK(s.stabilizer.order() == 10);

  Instance w = build_wreath_product_action(5, 2);
  CartesianSystem ws = *w.points->system;
  for (auto const &k : ws.subgroups)
    CHECK(k.order() == 720);
  // K_i = (M_i)_gamma x M_j, built coordinate by coordinate.
  PermGroup a5 = alternating(5);
  PermGroup a4 = point_stabilizer(a5, 0);
  std::vector<PermGroup> pattern;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Permutation> gens;
    for (auto const &g : a4.generators())
      gens.push_back(coordinate_permutation(g, i, 2));
    for (auto const &g : a5.generators())
      gens.push_back(coordinate_permutation(g, 1 - i, 2));
    pattern.emplace_back(25, gens);
  }
  CHECK(same_subgroup_set(ws.subgroups, pattern));

  // The one-partition decomposition {singletons} corresponds to {M_omega}.
  CartesianSystem single =
      system_from_decomposition(m, CartesianDecomposition({Partition::singletons(36)}), 0);
  REQUIRE(single.subgroups.size() == 1);
  CHECK(single.subgroups[0].same_group(point_stabilizer(m, 0)));
  CHECK(decomposition_from_system(single).partitions().front() == Partition::singletons(36));

  Instance grid = build_grid_2x3();
  CHECK_THROWS_AS(system_from_decomposition(alternating(6), grid.points->decomposition, 0),
                  StructureError);
}

TEST_CASE("decompositions from systems") {
  Instance a6 = build_a6_on_36();
  CartesianDecomposition e = decomposition_from_system(*a6.points->system);
  CHECK(e == a6.points->decomposition);
  CHECK(e.part_counts() == std::vector<std::size_t>{6, 6});

  Instance ex64 = build_instance("ex64");
  REQUIRE(ex64.points);
  CartesianDecomposition e64 = decomposition_from_system(*ex64.points->system);
  CHECK(e64.degree() == 3600);
  CHECK(e64.part_counts() == std::vector<std::size_t>{60, 60});
  for (auto const &p : e64.partitions())
    CHECK(p.parts().front().size() == 60);

  CartesianSystem no_omega = *a6.system;
  no_omega.omega.reset();
  CHECK_THROWS_AS(decomposition_from_system(no_omega), InputError);
}

TEST_CASE("system verification") {
  Instance a6 = build_a6_on_36();
  auto report = verify_cartesian_system(*a6.points->system, point_stabilizer(a6.group, 0));
  CHECK(report.cs1);
  CHECK(report.cs2 == std::vector<bool>{true, true});
  CHECK(report.gomega_closed == true);
  CHECK(report.passed());

  CartesianSystem doubled = *a6.points->system;
  doubled.subgroups[1] = doubled.subgroups[0];
  auto bad = verify_cartesian_system(doubled);
  CHECK_FALSE(bad.passed());
  CHECK(bad.cs2 == std::vector<bool>{false, false});
  CHECK_FALSE(bad.gomega_closed.has_value());

  Instance ex61 = build_instance("ex61");
  auto const &ks = ex61.system->subgroups;
  CHECK(ks[0].order() == 216000);
  CHECK(ex61.system->stabilizer.order() == 3600);
  CHECK(ks[0].order() * ks[1].order() == ex61.system->stabilizer.order() * ex61.plinth->order());
  CHECK(verify_cartesian_system(*ex61.system, ex61.g_omega).passed());

  CartesianSystem foreign = *a6.points->system;
  foreign.subgroups[0] = PermGroup(36, {cyc(36, {{0, 1}})});
  CHECK_THROWS_AS(verify_cartesian_system(foreign), InputError);
}

TEST_CASE("translation compatibility") {
  for (bool extended : {false, true}) {
    Instance a6 = build_a6_on_36(extended);
    auto const &p = *a6.points;
    for (auto const &g : p.group.generators()) {
      Point moved = g[p.omega];
      CartesianSystem there = system_from_decomposition(*p.plinth, p.decomposition, moved);
      std::vector<PermGroup> conjugates;
      for (auto const &k : p.system->subgroups)
        conjugates.push_back(conjugate_subgroup(k, g));
      CHECK(same_subgroup_set(there.subgroups, conjugates));
    }
  }
}

TEST_CASE("search for invariant decompositions") {
  Instance a6 = build_a6_on_36();
  auto found = find_invariant_decompositions(a6.group, *a6.plinth, 0);
  REQUIRE(found.size() == 1);
  CHECK(found[0].part_counts() == std::vector<std::size_t>{6, 6});
  CHECK(found[0] == a6.points->decomposition);

  PermGroup a6_natural = alternating(6);
  CHECK(find_invariant_decompositions(a6_natural, a6_natural, 0).empty());

  PermGroup a5 = alternating(5);
  PermGroup w = wreath_product_product_action(a5, 2, symmetric_group(2));
  PermGroup base = wreath_product_product_action(a5, 2, PermGroup::trivial(2));
  auto wd = find_invariant_decompositions(w, base, 0);
  Instance coords = build_wreath_product_action(5, 2);
  CHECK(std::find(wd.begin(), wd.end(), coords.points->decomposition) != wd.end());
  CHECK(wd == oracle_invariant_decompositions(w, base));
  for (auto const &e : wd)
    CHECK(decomposition_symmetry(w, e).invariant);

  PermGroup intransitive(6, {cyc(6, {{0, 1, 2}})});
  CHECK_THROWS_AS(find_invariant_decompositions(intransitive, intransitive, 0), InputError);
  // A transitive subgroup that is not normal.
  PermGroup psl25 = group_file("a5_on_6");
  CHECK_THROWS_AS(find_invariant_decompositions(fixtures::symmetric(6), psl25, 0), InputError);
}

TEST_CASE("search caps") {
  PermGroup c2cubed = group_file("c2cubed_regular");
  CHECK(find_invariant_decompositions(c2cubed, c2cubed, 0).size() == 56);
  SearchCaps tight;
  tight.max_partitions = 5;
  CHECK_THROWS_AS(find_invariant_decompositions(c2cubed, c2cubed, 0, tight), CapExceeded);
  SearchCaps few_orbits;
  few_orbits.max_orbits = 3;
  CHECK_THROWS_AS(find_invariant_decompositions(c2cubed, c2cubed, 0, few_orbits), CapExceeded);
  SearchCaps short_ell;
  short_ell.max_ell = 2;
  CHECK_THROWS_AS(find_invariant_decompositions(c2cubed, c2cubed, 0, short_ell), CapExceeded);
  SearchCaps few_combinations;
  few_combinations.max_combinations = 10;
  CHECK_THROWS_AS(find_invariant_decompositions(c2cubed, c2cubed, 0, few_combinations),
                  CapExceeded);
}

TEST_CASE("search agrees with the oracle on the corpus") {
  for (auto const &name : {"s3wr2_on_9", "c3sq_c4_on_9", "c3sq_inv_on_9", "c2cubed_regular",
                           "a4xc3_on_12", "s3xs4_on_12", "c12_regular", "agl23_on_9"}) {
    CAPTURE(name);
    PermGroup g = group_file(name);
    auto ps = plinths(g);
    PermGroup m = ps.empty() ? g : ps.front();
    CHECK(find_invariant_decompositions(g, m, 0) == oracle_invariant_decompositions(g, m));
  }
  PermGroup s3wr2 = group_file("s3wr2_on_9");
  CHECK(find_invariant_decompositions(s3wr2, plinths(s3wr2).front(), 0).size() == 2);
}

TEST_CASE("brute-force decomposition stabilizers") {
  Instance grid = build_grid_2x3();
  CHECK(decomposition_stabilizer_bruteforce(symmetric_group(6), grid.points->decomposition)
            .order() == 12);
  CHECK(decomposition_stabilizer_bruteforce(PermGroup::trivial(6), grid.points->decomposition)
            .order() == 1);
  CartesianDecomposition square({Partition(4, {{0, 1}, {2, 3}}), Partition(4, {{0, 2}, {1, 3}})});
  CHECK(decomposition_stabilizer_bruteforce(symmetric_group(4), square).order() == 8);
  CHECK_THROWS_AS(decomposition_stabilizer_bruteforce(symmetric_group(6),
                                                      grid.points->decomposition, 100),
                  CapExceeded);
}

TEST_CASE("decomposition properties across the corpus") {
  properties::Log log;
  for (auto const &name : {"s3wr2_on_9", "c3sq_c4_on_9", "c2cubed_regular", "a4xc3_on_12"}) {
    PermGroup g = group_file(name);
    auto ps = plinths(g);
    PermGroup m = ps.empty() ? g : ps.front();
    for (auto const &e : find_invariant_decompositions(g, m, 0))
      properties::check_decomposition(log, name, g, m, e);
  }
  CHECK(log.checks > 0);
  CHECK(log.violations.empty());
}
