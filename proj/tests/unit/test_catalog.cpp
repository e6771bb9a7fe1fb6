#include <doctest.h>

#include "cartdec/catalog.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/standard_groups.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace cartdec;
using fixtures::alternating;
using fixtures::cyc;

TEST_CASE("every named instance validates") {
  for (auto const &name : catalog_names()) {
    if (name == "ex65")
      continue;
    CAPTURE(name);
    Instance instance = build_instance(name);
    auto diffs = validate_instance(instance);
    CHECK(diffs.empty());
    for (auto const &d : diffs)
      MESSAGE(d);
  }
}

TEST_CASE("validation reports tampered values") {
  Instance grid = build_grid_2x3();
  grid.expected.group_order = 13;
  auto diffs = validate_instance(grid);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].find("group_order") == 0);

  Instance ex62 = build_instance("ex62");
  ex62.expected.factor_set_size = 2;
  ex62.expected.normal = false;
  CHECK(validate_instance(ex62).size() == 2);
}

TEST_CASE("example values") {
  Instance grid = build_grid_2x3();
  CHECK(grid.group.order() == 12);
  CHECK(grid.points->decomposition.degree() == 6);

  Instance ex62 = build_instance("ex62");
  CHECK(ex62.points->decomposition.degree() == 25);

  Instance ex61 = build_instance("ex61");
  CHECK(ex61.points->decomposition.degree() == 3600);
  CHECK(ex61.system->stabilizer.order() == 3600);

  Instance ex63 = build_instance("ex63");
  CHECK_FALSE(ex63.points);
  CHECK(ex63.system->subgroups[0].order() == 1296000);
  CHECK(ex63.system->stabilizer.order() == 100);
  CHECK(ex63.group.order() == BigInt(360) * 360 * 360 * 360 * 8);
}

TEST_CASE("ex64 and its companion share the action") {
  Instance ex64 = build_instance("ex64");
  Instance companion = build_instance("companion_normal");
  CHECK(ex64.group.same_group(companion.group));
  CHECK(ex64.g_omega->same_group(*companion.g_omega));
  CHECK(ex64.points->decomposition.degree() == 3600);
  CHECK(companion.points->decomposition.degree() == 3600);
  CHECK_FALSE(same_subgroup_set(ex64.system->subgroups, companion.system->subgroups));
  CHECK(verify_cartesian_system(*ex64.system, ex64.g_omega).passed());
  CHECK(verify_cartesian_system(*companion.system, companion.g_omega).passed());
  // Regular: the point stabilizer in the plinth is trivial.
  CHECK(ex64.points->system->stabilizer.order() == 1);
}

TEST_CASE("parameterised constructors") {
  PermGroup t = alternating(5);
  PermGroup a4 = point_stabilizer(t, 4);
  PermGroup c5 = fixtures::cyclic(5);
  Instance ex62 = build_instance("ex62", FactorParams{t, {a4}});
  CHECK(validate_instance(ex62).empty());
  PermGroup s3 = PermGroup(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}, {3, 4}})});
  Instance ex62b = build_instance("ex62", FactorParams{t, {s3}});
  CHECK(ex62b.points->decomposition.degree() == 100);
  CHECK(validate_instance(ex62b).empty());

  CHECK_THROWS_AS(build_instance("ex64", FactorParams{t, {a4, a4}}), InputError);
  CHECK_THROWS_AS(build_instance("ex64", FactorParams{t, {a4}}), InputError);
  CHECK_THROWS_AS(build_instance("ex62", FactorParams{t, {t}}), InputError);
  CHECK_THROWS_AS(build_instance("ex62", FactorParams{t, {PermGroup(5, {cyc(5, {{0, 1}})})}}),
                  InputError);
  CHECK_THROWS_AS(build_instance("ex65"), InputError);
  CHECK_THROWS_AS(build_instance("nope"), InputError);
  CHECK_THROWS_AS(build_instance("grid_2x3", FactorParams{t, {}}), InputError);
  Instance companion = build_instance("companion_normal", FactorParams{t, {a4, c5}});
  CHECK(validate_instance(companion).empty());
}

TEST_CASE("the A6 subgroups do not depend on the D10 chosen") {
  for (std::size_t which : {0, 1, 2}) {
    CAPTURE(which);
    A6Subgroups s = a6_on_36_subgroups(which);
    CHECK(s.d10.order() == 10);
    CHECK(s.natural_a5.order() == 60);
    CHECK(s.transitive_a5.order() == 60);
    CHECK_FALSE(s.natural_a5.is_transitive());
    CHECK(s.transitive_a5.is_transitive());
    CHECK(subgroup_intersection(s.natural_a5, s.transitive_a5).same_group(s.d10));
    CHECK(product_covers(s.a6, s.natural_a5, {s.transitive_a5}));
  }
}

TEST_CASE("the automorphism fixture") {
  AutomorphismTable tau = parse_automorphism_table(tau_fixture_text());
  CHECK(tau.group().order() == 360);
  TauCheck check = check_tau(tau);
  CHECK(check.automorphism);
  CHECK(check.involution);
  CHECK(check.swaps_classes);

  // An inner automorphism keeps the classes apart.
  Permutation g = cyc(6, {{0, 1, 2}});
  std::unordered_map<Permutation, Permutation> inner;
  tau.group().for_each_element(
      [&](Permutation const &x) { inner.emplace(x, x.conjugated_by(g)); });
  AutomorphismTable conj(tau.group(), inner);
  TauCheck c = check_tau(conj);
  CHECK(c.automorphism);
  CHECK_FALSE(c.involution);
  CHECK_FALSE(c.swaps_classes);

  // Breaking one entry breaks the homomorphism property.
  std::unordered_map<Permutation, Permutation> broken = inner;
  auto it = broken.begin();
  while (it->first.is_identity())
    ++it;
  it->second = Permutation(6);
  CHECK_FALSE(AutomorphismTable(tau.group(), broken).is_automorphism());

  CHECK_THROWS_AS(parse_automorphism_table("degree 6\nmap (1,2,3)\n"), InputError);
  CHECK_THROWS_AS(parse_automorphism_table("map (1,2,3) (1,2,3)\n"), InputError);
  CHECK_THROWS_AS(parse_automorphism_table(""), InputError);
}

TEST_CASE("instance properties") {
  properties::Log log;
  for (auto const &name : catalog_names()) {
    if (name != "ex65")
      properties::check_instance(log, build_instance(name));
  }
  CHECK(log.checks > 100);
  for (auto const &v : log.violations)
    MESSAGE(v);
  CHECK(log.violations.empty());
}
