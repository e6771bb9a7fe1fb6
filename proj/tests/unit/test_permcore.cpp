#include <doctest.h>

#include <random>

#include "cartdec/actions.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "fixtures.hpp"

using namespace cartdec;
using fixtures::alternating;
using fixtures::cyc;
using fixtures::symmetric;

TEST_CASE("cycles build permutations") {
  auto p = cyc(6, {{0, 1, 2}});
  CHECK(std::vector<Point>(p.images().begin(), p.images().end()) ==
        std::vector<Point>{1, 2, 0, 3, 4, 5});
  CHECK(cyc(6, {}).is_identity());
  auto d = cyc(4, {{0, 1}, {2, 3}});
  CHECK(d[0] == 1);
  CHECK(d[3] == 2);
  CHECK_THROWS_AS(cyc(4, {{0, 4}}), InputError);
  CHECK_THROWS_AS(cyc(4, {{0, 1}, {1, 2}}), InputError);
}

TEST_CASE("right action composition") {
  auto p = cyc(3, {{0, 1}});
  auto q = cyc(3, {{1, 2}});
  auto pq = p * q;
  // 0 -> 1 under p, then 1 -> 2 under q.
  CHECK(pq[0] == 2);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.conjugated_by(q) == q.inverse() * p * q);
}

TEST_CASE("cycle text round trip") {
  auto p = parse_cycles(7, "(1,2,3)(5,7)");
  CHECK(to_cycle_string(p) == "(1,2,3)(5,7)");
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK_THROWS_AS(parse_cycles(3, "(1,4)"), InputError);
}

TEST_CASE("group orders") {
  PermGroup a5(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  CHECK(a5.order() == 60);
  CHECK(fixtures::brute_force_order(a5) == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(fixtures::brute_force_order(alternating(6)) == 360);
  CHECK(PermGroup(3, {}).order() == 1);
  CHECK(symmetric(7).order() == 5040);
  CHECK_THROWS_AS(PermGroup(4, {cyc(5, {{0, 1}})}), InputError);
}

TEST_CASE("membership") {
  auto a5 = alternating(5);
  CHECK_FALSE(a5.contains(cyc(5, {{0, 1}})));
  CHECK(a5.contains(Permutation(5)));
  CHECK(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  CHECK_THROWS_AS(a5.contains(Permutation(6)), InputError);
}

TEST_CASE("chain invariants on random products") {
  std::mt19937_64 rng(7);
  for (auto const &g : {alternating(7), symmetric(6),
                        wreath_product_product_action(symmetric(4), 2, symmetric(2))}) {
    for (int k = 0; k < 20; ++k) {
      auto const &gens = g.generators();
      Permutation x = gens[rng() % gens.size()] * gens[rng() % gens.size()] *
                      gens[rng() % gens.size()];
      CHECK(g.contains(x));
      CHECK(g.contains(g.random_element(rng)));
    }
  }
}

TEST_CASE("element enumeration") {
  CHECK(PermGroup::trivial(4).elements().size() == 1);
  CHECK(symmetric(3).elements().size() == 6);
  auto all = symmetric(6).elements();
  CHECK(all.size() == 720);
  CHECK(std::unordered_set<Permutation>(all.begin(), all.end()).size() == 720);
  CHECK_THROWS_AS(symmetric(6).elements(100), CapExceeded);
}

TEST_CASE("wreath product in product action") {
  auto w = wreath_product_product_action(symmetric(5), 2, symmetric(2));
  CHECK(w.degree() == 25);
  CHECK(w.order() == 28800);
  CHECK(w.is_transitive());
  CHECK(wreath_product_product_action(alternating(5), 1, PermGroup::trivial(1))
            .same_group(alternating(5)));
  // The displayed formula: (g1, g2)^h with h the swap moves coordinates.
  auto swap = position_permutation(cyc(2, {{0, 1}}), 5);
  CHECK(swap[encode_tuple({1, 3}, 5)] == encode_tuple({3, 1}, 5));
  auto x = coordinate_permutation(cyc(5, {{0, 1, 2}}), 1, 2);
  CHECK(x[encode_tuple({4, 0}, 5)] == encode_tuple({4, 1}, 5));
}

TEST_CASE("orbits and stabilizers") {
  auto prod = wreath_product_product_action(alternating(5), 2, PermGroup::trivial(2));
  CHECK(prod.order() == 3600);
  Point diag = encode_tuple({2, 2}, 5);
  auto stab = point_stabilizer(prod, diag);
  CHECK(stab.order() == 144);
  for (auto const &s : stab.generators())
    CHECK(s[diag] == diag);
  CHECK(PermGroup::trivial(5).orbit(3) == std::vector<Point>{3});

  auto regular = fixtures::cyclic(7);
  CHECK(point_stabilizer(regular, 3).is_trivial());

  for (auto const &g : {alternating(6), symmetric(5), prod}) {
    for (Point p = 0; p < g.degree(); ++p)
      CHECK(point_stabilizer(g, p).order() * g.orbit(p).size() == g.order());
  }
}

TEST_CASE("conjugates and intersections") {
  auto a6 = alternating(6);
  auto a5 = point_stabilizer(a6, 5);
  CHECK(a5.order() == 60);
  CHECK(conjugate_subgroup(a5, Permutation(6)).same_group(a5));
  auto moved = conjugate_subgroup(a5, cyc(6, {{0, 5, 1}}));
  CHECK(moved.order() == 60);
  CHECK(moved.orbit(0).size() == 5);
  auto both = subgroup_intersection(a5, moved);
  CHECK(both.order() == 12);
  CHECK(subgroup_intersection(a5, a5).same_group(a5));

  // A4 x C5 pattern against C5 x A4 pattern inside A5^2.
  auto m = direct_product_action({alternating(5), alternating(5)});
  auto a4 = point_stabilizer(alternating(5), 4);
  auto c5 = fixtures::cyclic(5);
  std::vector<Permutation> g1, g2;
  for (auto const &x : a4.generators()) {
    g1.push_back(m.embed(0, x));
    g2.push_back(m.embed(1, x));
  }
  g1.push_back(m.embed(1, c5.generators().front()));
  g2.push_back(m.embed(0, c5.generators().front()));
  PermGroup p1(10, g1), p2(10, g2);
  CHECK(p1.order() == 60);
  CHECK(subgroup_intersection(p1, p2).is_trivial());
}

TEST_CASE("product covers agrees with set products") {
  auto a5 = alternating(5);
  auto a4 = point_stabilizer(a5, 4);
  auto c5 = fixtures::cyclic(5);
  CHECK(product_covers(a5, a4, {c5}));
  CHECK_FALSE(product_covers(a5, a4, {a4}));
  CHECK(product_covers(a5, a5, {a4}));
  // Three factors go through enumeration.
  CHECK(product_covers(a5, a4, {c5, a4}));
  CHECK_FALSE(product_covers(a5, PermGroup::trivial(5), {a4, a4}));
}

TEST_CASE("normal closure and minimal normal subgroups") {
  auto grid = PermGroup(6, {cyc(6, {{0, 3}, {1, 4}, {2, 5}}), cyc(6, {{0, 1, 2}, {3, 4, 5}}),
                            cyc(6, {{0, 1}, {3, 4}})});
  CHECK(grid.order() == 12);
  CHECK(normal_closure(grid, {Permutation(6)}).is_trivial());
  CHECK(normal_closure(grid, {cyc(6, {{0, 1, 2}, {3, 4, 5}})}).order() == 3);
  auto mins = minimal_normal_subgroups(grid);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].order() == 2);
  CHECK(mins[1].order() == 3);
  CHECK_FALSE(mins[0].is_transitive());
  CHECK_FALSE(mins[1].is_transitive());

  auto w = wreath_product_product_action(alternating(5), 2, symmetric(2));
  CHECK(w.order() == 7200);
  auto wm = minimal_normal_subgroups(w);
  REQUIRE(wm.size() == 1);
  CHECK(wm[0].order() == 3600);
  auto first = coordinate_permutation(cyc(5, {{0, 1, 2}}), 0, 2);
  CHECK(normal_closure(w, {first}).order() == 3600);
  for (auto const &n : wm)
    CHECK(is_normal_subgroup(w, n));

  auto a5 = alternating(5);
  auto simple = minimal_normal_subgroups(a5);
  REQUIRE(simple.size() == 1);
  CHECK(simple[0].same_group(a5));
}

TEST_CASE("coset action of A6 on a D10") {
  auto a6 = alternating(6);
  PermGroup d10(6, {cyc(6, {{0, 1, 2, 3, 4}}), cyc(6, {{1, 4}, {2, 3}})});
  CHECK(d10.order() == 10);
  auto act = coset_action(a6, d10);
  CHECK(act.target_degree() == 36);
  CHECK(act.image().order() == 360);
  CHECK(act.is_faithful());
  CHECK(act.image().orbit(0).size() == 36);
  auto stab = point_stabilizer(act.image(), 0);
  CHECK(stab.order() == 10);
  CHECK(stab.same_group(act.image_of(d10)));
  for (auto const &x : d10.elements())
    CHECK(stab.contains(act.image_of(x)));

  CHECK(coset_action(a6, a6).target_degree() == 1);
  CHECK_THROWS_AS(coset_action(a6, PermGroup::trivial(6), {.max_degree = 100}), CapExceeded);
}

TEST_CASE("direct products") {
  auto d = direct_product_action({alternating(5), alternating(5)});
  CHECK(d.group.degree() == 10);
  CHECK(d.group.order() == 3600);
  CHECK_FALSE(d.group.is_transitive());
  auto four = direct_product_action(std::vector<PermGroup>(4, alternating(6)));
  CHECK(four.group.degree() == 24);
  CHECK(four.group.order() == BigInt(360) * 360 * 360 * 360);
  CHECK(direct_product_action({alternating(5)}).group.same_group(alternating(5)));
}

TEST_CASE("regular coset action of A5 squared") {
  auto m = direct_product_action({alternating(5), alternating(5)});
  auto act = coset_action(m.group, PermGroup::trivial(10), {.faithful = true});
  CHECK(act.target_degree() == 3600);
  CHECK(act.image().order() == 3600);
  CHECK(point_stabilizer(act.image(), 0).is_trivial());
}
