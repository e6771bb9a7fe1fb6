#include <doctest.h>

#include <algorithm>
#include <functional>

#include "cartdec/actions.hpp"
#include "cartdec/blocks.hpp"
#include "cartdec/catalog.hpp"
#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/io.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace cartdec;
using fixtures::alternating;
using fixtures::cyc;

namespace {

PermGroup a5_squared_product() {
  return wreath_product_product_action(alternating(5), 2, PermGroup::trivial(2));
}

/// Every set partition of {0..n-1}, tested for invariance one by one.
std::vector<Partition> invariant_partitions_brute_force(PermGroup const &g) {
  std::size_t const n = g.degree();
  std::vector<Partition> out;
  std::vector<std::size_t> labels(n, 0);
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t x, std::size_t used) {
    if (x == n) {
      Partition p = Partition::from_labels(labels);
      if (is_invariant_partition(g, p))
        out.push_back(p);
      return;
    }
    for (std::size_t l = 0; l <= used && l < n; ++l) {
      labels[x] = l;
      assign(x + 1, std::max(used, l + 1));
    }
  };
  assign(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("invariant partitions") {
  Instance grid = build_grid_2x3();
  auto const &rows = grid.points->decomposition.partitions();
  for (auto const &p : rows)
    CHECK(is_invariant_partition(grid.group, p));
  CHECK(is_invariant_partition(alternating(6), Partition::singletons(6)));
  Partition pairs(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK_FALSE(is_invariant_partition(alternating(6), pairs));
}

TEST_CASE("minimal blocks") {
  Instance a6 = build_a6_on_36();
  PermGroup const &m = *a6.points->plinth;
  std::size_t sixes = 0;
  for (Point d = 1; d < 36; ++d) {
    auto block = minimal_block(m, 0, d);
    CHECK(std::find(block.begin(), block.end(), 0) != block.end());
    CHECK(std::find(block.begin(), block.end(), d) != block.end());
    sixes += block.size() == 6;
  }
  CHECK(sixes == 10);

  CHECK(minimal_block(alternating(6), 0, 3).size() == 6);

  PermGroup a5sq = a5_squared_product();
  // Points 0 and 1 share the second coordinate.
  auto row = minimal_block(a5sq, 0, 1);
  CHECK(row.size() == 5);
  for (auto p : row)
    CHECK(decode_tuple(p, 5, 2)[0] == 0);

  CHECK_THROWS_AS(minimal_block(alternating(6), 2, 2), InputError);
  PermGroup intransitive(6, {cyc(6, {{0, 1, 2}})});
  CHECK_THROWS_AS(minimal_block(intransitive, 0, 1), InputError);
}

TEST_CASE("all invariant partitions") {
  CHECK(all_invariant_partitions(alternating(6), 0).size() == 2);

  PermGroup a5sq = a5_squared_product();
  auto parts = all_invariant_partitions(a5sq, 0);
  std::size_t five_by_five = std::count_if(parts.begin(), parts.end(), [](Partition const &p) {
    return p.size() == 5;
  });
  CHECK(five_by_five == 2);

  Instance a6 = build_a6_on_36();
  auto a6_parts = all_invariant_partitions(*a6.points->plinth, 0);
  CHECK(a6_parts.size() == 4);
  CHECK(std::count_if(a6_parts.begin(), a6_parts.end(),
                      [](Partition const &p) { return p.size() == 6; }) == 2);

  PermGroup c2cubed = parse_group(read_text_file(CARTDEC_CORPUS_DIR "/c2cubed_regular.txt"));
  CHECK(all_invariant_partitions(c2cubed, 0).size() == 16);
  CHECK_THROWS_AS(all_invariant_partitions(c2cubed, 0, 5), CapExceeded);
}

TEST_CASE("join closure agrees with the set-partition oracle up to degree 8") {
  std::vector<std::string> files{"s4_natural",  "a4_natural",      "d8_square",
                                 "c5_regular",  "s3_regular",      "a5_on_6",
                                 "a6_natural",  "psl27_on_7",      "psl27_on_8",
                                 "agl18_on_8",  "c2cubed_regular", "c2cubed_c3_on_8"};
  for (auto const &f : files) {
    CAPTURE(f);
    PermGroup g = parse_group(read_text_file(CARTDEC_CORPUS_DIR "/" + f + ".txt"));
    auto oracle = invariant_partitions_brute_force(g);
    CHECK(all_invariant_partitions(g, 0) == oracle);
    CHECK(invariant_partitions_by_subsets(g) == oracle);
  }
}

TEST_CASE("partition stabilizers") {
  Instance a6 = build_a6_on_36();
  PermGroup const &m = *a6.points->plinth;
  for (auto const &p : a6.points->decomposition.partitions())
    CHECK(partition_stabilizer(m, p, 0).order() == 60);
  CHECK(partition_stabilizer(m, Partition::singletons(36), 0).same_group(point_stabilizer(m, 0)));

  PermGroup a5sq = a5_squared_product();
  Partition rows = minimal_block_system(a5sq, {0, 1});
  CHECK(partition_stabilizer(a5sq, rows, 0).order() == 720);

  Partition pairs(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK_THROWS_AS(partition_stabilizer(alternating(6), pairs, 0), StructureError);
}

TEST_CASE("partitions from subgroups") {
  Instance a6 = build_a6_on_36();
  PermGroup const &m = *a6.points->plinth;
  PermGroup m_omega = point_stabilizer(m, 0);
  CHECK(partition_from_subgroup(m, m_omega, 0) == Partition::singletons(36));
  CHECK(partition_from_subgroup(m, m, 0) == Partition::whole(36));
  Partition p = partition_from_subgroup(m, a6.points->system->subgroups[0], 0);
  CHECK(p.size() == 6);
  CHECK(p.parts().front().size() == 6);

  CHECK_THROWS_AS(partition_from_subgroup(m, point_stabilizer(m, 1), 0), StructureError);
}

TEST_CASE("block round trips on small groups") {
  properties::Log log;
  properties::check_blocks(log, "a5 squared", a5_squared_product());
  properties::check_blocks(log, "a6 on 36", *build_a6_on_36().points->plinth);
  for (auto const &f : {"s3wr2_on_9", "c3sq_c4_on_9", "c2cubed_regular", "a4xc3_on_12"}) {
    PermGroup g = parse_group(read_text_file(std::string(CARTDEC_CORPUS_DIR "/") + f + ".txt"));
    properties::check_blocks(log, f, g);
  }
  CHECK(log.checks > 0);
  CHECK(log.violations.empty());
}
