#include "cartdec/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cartdec/error.hpp"
#include "cartdec/group_algorithms.hpp"

namespace cartdec {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a > b)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

void require_transitive(PermGroup const &group) {
  if (!group.is_transitive())
    throw InputError("block computations need a transitive group");
}

} // namespace

bool is_invariant_partition(PermGroup const &group, Partition const &partition) {
  if (group.degree() != partition.degree())
    throw InputError("group and partition degrees differ");
  for (auto const &g : group.generators()) {
    for (auto const &part : partition.parts()) {
      std::size_t target = partition.part_index(g[part.front()]);
      for (Point x : part) {
        if (partition.part_index(g[x]) != target)
          return false;
      }
    }
  }
  return true;
}

Partition minimal_block_system(PermGroup const &group, std::vector<Point> const &seeds) {
  std::size_t const n = group.degree();
  UnionFind classes(n);
  std::vector<std::pair<Point, Point>> queue;
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    if (seeds[i] >= n || seeds[0] >= n)
      throw InputError("seed point out of range");
    if (classes.unite(seeds[0], seeds[i]))
      queue.emplace_back(seeds[0], seeds[i]);
  }
  // Each queued pair has been merged; its images under every generator
  // must be merged too.
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [a, b] = queue[k];
    for (auto const &g : group.generators()) {
      Point x = g[a];
      Point y = g[b];
      if (classes.unite(x, y))
        queue.emplace_back(x, y);
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x)
    labels[x] = classes.find(x);
  return Partition::from_labels(labels);
}

std::vector<Point> minimal_block(PermGroup const &group, Point omega, Point delta) {
  if (omega == delta)
    throw InputError("minimal block needs two distinct points");
  if (omega >= group.degree() || delta >= group.degree())
    throw InputError("point out of range");
  require_transitive(group);
  return minimal_block_system(group, {omega, delta}).part_containing(omega);
}

std::vector<Partition> all_invariant_partitions(PermGroup const &group, Point omega,
                                                std::size_t cap) {
  if (omega >= group.degree())
    throw InputError("point out of range");
  require_transitive(group);
  std::size_t const n = group.degree();

  std::vector<Partition> found;
  std::unordered_set<Partition> known;
  auto add = [&](Partition p) {
    if (known.insert(p).second) {
      if (found.size() >= cap)
        throw CapExceeded("more than " + std::to_string(cap) +
                          " invariant partitions");
      found.push_back(std::move(p));
    }
  };

  add(Partition::singletons(n));
  add(Partition::whole(n));
  for (Point delta = 0; delta < n; ++delta) {
    if (delta != omega)
      add(minimal_block_system(group, {omega, delta}));
  }

  // Join closure: every block through omega is the join of the minimal
  // blocks it contains.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto const &bi = found[i].part_containing(omega);
      auto const &bj = found[j].part_containing(omega);
      if (std::includes(bi.begin(), bi.end(), bj.begin(), bj.end()) ||
          std::includes(bj.begin(), bj.end(), bi.begin(), bi.end()))
        continue;
      std::vector<Point> seeds;
      std::set_union(bi.begin(), bi.end(), bj.begin(), bj.end(),
                     std::back_inserter(seeds));
      add(minimal_block_system(group, seeds));
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

PermGroup partition_stabilizer(PermGroup const &group, Partition const &partition,
                               Point omega) {
  if (omega >= group.degree())
    throw InputError("point out of range");
  if (!is_invariant_partition(group, partition))
    throw StructureError("partition is not invariant under the group");
  auto act = [&](std::size_t part, Permutation const &g) {
    return partition.part_index(g[partition.parts()[part].front()]);
  };
  return action_stabilizer(group, partition.part_index(omega), act);
}

Partition partition_from_subgroup(PermGroup const &group, PermGroup const &subgroup,
                                  Point omega) {
  require_transitive(group);
  if (!group.contains_group(subgroup))
    throw StructureError("subgroup is not contained in the group");
  if (!subgroup.contains_group(point_stabilizer(group, omega)))
    throw StructureError("subgroup does not contain the point stabilizer");
  auto block = subgroup.orbit(omega);
  Partition out = minimal_block_system(group, block);
  if (out.part_containing(omega) != block)
    throw StructureError("subgroup orbit is not a block");
  return out;
}

} // namespace cartdec
