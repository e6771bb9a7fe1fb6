#ifndef CARTDEC_BLOCKS_HPP
#define CARTDEC_BLOCKS_HPP

#include <cstddef>
#include <vector>

#include "cartdec/partition.hpp"
#include "cartdec/perm_group.hpp"

namespace cartdec {

/// Default cap on the number of invariant partitions enumerated.
inline constexpr std::size_t kDefaultPartitionCap = 10'000;

/// True iff every generator of `group` maps parts of `partition` to parts.
bool is_invariant_partition(PermGroup const &group, Partition const &partition);

/// Finest `group`-invariant partition in which all of `seeds` share a part.
/// For a transitive group this is the block system of the smallest block
/// containing the seeds.
Partition minimal_block_system(PermGroup const &group, std::vector<Point> const &seeds);

/// Smallest block of imprimitivity containing {omega, delta}. Throws
/// InputError when `group` is intransitive or omega == delta.
std::vector<Point> minimal_block(PermGroup const &group, Point omega, Point delta);

/// Every `group`-invariant partition, including the two trivial ones, in
/// canonical order. Throws CapExceeded when more than `cap` exist.
std::vector<Partition> all_invariant_partitions(PermGroup const &group, Point omega,
                                                std::size_t cap = kDefaultPartitionCap);

/// Setwise stabilizer of the part of `partition` containing `omega`.
PermGroup partition_stabilizer(PermGroup const &group, Partition const &partition,
                               Point omega);

/// The block system whose part at `omega` is the `subgroup`-orbit of omega.
/// Requires group_omega <= subgroup <= group.
Partition partition_from_subgroup(PermGroup const &group, PermGroup const &subgroup,
                                  Point omega);

} // namespace cartdec

#endif
