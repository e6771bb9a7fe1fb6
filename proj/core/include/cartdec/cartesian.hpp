#ifndef CARTDEC_CARTESIAN_HPP
#define CARTDEC_CARTESIAN_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "cartdec/blocks.hpp"
#include "cartdec/partition.hpp"
#include "cartdec/perm_group.hpp"

namespace cartdec {

/// True iff every choice of one part per partition meets in exactly one
/// point. Decided by part-count product plus injectivity of coordinates.
bool is_cartesian_decomposition(std::vector<Partition> const &partitions);

/// Reference check of the same property by counting every intersection.
bool is_cartesian_by_counting(std::vector<Partition> const &partitions);

class CartesianDecomposition {
public:
  /// Throws StructureError unless the partitions form a decomposition.
  explicit CartesianDecomposition(std::vector<Partition> partitions);

  std::size_t degree() const { return partitions_.front().degree(); }
  std::size_t arity() const { return partitions_.size(); }
  std::vector<Partition> const &partitions() const { return partitions_; }
  std::vector<std::size_t> part_counts() const;
  bool is_homogeneous() const;

  friend bool operator==(CartesianDecomposition const &,
                         CartesianDecomposition const &) = default;
  friend std::strong_ordering operator<=>(CartesianDecomposition const &a,
                                          CartesianDecomposition const &b) {
    return a.partitions_ <=> b.partitions_;
  }

private:
  std::vector<Partition> partitions_;
};

/// A bijection from points to tuples; coordinate i ranges over
/// 0..factor_sizes[i]-1.
struct Identification {
  std::vector<std::size_t> factor_sizes;
  std::vector<std::vector<Point>> table;

  std::size_t degree() const { return table.size(); }
};

Identification coordinates(CartesianDecomposition const &decomposition);

/// Throws InputError when the table is not a bijection onto the product.
CartesianDecomposition decomposition_from_identification(Identification const &phi);

bool identifications_equivalent(Identification const &a, Identification const &b);

struct DecompositionSymmetry {
  bool invariant = false;
  bool transitive = false;
};

DecompositionSymmetry decomposition_symmetry(PermGroup const &group,
                                             CartesianDecomposition const &decomposition);

/// Subgroups K_1..K_l of the plinth. `stabilizer` is M_omega; it is computed
/// from `omega` when there is an action, or supplied directly when the system
/// is only known at subgroup level.
struct CartesianSystem {
  PermGroup plinth;
  std::optional<Point> omega;
  PermGroup stabilizer;
  std::vector<PermGroup> subgroups;
};

CartesianSystem make_system(PermGroup plinth, Point omega, std::vector<PermGroup> subgroups);

struct SystemReport {
  bool cs1 = false;
  std::vector<bool> cs2;
  std::optional<bool> gomega_closed;

  bool passed() const;
};

/// Checks the intersection and factorisation conditions, plus closure of the
/// set of subgroups under conjugation by `g_omega` when supplied.
SystemReport verify_cartesian_system(CartesianSystem const &system,
                                     std::optional<PermGroup> const &g_omega = {});

CartesianSystem system_from_decomposition(PermGroup const &plinth,
                                          CartesianDecomposition const &decomposition,
                                          Point omega);

CartesianDecomposition decomposition_from_system(CartesianSystem const &system);

/// Equal as sets of subgroups.
bool same_subgroup_set(std::vector<PermGroup> const &a, std::vector<PermGroup> const &b);

struct SearchCaps {
  std::size_t max_partitions = kDefaultPartitionCap;
  std::size_t max_orbits = 20;
  std::size_t max_ell = 8;
  std::size_t max_combinations = 1'000'000;
};

/// All G-invariant decompositions with at least two partitions, sorted.
std::vector<CartesianDecomposition>
find_invariant_decompositions(PermGroup const &group, PermGroup const &plinth, Point omega,
                              SearchCaps const &caps = {});

/// Exhaustive reference search: every subset of the nontrivial
/// plinth-invariant partitions, tested by counting and by invariance.
/// Blocks come from a subset scan when the degree is at most 16.
std::vector<CartesianDecomposition>
oracle_invariant_decompositions(PermGroup const &group, PermGroup const &plinth,
                                std::size_t max_degree = 36);

/// Partitions invariant under a transitive group, found by testing every
/// subset through point 0. Only usable at small degree.
std::vector<Partition> invariant_partitions_by_subsets(PermGroup const &group);

/// Setwise stabilizer of the decomposition inside `ambient`, by element scan.
PermGroup decomposition_stabilizer_bruteforce(PermGroup const &ambient,
                                              CartesianDecomposition const &decomposition,
                                              std::size_t cap = kDefaultElementCap);

} // namespace cartdec

#endif
