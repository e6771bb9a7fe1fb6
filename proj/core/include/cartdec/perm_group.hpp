#ifndef CARTDEC_PERM_GROUP_HPP
#define CARTDEC_PERM_GROUP_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "cartdec/permutation.hpp"
#include "cartdec/stab_chain.hpp"

namespace cartdec {

/// Default cap on explicit element enumeration.
inline constexpr std::size_t kDefaultElementCap = 1'000'000;

/// A permutation group given by generators, with a complete stabilizer chain
/// built at construction. Immutable; copies share the chain.
class PermGroup {
public:
  /// The trivial group of degree 1.
  PermGroup();

  /// Throws InputError if any generator has a different degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            ChainOptions const &options = {});

  static PermGroup trivial(std::size_t degree);

  /// Subgroup generated by the strong generators of a known chain.
  static PermGroup from_chain(StabChain chain);

  /// Like the constructor, but the stored generators are replaced by the
  /// strong generating set. Used for groups given by many redundant
  /// generators (e.g. Schreier generators).
  static PermGroup from_redundant_generators(std::size_t degree,
                                             std::vector<Permutation> const &gens,
                                             ChainOptions const &options = {});

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  StabChain const &chain() const { return *chain_; }
  BigInt order() const { return chain_->order(); }
  bool is_trivial() const { return chain_->depth() == 0 || order() == 1; }

  bool contains(Permutation const &p) const;
  bool contains_group(PermGroup const &other) const;
  /// Equality as subgroups of Sym(n): mutual generator membership.
  bool same_group(PermGroup const &other) const;
  bool is_abelian() const;
  bool commutes_with(PermGroup const &other) const;

  std::vector<Point> orbit(Point p) const;
  /// All orbits, each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Uniformly random element drawn from the chain's transversals.
  Permutation random_element(std::mt19937_64 &rng) const;

  /// Calls `visit` once per element in a deterministic order. Throws
  /// CapExceeded when the order exceeds `cap`.
  void for_each_element(std::function<void(Permutation const &)> const &visit,
                        std::size_t cap = kDefaultElementCap) const;
  std::vector<Permutation> elements(std::size_t cap = kDefaultElementCap) const;

  /// The same group with its chain rebuilt to start with `prefix`.
  PermGroup with_base_prefix(std::vector<Point> const &prefix) const;

private:
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::shared_ptr<StabChain const> chain_;
};

} // namespace cartdec

#endif
