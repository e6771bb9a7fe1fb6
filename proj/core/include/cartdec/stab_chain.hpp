#ifndef CARTDEC_STAB_CHAIN_HPP
#define CARTDEC_STAB_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cartdec/permutation.hpp"

namespace cartdec {

using BigInt = boost::multiprecision::cpp_int;

struct ChainOptions {
  /// When set, random Schreier-Sims stops as soon as the chain reaches this
  /// order. The value must be the true order of the generated group.
  std::optional<BigInt> known_order;
  /// Points forced to the front of the base, in order.
  std::vector<Point> base_prefix;
};

/// Base and strong generating set with Schreier trees per level.
///
/// Level i holds the strong generators fixing base points 0..i-1 and the
/// orbit of base point i under them. Transversal elements are recovered by
/// walking the Schreier tree, so memory is O(levels * degree) plus the
/// strong generators themselves.
class StabChain {
public:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens; // indices into the strong generator pool
    std::vector<Point> orbit;        // breadth-first order, orbit[0] == base
    // Per point: kNotInOrbit, kRoot, or the pool index of the tree edge label.
    std::vector<std::int32_t> label;
  };

  static constexpr std::int32_t kNotInOrbit = -1;
  static constexpr std::int32_t kRoot = -2;

  StabChain() = default;
  StabChain(std::size_t degree, std::vector<Permutation> const &generators,
            ChainOptions const &options = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  Level const &level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  BigInt order() const;

  bool in_orbit(std::size_t level, Point x) const {
    return levels_[level].label[x] != kNotInOrbit;
  }

  /// Transversal element u with base(level)^u == x.
  Permutation transversal(std::size_t level, Point x) const;

  /// g * u^-1 where u is the transversal element for x at `level`.
  void strip_transversal(Permutation &g, std::size_t level, Point x) const;

  /// g <- u * g where u is the transversal element for x at `level`.
  void left_multiply_transversal(Permutation &g, std::size_t level, Point x) const;

  /// Sifts g starting at `from_level`. Returns the residue and the level at
  /// which sifting stopped (depth() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from_level = 0) const;

  bool contains(Permutation const &g) const;

  /// Strong generators fixing base points 0..level-1.
  std::vector<Permutation> strong_generators(std::size_t level = 0) const;

  /// The chain of the stabilizer of the first `first_level` base points.
  StabChain suffix(std::size_t first_level) const;

private:
  void add_strong_generator(Permutation h, std::size_t stop_level);
  void rebuild_orbit(std::size_t level);
  void complete_deterministically();
  void random_phase(std::vector<Permutation> const &generators,
                    std::optional<BigInt> const &target);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> pool_;
  std::vector<Permutation> pool_inverse_;
};

} // namespace cartdec

#endif
