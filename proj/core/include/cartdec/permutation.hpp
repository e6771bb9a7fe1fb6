#ifndef CARTDEC_PERMUTATION_HPP
#define CARTDEC_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cartdec {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored as its image list.
///
/// Permutations act on the right: `(p * q)[x] == q[p[x]]`, i.e. `p * q`
/// applies `p` first. This matches the exponential notation `x^(pq)` used
/// throughout the group theory literature.
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws InputError unless `images` is a bijection on its index set.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Apply `*this`, then `rhs`.
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);

  /// The conjugate `by^-1 * this * by`.
  Permutation conjugated_by(Permutation const &by) const;

  /// Smallest point not fixed, or degree() for the identity.
  Point smallest_moved_point() const;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// The permutation extended by fixed points to `degree`.
  Permutation extended(std::size_t degree) const;

  std::size_t hash() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &a,
                                          Permutation const &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Cycle notation, e.g. "(1,2,3)(4,5)"; "()" for the identity.
std::string to_cycle_string(Permutation const &p, bool one_based = true);

/// Parses cycle notation as produced by to_cycle_string.
Permutation parse_cycles(std::size_t degree, std::string const &text,
                         bool one_based = true);

} // namespace cartdec

template <> struct std::hash<cartdec::Permutation> {
  std::size_t operator()(cartdec::Permutation const &p) const noexcept {
    return p.hash();
  }
};

#endif
