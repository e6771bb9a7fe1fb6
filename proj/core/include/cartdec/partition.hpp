#ifndef CARTDEC_PARTITION_HPP
#define CARTDEC_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "cartdec/permutation.hpp"

namespace cartdec {

/// A partition of {0, ..., n-1} in canonical form: each part sorted, parts
/// ordered by their least point.
class Partition {
public:
  Partition() = default;

  /// Throws InputError unless `parts` are nonempty, disjoint and cover.
  Partition(std::size_t degree, std::vector<std::vector<Point>> parts);

  /// Partition from a class label per point (labels are arbitrary integers).
  static Partition from_labels(std::vector<std::size_t> const &labels);
  static Partition singletons(std::size_t degree);
  static Partition whole(std::size_t degree);

  std::size_t degree() const { return part_of_.size(); }
  /// Number of parts.
  std::size_t size() const { return parts_.size(); }
  std::vector<std::vector<Point>> const &parts() const { return parts_; }
  std::size_t part_index(Point x) const { return part_of_[x]; }
  std::vector<Point> const &part_containing(Point x) const {
    return parts_[part_of_[x]];
  }

  /// Singleton or one-part partition.
  bool is_trivial() const { return size() == 1 || size() == degree(); }

  /// The partition {part^g}, canonicalized. Not necessarily equal to *this.
  Partition image(Permutation const &g) const;

  std::size_t hash() const;

  friend bool operator==(Partition const &a, Partition const &b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(Partition const &a, Partition const &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<std::vector<Point>> parts_;
  std::vector<std::size_t> part_of_;
};

} // namespace cartdec

template <> struct std::hash<cartdec::Partition> {
  std::size_t operator()(cartdec::Partition const &p) const noexcept {
    return p.hash();
  }
};

#endif
