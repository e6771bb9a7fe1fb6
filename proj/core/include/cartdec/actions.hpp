#ifndef CARTDEC_ACTIONS_HPP
#define CARTDEC_ACTIONS_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cartdec/group_algorithms.hpp"
#include "cartdec/perm_group.hpp"

namespace cartdec {

/// Default cap on the degree of constructed actions.
inline constexpr std::size_t kDefaultMaxDegree = 20'000;

/// A permutation representation of `source` on new points.
///
/// For coset actions the labels are canonical coset representatives; point
/// 0 is the coset of the subgroup itself.
class ActionMap {
public:
  ActionMap(PermGroup source, PermGroup subgroup, std::vector<Permutation> labels,
            std::unordered_map<Permutation, Point> index,
            std::optional<BigInt> image_order);

  PermGroup const &source() const { return source_; }
  std::size_t target_degree() const { return labels_.size(); }
  std::vector<Permutation> const &labels() const { return labels_; }
  /// Images of the source generators, in order.
  std::vector<Permutation> const &image_generators() const { return image_gens_; }
  PermGroup const &image() const { return image_; }
  /// True when the image has the same order as the source.
  bool is_faithful() const { return faithful_; }

  /// Image of an arbitrary element of the source group.
  Permutation image_of(Permutation const &g) const;
  /// Image of a subgroup of the source group.
  PermGroup image_of(PermGroup const &subgroup) const;

  /// The new point whose label's coset contains g.
  Point point_of(Permutation const &g) const;

private:
  PermGroup source_;
  CosetCanonicalizer cosets_;
  std::vector<Permutation> labels_;
  std::unordered_map<Permutation, Point> index_;
  std::vector<Permutation> image_gens_;
  PermGroup image_;
  bool faithful_ = false;
};

struct CosetActionOptions {
  std::size_t max_degree = kDefaultMaxDegree;
  /// Set when the subgroup is known to be core-free; the image is then
  /// built with the source order as its known order.
  bool faithful = false;
};

/// Action of `group` on the right cosets of `subgroup`.
ActionMap coset_action(PermGroup const &group, PermGroup const &subgroup,
                       CosetActionOptions const &options = {});

/// A group acting on the disjoint union of its factors' domains.
struct DirectProduct {
  PermGroup group;
  /// [begin, end) of each factor's points.
  std::vector<std::pair<Point, Point>> segments;

  /// The permutation acting as `p` on segment `factor` and trivially elsewhere.
  Permutation embed(std::size_t factor, Permutation const &p) const;
  PermGroup embed(std::size_t factor, PermGroup const &g) const;
};

DirectProduct direct_product_action(std::vector<PermGroup> const &factors);

/// Points of Γ^ℓ in product action are encoded big-endian in base |Γ|:
/// (γ_1, ..., γ_ℓ) ↦ γ_1 |Γ|^(ℓ-1) + ... + γ_ℓ.
Point encode_tuple(std::vector<Point> const &tuple, std::size_t base_degree);
std::vector<Point> decode_tuple(Point point, std::size_t base_degree, std::size_t ell);

/// Permutation of Γ^ℓ acting by `x` in coordinate `position` only.
Permutation coordinate_permutation(Permutation const &x, std::size_t position,
                                   std::size_t ell);
/// Permutation of Γ^ℓ moving coordinate j to position j^h.
Permutation position_permutation(Permutation const &h, std::size_t base_degree);

/// Sym-style wreath product base wr top in product action on Γ^ℓ.
PermGroup wreath_product_product_action(PermGroup const &base, std::size_t ell,
                                        PermGroup const &top,
                                        std::size_t max_degree = kDefaultMaxDegree);

/// Imprimitive wreath product: ℓ copies of `base` on disjoint segments,
/// with `top` permuting the segments.
PermGroup wreath_product_imprimitive_action(PermGroup const &base,
                                            PermGroup const &top);

/// Segment-permuting element of the imprimitive action for h ∈ Sym(ℓ).
Permutation segment_permutation(Permutation const &h, std::size_t base_degree);

} // namespace cartdec

#endif
