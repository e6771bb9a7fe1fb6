#ifndef CARTDEC_GROUP_ALGORITHMS_HPP
#define CARTDEC_GROUP_ALGORITHMS_HPP

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cartdec/error.hpp"
#include "cartdec/perm_group.hpp"

namespace cartdec {

/// Default cap on explicit set-product enumeration in product_covers.
inline constexpr std::size_t kDefaultProductCap = 10'000'000;

/// A subgroup paired with the group it lives in. Construction verifies that
/// every generator of `group` is a member of `parent`.
class SubgroupHandle {
public:
  SubgroupHandle(PermGroup group, PermGroup parent);

  PermGroup const &group() const { return group_; }
  PermGroup const &parent() const { return parent_; }

private:
  PermGroup group_;
  PermGroup parent_;
};

PermGroup point_stabilizer(PermGroup const &group, Point point);

/// Group generated by {g^-1 k g : k in generators(subgroup)}.
PermGroup conjugate_subgroup(PermGroup const &subgroup, Permutation const &g);

PermGroup subgroup_intersection(PermGroup const &a, PermGroup const &b);

/// True iff the set product a * b_1 * ... * b_r equals `whole`.
///
/// With one factor this is the order identity |a||b| = |a ∩ b||whole|.
/// Longer products are enumerated explicitly, up to `cap` elements.
bool product_covers(PermGroup const &whole, PermGroup const &a,
                    std::vector<PermGroup> const &bs,
                    std::size_t cap = kDefaultProductCap);

/// Smallest normal subgroup of `group` containing `seeds`.
PermGroup normal_closure(PermGroup const &group,
                         std::vector<Permutation> const &seeds);

bool is_normal_subgroup(PermGroup const &group, PermGroup const &sub);

/// One element per conjugacy class, by explicit enumeration.
std::vector<Permutation> conjugacy_class_representatives(
    PermGroup const &group, std::size_t cap = kDefaultElementCap);

/// All minimal normal subgroups, each once, ordered by group order and then
/// by discovery order over the class representatives.
std::vector<PermGroup> minimal_normal_subgroups(
    PermGroup const &group, std::size_t cap = kDefaultElementCap);

/// Orbit of `start` under an arbitrary right action together with Schreier
/// generators of its stabilizer.
template <class Key> struct OrbitStabilizer {
  std::vector<Key> orbit;
  std::vector<Permutation> stabilizer_generators;
};

template <class Key, class Act, class Hash = std::hash<Key>>
OrbitStabilizer<Key> orbit_stabilizer(PermGroup const &group, Key const &start, Act act,
                 std::size_t cap = kDefaultElementCap) {
  OrbitStabilizer<Key> out;
  std::unordered_map<Key, std::size_t, Hash> index;
  std::vector<Permutation> transversal;
  std::unordered_set<Permutation> seen_generators;

  out.orbit.push_back(start);
  index.emplace(start, 0);
  transversal.emplace_back(group.degree());

  auto const &gens = group.generators();
  for (std::size_t k = 0; k < out.orbit.size(); ++k) {
    for (auto const &s : gens) {
      Key image = act(out.orbit[k], s);
      auto it = index.find(image);
      if (it == index.end()) {
        if (out.orbit.size() >= cap)
          throw CapExceeded("orbit exceeds cap " + std::to_string(cap));
        index.emplace(image, out.orbit.size());
        out.orbit.push_back(std::move(image));
        transversal.push_back(transversal[k] * s);
        continue;
      }
      Permutation h = transversal[k] * s * transversal[it->second].inverse();
      if (!h.is_identity() && seen_generators.insert(h).second)
        out.stabilizer_generators.push_back(std::move(h));
    }
  }
  return out;
}

/// Stabilizer of `start` under the action, with a complete chain.
template <class Key, class Act, class Hash = std::hash<Key>>
PermGroup action_stabilizer(PermGroup const &group, Key const &start, Act act,
                            std::size_t cap = kDefaultElementCap) {
  auto os = orbit_stabilizer<Key, Act, Hash>(group, start, act, cap);
  BigInt order = group.order() / os.orbit.size();
  return PermGroup::from_redundant_generators(group.degree(),
                                              os.stabilizer_generators,
                                              ChainOptions{order, {}});
}

/// Canonical representatives of right cosets H*g.
///
/// The representative of H*g is the unique element of the coset whose
/// images of H's base points are lexicographically least, found greedily
/// level by level through H's stabilizer chain.
class CosetCanonicalizer {
public:
  explicit CosetCanonicalizer(PermGroup subgroup);

  Permutation canonical(Permutation g) const;

private:
  PermGroup subgroup_;
};

} // namespace cartdec

#endif
