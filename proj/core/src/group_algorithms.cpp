#include "cartdec/group_algorithms.hpp"

#include <algorithm>
#include <unordered_set>

namespace cartdec {

SubgroupHandle::SubgroupHandle(PermGroup group, PermGroup parent)
    : group_(std::move(group)), parent_(std::move(parent)) {
  if (group_.degree() != parent_.degree())
    throw InputError("subgroup and parent have different degrees");
  if (!parent_.contains_group(group_))
    throw StructureError("subgroup generator is not a member of the parent");
}

PermGroup point_stabilizer(PermGroup const &group, Point point) {
  if (point >= group.degree())
    throw InputError("point out of range");
  PermGroup rebased = group.with_base_prefix({point});
  if (rebased.chain().depth() <= 1)
    return PermGroup::trivial(group.degree());
  return PermGroup::from_chain(rebased.chain().suffix(1));
}

PermGroup conjugate_subgroup(PermGroup const &subgroup, Permutation const &g) {
  if (g.degree() != subgroup.degree())
    throw InputError("conjugating element has the wrong degree");
  std::vector<Permutation> gens;
  for (auto const &k : subgroup.generators())
    gens.push_back(k.conjugated_by(g));
  return PermGroup(subgroup.degree(), std::move(gens),
                   ChainOptions{subgroup.order(), {}});
}

CosetCanonicalizer::CosetCanonicalizer(PermGroup subgroup)
    : subgroup_(std::move(subgroup)) {}

Permutation CosetCanonicalizer::canonical(Permutation g) const {
  auto const &chain = subgroup_.chain();
  for (std::size_t l = 0; l < chain.depth(); ++l) {
    auto const &orbit = chain.level(l).orbit;
    Point best = orbit[0];
    for (Point x : orbit) {
      if (g[x] < g[best])
        best = x;
    }
    chain.left_multiply_transversal(g, l, best);
  }
  return g;
}

PermGroup subgroup_intersection(PermGroup const &a, PermGroup const &b) {
  if (a.degree() != b.degree())
    throw InputError("intersection of groups of different degrees");
  PermGroup const &small = a.order() <= b.order() ? a : b;
  PermGroup const &large = a.order() <= b.order() ? b : a;
  if (large.contains_group(small))
    return small;

  // small ∩ large is the stabilizer of the coset large*1 under right
  // multiplication by `small`.
  CosetCanonicalizer cosets(large);
  auto act = [&](Permutation const &rep, Permutation const &s) {
    return cosets.canonical(rep * s);
  };
  return action_stabilizer(small, cosets.canonical(Permutation(a.degree())), act);
}

bool product_covers(PermGroup const &whole, PermGroup const &a,
                    std::vector<PermGroup> const &bs, std::size_t cap) {
  BigInt const target = whole.order();
  if (a.order() == target)
    return true;
  if (bs.empty())
    return false;
  if (bs.size() == 1) {
    PermGroup const &b = bs.front();
    return a.order() * b.order() == subgroup_intersection(a, b).order() * target;
  }

  if (target > cap)
    throw CapExceeded("set product of a group of order " + target.str() +
                      " exceeds the enumeration cap");
  std::unordered_set<Permutation> current;
  a.for_each_element([&](Permutation const &x) { current.insert(x); }, cap);
  for (auto const &b : bs) {
    auto const b_elements = b.elements(cap);
    std::unordered_set<Permutation> next;
    for (auto const &x : current) {
      for (auto const &y : b_elements) {
        next.insert(x * y);
        if (next.size() == target)
          return true;
      }
    }
    current = std::move(next);
  }
  return current.size() == target;
}

PermGroup normal_closure(PermGroup const &group,
                         std::vector<Permutation> const &seeds) {
  std::vector<Permutation> gens;
  for (auto const &s : seeds) {
    if (s.degree() != group.degree())
      throw InputError("seed of the wrong degree");
    if (!s.is_identity())
      gens.push_back(s);
  }
  PermGroup closure(group.degree(), gens);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
      for (auto const &g : group.generators()) {
        Permutation c = gens[i].conjugated_by(g);
        if (!closure.contains(c)) {
          gens.push_back(std::move(c));
          closure = PermGroup(group.degree(), gens);
          grown = true;
          break;
        }
      }
    }
  }
  return closure;
}

bool is_normal_subgroup(PermGroup const &group, PermGroup const &sub) {
  if (!group.contains_group(sub))
    return false;
  for (auto const &n : sub.generators()) {
    for (auto const &g : group.generators()) {
      if (!sub.contains(n.conjugated_by(g)))
        return false;
    }
  }
  return true;
}

std::vector<Permutation> conjugacy_class_representatives(PermGroup const &group,
                                                         std::size_t cap) {
  auto const elements = group.elements(cap);
  std::unordered_map<Permutation, std::size_t> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], i);

  std::vector<bool> done(elements.size(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (done[i])
      continue;
    reps.push_back(elements[i]);
    std::vector<std::size_t> queue{i};
    done[i] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const &g : group.generators()) {
        std::size_t j = index.at(elements[queue[k]].conjugated_by(g));
        if (!done[j]) {
          done[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &group,
                                                std::size_t cap) {
  std::vector<PermGroup> closures;
  for (auto const &rep : conjugacy_class_representatives(group, cap)) {
    if (rep.is_identity())
      continue;
    PermGroup n = normal_closure(group, {rep});
    bool duplicate = std::any_of(closures.begin(), closures.end(),
                                 [&](PermGroup const &m) { return m.same_group(n); });
    if (!duplicate)
      closures.push_back(std::move(n));
  }

  std::vector<PermGroup> minimal;
  for (auto const &n : closures) {
    bool has_smaller = std::any_of(closures.begin(), closures.end(), [&](PermGroup const &m) {
      return m.order() < n.order() && n.contains_group(m);
    });
    if (!has_smaller)
      minimal.push_back(n);
  }
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](PermGroup const &x, PermGroup const &y) { return x.order() < y.order(); });
  return minimal;
}

} // namespace cartdec
