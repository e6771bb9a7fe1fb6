#include "cartdec/perm_group.hpp"

#include <algorithm>
#include <set>

#include "cartdec/error.hpp"

namespace cartdec {

namespace {

void check_degrees(std::size_t degree, std::vector<Permutation> const &gens) {
  if (degree == 0)
    throw InputError("group degree must be positive");
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
  }
}

} // namespace

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     ChainOptions const &options)
    : degree_(degree), generators_(std::move(generators)) {
  check_degrees(degree_, generators_);
  std::erase_if(generators_, [](Permutation const &g) { return g.is_identity(); });
  chain_ = std::make_shared<StabChain const>(degree_, generators_, options);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_chain(StabChain chain) {
  PermGroup g;
  g.degree_ = chain.degree();
  g.generators_ = chain.strong_generators(0);
  g.chain_ = std::make_shared<StabChain const>(std::move(chain));
  return g;
}

PermGroup PermGroup::from_redundant_generators(std::size_t degree,
                                               std::vector<Permutation> const &gens,
                                               ChainOptions const &options) {
  check_degrees(degree, gens);
  return from_chain(StabChain(degree, gens, options));
}

bool PermGroup::contains(Permutation const &p) const {
  if (p.degree() != degree_)
    throw InputError("membership test with mismatched degree");
  return chain_->contains(p);
}

bool PermGroup::contains_group(PermGroup const &other) const {
  if (other.degree_ != degree_)
    return false;
  if (other.order() > order())
    return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](Permutation const &g) { return chain_->contains(g); });
}

bool PermGroup::same_group(PermGroup const &other) const {
  return order() == other.order() && contains_group(other) &&
         other.contains_group(*this);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
    }
  }
  return true;
}

bool PermGroup::commutes_with(PermGroup const &other) const {
  for (auto const &a : generators_) {
    for (auto const &b : other.generators_) {
      if (a * b != b * a)
        return false;
    }
  }
  return true;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_)
    throw InputError("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto const &g : generators_) {
      Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(p);
    for (Point x : orb)
      seen[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
  Permutation g(degree_);
  auto const &chain = *chain_;
  for (std::size_t l = chain.depth(); l-- > 0;) {
    auto const &orbit = chain.level(l).orbit;
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    g = g * chain.transversal(l, orbit[pick(rng)]);
  }
  return g;
}

void PermGroup::for_each_element(
    std::function<void(Permutation const &)> const &visit, std::size_t cap) const {
  if (order() > cap)
    throw CapExceeded("group of order " + order().str() +
                      " exceeds the element cap " + std::to_string(cap));
  auto const &chain = *chain_;
  std::size_t const depth = chain.depth();
  std::vector<std::vector<Permutation>> transversals(depth);
  for (std::size_t l = 0; l < depth; ++l) {
    for (Point x : chain.level(l).orbit)
      transversals[l].push_back(chain.transversal(l, x));
  }
  // element = t[depth-1] * ... * t[0]
  std::function<void(std::size_t, Permutation const &)> descend =
      [&](std::size_t remaining, Permutation const &prefix) {
        if (remaining == 0) {
          visit(prefix);
          return;
        }
        for (auto const &t : transversals[remaining - 1])
          descend(remaining - 1, prefix * t);
      };
  descend(depth, Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  std::vector<Permutation> out;
  for_each_element([&](Permutation const &g) { out.push_back(g); }, cap);
  return out;
}

PermGroup PermGroup::with_base_prefix(std::vector<Point> const &prefix) const {
  auto const base = chain_->base();
  if (std::equal(prefix.begin(), prefix.end(), base.begin(),
                 base.begin() + std::min(base.size(), prefix.size())) &&
      prefix.size() <= base.size())
    return *this;
  PermGroup out;
  out.degree_ = degree_;
  out.generators_ = generators_;
  out.chain_ = std::make_shared<StabChain const>(
      degree_, generators_, ChainOptions{order(), prefix});
  return out;
}

} // namespace cartdec
