#include "cartdec/stab_chain.hpp"

#include <random>
#include <set>

#include "cartdec/error.hpp"

namespace cartdec {

namespace {

constexpr std::uint64_t kChainSeed = 0x9e3779b97f4a7c15ull;
constexpr int kRandomConfidence = 24;
constexpr int kMaxRandomRounds = 200000;
constexpr std::size_t kTransversalCacheEntries = std::size_t{1} << 25;

/// Product replacement generator of random group elements.
class ProductReplacement {
public:
  ProductReplacement(std::vector<Permutation> const &generators, std::size_t degree)
      : rng_(kChainSeed), accumulator_(degree) {
    for (auto const &g : generators) {
      if (!g.is_identity())
        slots_.push_back(g);
    }
    if (slots_.empty())
      return;
    std::size_t const base_count = slots_.size();
    while (slots_.size() < 10)
      slots_.push_back(slots_[slots_.size() % base_count]);
    for (int i = 0; i < 40; ++i)
      next();
  }

  bool empty() const { return slots_.empty(); }

  Permutation const &next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    while (j == i)
      j = pick(rng_);
    if (rng_() & 1)
      slots_[i] *= slots_[j];
    else
      slots_[i] *= slots_[j].inverse();
    accumulator_ *= slots_[i];
    return accumulator_;
  }

private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

} // namespace

StabChain::StabChain(std::size_t degree, std::vector<Permutation> const &generators,
                     ChainOptions const &options)
    : degree_(degree) {
  for (Point b : options.base_prefix) {
    if (b >= degree)
      throw InputError("base point out of range");
    for (auto const &level : levels_) {
      if (level.base == b)
        throw InputError("repeated base point");
    }
    Level level;
    level.base = b;
    level.orbit = {b};
    level.label.assign(degree, kNotInOrbit);
    level.label[b] = kRoot;
    levels_.push_back(std::move(level));
  }

  for (auto const &g : generators) {
    auto [residue, stop] = sift(g);
    if (!residue.is_identity())
      add_strong_generator(std::move(residue), stop);
  }

  if (options.known_order) {
    random_phase(generators, options.known_order);
    if (order() != *options.known_order) {
      complete_deterministically();
      if (order() != *options.known_order)
        throw StructureError("group order " + order().str() +
                             " differs from the stated order " +
                             options.known_order->str());
    }
  } else {
    random_phase(generators, std::nullopt);
    complete_deterministically();
  }
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (auto const &level : levels_)
    out.push_back(level.base);
  return out;
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (auto const &level : levels_)
    n *= level.orbit.size();
  return n;
}

Permutation StabChain::transversal(std::size_t level, Point x) const {
  auto const &lv = levels_[level];
  std::vector<std::int32_t> path;
  while (lv.label[x] != kRoot) {
    std::int32_t s = lv.label[x];
    path.push_back(s);
    x = pool_inverse_[s][x];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u *= pool_[*it];
  return u;
}

void StabChain::strip_transversal(Permutation &g, std::size_t level, Point x) const {
  auto const &lv = levels_[level];
  while (lv.label[x] != kRoot) {
    std::int32_t s = lv.label[x];
    g *= pool_inverse_[s];
    x = pool_inverse_[s][x];
  }
}

void StabChain::left_multiply_transversal(Permutation &g, std::size_t level,
                                          Point x) const {
  auto const &lv = levels_[level];
  while (lv.label[x] != kRoot) {
    std::int32_t s = lv.label[x];
    g = pool_[s] * g;
    x = pool_inverse_[s][x];
  }
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g,
                                                    std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    Point b = g[levels_[l].base];
    if (levels_[l].label[b] == kNotInOrbit)
      return {std::move(g), l};
    strip_transversal(g, l, b);
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(Permutation const &g) const {
  if (g.degree() != degree_)
    return false;
  auto [residue, stop] = sift(g);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StabChain::strong_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size())
    return out;
  std::set<std::uint32_t> seen;
  for (auto idx : levels_[level].gens) {
    if (seen.insert(idx).second)
      out.push_back(pool_[idx]);
  }
  return out;
}

StabChain StabChain::suffix(std::size_t first_level) const {
  StabChain out;
  out.degree_ = degree_;
  out.pool_ = pool_;
  out.pool_inverse_ = pool_inverse_;
  for (std::size_t l = first_level; l < levels_.size(); ++l)
    out.levels_.push_back(levels_[l]);
  return out;
}

void StabChain::rebuild_orbit(std::size_t level) {
  auto &lv = levels_[level];
  lv.label.assign(degree_, kNotInOrbit);
  lv.label[lv.base] = kRoot;
  lv.orbit.assign(1, lv.base);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point x = lv.orbit[k];
    for (auto gi : lv.gens) {
      Point y = pool_[gi][x];
      if (lv.label[y] == kNotInOrbit) {
        lv.label[y] = static_cast<std::int32_t>(gi);
        lv.orbit.push_back(y);
      }
    }
  }
}

void StabChain::add_strong_generator(Permutation h, std::size_t stop_level) {
  if (stop_level == levels_.size()) {
    Level level;
    level.base = h.smallest_moved_point();
    levels_.push_back(std::move(level));
  }
  auto idx = static_cast<std::uint32_t>(pool_.size());
  pool_inverse_.push_back(h.inverse());
  pool_.push_back(std::move(h));
  for (std::size_t l = 0; l <= stop_level; ++l) {
    levels_[l].gens.push_back(idx);
    rebuild_orbit(l);
  }
}

void StabChain::random_phase(std::vector<Permutation> const &generators,
                             std::optional<BigInt> const &target) {
  ProductReplacement source(generators, degree_);
  if (source.empty())
    return;

  int streak = 0;
  for (int round = 0; round < kMaxRandomRounds; ++round) {
    if (target) {
      BigInt current = order();
      if (current == *target)
        return;
      if (current > *target)
        throw StructureError("group order exceeds the stated order " +
                             target->str());
    } else if (streak >= kRandomConfidence) {
      return;
    }
    auto [residue, stop] = sift(source.next());
    if (residue.is_identity()) {
      ++streak;
    } else {
      streak = 0;
      add_strong_generator(std::move(residue), stop);
    }
  }
}

void StabChain::complete_deterministically() {
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t const l = i - 1;
    bool extended = false;
    // Copies: the level may be rebuilt while we iterate.
    std::vector<Point> const orbit = levels_[l].orbit;
    std::vector<std::uint32_t> const gens = levels_[l].gens;

    // Transversal elements in orbit order, cached when affordable.
    bool const cache = orbit.size() * degree_ <= kTransversalCacheEntries;
    std::vector<Permutation> cached;
    std::vector<std::uint32_t> position;
    if (cache) {
      position.assign(degree_, 0);
      cached.reserve(orbit.size());
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        Point x = orbit[k];
        position[x] = static_cast<std::uint32_t>(k);
        auto s = levels_[l].label[x];
        if (s == kRoot)
          cached.emplace_back(degree_);
        else
          cached.push_back(cached[position[pool_inverse_[s][x]]] * pool_[s]);
      }
    }

    for (std::size_t k = 0; k < orbit.size() && !extended; ++k) {
      Point const x = orbit[k];
      Permutation const ux = cache ? cached[k] : transversal(l, x);
      for (auto gi : gens) {
        Point y = pool_[gi][x];
        if (levels_[l].label[y] == static_cast<std::int32_t>(gi) &&
            pool_inverse_[gi][y] == x)
          continue; // tree edge: trivial Schreier generator
        Permutation h = ux * pool_[gi];
        if (cache) {
          Permutation const &uy = cached[position[y]];
          if (h == uy)
            continue;
          h *= uy.inverse();
        } else {
          strip_transversal(h, l, y);
          if (h.is_identity())
            continue;
        }
        auto [residue, stop] = sift(std::move(h), l + 1);
        if (!residue.is_identity()) {
          add_strong_generator(std::move(residue), stop);
          i = stop + 1;
          extended = true;
          break;
        }
      }
    }
    if (!extended)
      --i;
  }
}

} // namespace cartdec
