#include "cartdec/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "cartdec/error.hpp"

namespace cartdec {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size())
      throw InputError("permutation image " + std::to_string(x) +
                       " out of range for degree " +
                       std::to_string(images_.size()));
    if (seen[x])
      throw InputError("permutation image " + std::to_string(x) +
                       " repeated");
    seen[x] = true;
  }
}

Permutation
Permutation::from_cycles(std::size_t degree,
                         std::vector<std::vector<Point>> const &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InputError("cycle point " + std::to_string(x) +
                         " out of range for degree " + std::to_string(degree));
      if (used[x])
        throw InputError("cycle point " + std::to_string(x) + " repeated");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation Permutation::operator*(Permutation const &rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation &Permutation::operator*=(Permutation const &rhs) {
  for (auto &x : images_)
    x = rhs.images_[x];
  return *this;
}

Permutation Permutation::conjugated_by(Permutation const &by) const {
  // x^(by^-1 * this * by): map by[x] -> by[this[x]]
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[by.images_[i]] = by.images_[images_[i]];
  return out;
}

Point Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(i); !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::extended(std::size_t degree) const {
  Permutation out(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = images_[i];
  return out;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_cycle_string(Permutation const &p, bool one_based) {
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::ostringstream os;
  for (auto const &cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        os << ',';
      os << cycle[i] + (one_based ? 1 : 0);
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(std::size_t degree, std::string const &text,
                         bool one_based) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InputError("expected a point in cycle notation: " + text);
      long long value = std::stoll(text.substr(start, i - start));
      if (one_based)
        --value;
      if (value < 0)
        throw InputError("point 0 is invalid in 1-based cycle notation");
      cycle.push_back(static_cast<Point>(value));
      skip_space();
      if (i < text.size() && text[i] == ',')
        ++i;
      else if (i >= text.size() || text[i] != ')')
        throw InputError("unterminated cycle: " + text);
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

} // namespace cartdec
