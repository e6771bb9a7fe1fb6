#include "cartdec/partition.hpp"

#include <algorithm>
#include <map>

#include "cartdec/error.hpp"

namespace cartdec {

Partition::Partition(std::size_t degree, std::vector<std::vector<Point>> parts)
    : parts_(std::move(parts)), part_of_(degree, degree) {
  for (auto &part : parts_) {
    if (part.empty())
      throw InputError("partition has an empty part");
    std::sort(part.begin(), part.end());
  }
  std::sort(parts_.begin(), parts_.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (Point x : parts_[i]) {
      if (x >= degree)
        throw InputError("partition point " + std::to_string(x) +
                         " out of range for degree " + std::to_string(degree));
      if (part_of_[x] != degree)
        throw InputError("partition point " + std::to_string(x) +
                         " appears in two parts");
      part_of_[x] = i;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (part_of_[x] == degree)
      throw InputError("partition does not cover point " + std::to_string(x));
  }
}

Partition Partition::from_labels(std::vector<std::size_t> const &labels) {
  std::map<std::size_t, std::vector<Point>> classes;
  for (std::size_t x = 0; x < labels.size(); ++x)
    classes[labels[x]].push_back(static_cast<Point>(x));
  std::vector<std::vector<Point>> parts;
  parts.reserve(classes.size());
  for (auto &[label, part] : classes)
    parts.push_back(std::move(part));
  return Partition(labels.size(), std::move(parts));
}

Partition Partition::singletons(std::size_t degree) {
  std::vector<std::vector<Point>> parts;
  for (Point x = 0; x < degree; ++x)
    parts.push_back({x});
  return Partition(degree, std::move(parts));
}

Partition Partition::whole(std::size_t degree) {
  std::vector<Point> all(degree);
  for (Point x = 0; x < degree; ++x)
    all[x] = x;
  return Partition(degree, {std::move(all)});
}

Partition Partition::image(Permutation const &g) const {
  if (g.degree() != degree())
    throw InputError("partition and permutation degrees differ");
  std::vector<std::size_t> labels(degree());
  for (Point x = 0; x < degree(); ++x)
    labels[g[x]] = part_of_[x];
  return from_labels(labels);
}

std::size_t Partition::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto const &part : parts_) {
    for (Point x : part) {
      h ^= x;
      h *= 1099511628211ull;
    }
    h ^= 0xffffffffull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace cartdec
