#include "cartdec/actions.hpp"

#include "cartdec/error.hpp"

namespace cartdec {

namespace {

PermGroup build_image(std::size_t degree, std::vector<Permutation> gens,
                      std::optional<BigInt> const &order) {
  if (order)
    return PermGroup(degree, std::move(gens), ChainOptions{*order, {}});
  return PermGroup(degree, std::move(gens));
}

} // namespace

ActionMap::ActionMap(PermGroup source, PermGroup subgroup,
                     std::vector<Permutation> labels,
                     std::unordered_map<Permutation, Point> index,
                     std::optional<BigInt> image_order)
    : source_(std::move(source)), cosets_(std::move(subgroup)),
      labels_(std::move(labels)), index_(std::move(index)) {
  for (auto const &g : source_.generators())
    image_gens_.push_back(image_of(g));
  image_ = build_image(labels_.size(), image_gens_, image_order);
  faithful_ = image_.order() == source_.order();
}

Point ActionMap::point_of(Permutation const &g) const {
  auto it = index_.find(cosets_.canonical(g));
  if (it == index_.end())
    throw InputError("element is not in the acting group");
  return it->second;
}

Permutation ActionMap::image_of(Permutation const &g) const {
  if (g.degree() != source_.degree())
    throw InputError("element of the wrong degree for this action");
  std::vector<Point> images(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    images[i] = point_of(labels_[i] * g);
  return Permutation(std::move(images));
}

PermGroup ActionMap::image_of(PermGroup const &subgroup) const {
  std::vector<Permutation> gens;
  for (auto const &g : subgroup.generators())
    gens.push_back(image_of(g));
  if (faithful_)
    return PermGroup(labels_.size(), std::move(gens), ChainOptions{subgroup.order(), {}});
  return PermGroup(labels_.size(), std::move(gens));
}

ActionMap coset_action(PermGroup const &group, PermGroup const &subgroup,
                       CosetActionOptions const &options) {
  if (!group.contains_group(subgroup))
    throw InputError("coset action of a group on a non-subgroup");
  BigInt index = group.order() / subgroup.order();
  if (index > options.max_degree)
    throw CapExceeded("coset action of degree " + index.str() +
                      " exceeds the degree budget " +
                      std::to_string(options.max_degree));

  CosetCanonicalizer cosets(subgroup);
  std::vector<Permutation> labels{cosets.canonical(Permutation(group.degree()))};
  std::unordered_map<Permutation, Point> lookup{{labels[0], 0}};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    for (auto const &s : group.generators()) {
      Permutation c = cosets.canonical(labels[k] * s);
      if (lookup.emplace(c, static_cast<Point>(labels.size())).second)
        labels.push_back(std::move(c));
    }
  }
  std::optional<BigInt> order;
  if (options.faithful)
    order = group.order();
  return ActionMap(group, subgroup, std::move(labels), std::move(lookup), order);
}

Permutation DirectProduct::embed(std::size_t factor, Permutation const &p) const {
  auto [begin, end] = segments.at(factor);
  if (p.degree() != end - begin)
    throw InputError("factor element of the wrong degree");
  std::vector<Point> images(group.degree());
  for (Point x = 0; x < images.size(); ++x)
    images[x] = x;
  for (Point x = 0; x < p.degree(); ++x)
    images[begin + x] = begin + p[x];
  return Permutation(std::move(images));
}

PermGroup DirectProduct::embed(std::size_t factor, PermGroup const &g) const {
  std::vector<Permutation> gens;
  for (auto const &p : g.generators())
    gens.push_back(embed(factor, p));
  return PermGroup(group.degree(), std::move(gens), ChainOptions{g.order(), {}});
}

DirectProduct direct_product_action(std::vector<PermGroup> const &factors) {
  if (factors.empty())
    throw InputError("direct product of no factors");
  std::size_t degree = 0;
  std::vector<std::pair<Point, Point>> segments;
  BigInt order = 1;
  for (auto const &f : factors) {
    segments.emplace_back(static_cast<Point>(degree),
                          static_cast<Point>(degree + f.degree()));
    degree += f.degree();
    order *= f.order();
  }

  DirectProduct out{PermGroup::trivial(degree), segments};
  if (factors.size() == 1) {
    out.group = factors.front();
    return out;
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto const &g : factors[i].generators())
      gens.push_back(out.embed(i, g));
  }
  out.group = PermGroup(degree, std::move(gens), ChainOptions{order, {}});
  return out;
}

Point encode_tuple(std::vector<Point> const &tuple, std::size_t base_degree) {
  std::size_t point = 0;
  for (Point c : tuple)
    point = point * base_degree + c;
  return static_cast<Point>(point);
}

std::vector<Point> decode_tuple(Point point, std::size_t base_degree, std::size_t ell) {
  std::vector<Point> tuple(ell);
  for (std::size_t i = ell; i-- > 0;) {
    tuple[i] = static_cast<Point>(point % base_degree);
    point = static_cast<Point>(point / base_degree);
  }
  return tuple;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t ell, std::size_t max_degree) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    if (n > max_degree / std::max<std::size_t>(base, 1))
      throw CapExceeded("product action degree exceeds the degree budget " +
                        std::to_string(max_degree));
    n *= base;
  }
  if (n > max_degree)
    throw CapExceeded("product action degree exceeds the degree budget " +
                      std::to_string(max_degree));
  return n;
}

} // namespace

Permutation coordinate_permutation(Permutation const &x, std::size_t position,
                                   std::size_t ell) {
  std::size_t const n = x.degree();
  std::size_t const degree = checked_power(n, ell, SIZE_MAX);
  std::vector<Point> images(degree);
  for (Point p = 0; p < degree; ++p) {
    auto tuple = decode_tuple(p, n, ell);
    tuple[position] = x[tuple[position]];
    images[p] = encode_tuple(tuple, n);
  }
  return Permutation(std::move(images));
}

Permutation position_permutation(Permutation const &h, std::size_t base_degree) {
  std::size_t const ell = h.degree();
  std::size_t const degree = checked_power(base_degree, ell, SIZE_MAX);
  std::vector<Point> images(degree);
  for (Point p = 0; p < degree; ++p) {
    auto tuple = decode_tuple(p, base_degree, ell);
    std::vector<Point> moved(ell);
    for (std::size_t j = 0; j < ell; ++j)
      moved[h[static_cast<Point>(j)]] = tuple[j];
    images[p] = encode_tuple(moved, base_degree);
  }
  return Permutation(std::move(images));
}

PermGroup wreath_product_product_action(PermGroup const &base, std::size_t ell,
                                        PermGroup const &top,
                                        std::size_t max_degree) {
  if (ell == 0)
    throw InputError("wreath product needs at least one coordinate");
  if (top.degree() != ell)
    throw InputError("top group must act on the " + std::to_string(ell) +
                     " coordinates");
  if (ell == 1)
    return base;
  std::size_t const n = base.degree();
  std::size_t const degree = checked_power(n, ell, max_degree);

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < ell; ++i) {
    for (auto const &x : base.generators())
      gens.push_back(coordinate_permutation(x, i, ell));
  }
  for (auto const &h : top.generators())
    gens.push_back(position_permutation(h, n));

  ChainOptions options;
  if (n >= 2 && !base.is_trivial()) {
    BigInt order = top.order();
    for (std::size_t i = 0; i < ell; ++i)
      order *= base.order();
    options.known_order = order;
  }
  return PermGroup(degree, std::move(gens), options);
}

Permutation segment_permutation(Permutation const &h, std::size_t base_degree) {
  std::size_t const ell = h.degree();
  std::vector<Point> images(ell * base_degree);
  for (Point j = 0; j < ell; ++j) {
    for (Point x = 0; x < base_degree; ++x)
      images[j * base_degree + x] = static_cast<Point>(h[j] * base_degree + x);
  }
  return Permutation(std::move(images));
}

PermGroup wreath_product_imprimitive_action(PermGroup const &base,
                                            PermGroup const &top) {
  std::size_t const ell = top.degree();
  auto product = direct_product_action(std::vector<PermGroup>(ell, base));
  std::vector<Permutation> gens = product.group.generators();
  for (auto const &h : top.generators())
    gens.push_back(segment_permutation(h, base.degree()));
  BigInt order = product.group.order() * top.order();
  if (base.is_trivial())
    return PermGroup(ell * base.degree(), std::move(gens));
  return PermGroup(ell * base.degree(), std::move(gens), ChainOptions{order, {}});
}

} // namespace cartdec
