#ifndef CARTDEC_CATALOG_HPP
#define CARTDEC_CATALOG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartdec/actions.hpp"
#include "cartdec/cartesian.hpp"
#include "cartdec/classify.hpp"

namespace cartdec {

/// Values an instance is expected to reproduce. Unset fields are not checked.
struct ExpectedFields {
  std::optional<BigInt> group_order;
  std::optional<BigInt> plinth_order;
  std::optional<std::size_t> degree;
  std::vector<BigInt> subgroup_orders;
  std::optional<BigInt> stabilizer_order;
  std::optional<bool> innately_transitive;
  std::optional<bool> homogeneous;
  std::optional<bool> invariant;
  std::optional<bool> g_transitive;
  std::optional<bool> normal;
  /// Compared as a set of cells, 0-based factor indices.
  std::optional<NormalWitness> normal_cells;
  std::optional<std::size_t> factor_set_size;
  std::optional<std::size_t> diagonal_pair_count;
  std::optional<bool> smf;
  std::optional<BigInt> ambient_stabilizer_order;
};

/// The group acting on the decomposed set itself.
struct PointLevel {
  PermGroup group;
  std::optional<PermGroup> plinth;
  Point omega = 0;
  std::optional<CartesianSystem> system;
  CartesianDecomposition decomposition;
};

struct Instance {
  std::string name;
  std::string description;
  PermGroup group;
  std::optional<PermGroup> plinth = {};
  std::optional<CartesianSystem> system = {};
  std::optional<PermGroup> g_omega = {};
  std::optional<DirectFactorization> factorization = {};
  /// Present when the set being decomposed fits the degree budget.
  std::optional<PointLevel> points = {};
  /// Ambient group for the brute-force decomposition stabilizer.
  std::optional<PermGroup> ambient = {};
  ExpectedFields expected = {};
};

struct BuildOptions {
  std::size_t max_degree = kDefaultMaxDegree;
};

/// Subgroups handed to the parameterized constructors; `t` is the simple
/// group and the others are subgroups of it.
struct FactorParams {
  PermGroup t;
  std::vector<PermGroup> subgroups;
};

Instance build_grid_2x3();
Instance build_wreath_product_action(std::size_t gamma_size, std::size_t ell,
                                     BuildOptions const &options = {});
Instance build_a6_on_36(bool projective_extension = false, BuildOptions const &options = {});
/// The D10 used by build_a6_on_36 and the two A5 subgroups containing it,
/// inside the 6-point A6.
struct A6Subgroups {
  PermGroup a6;
  PermGroup d10;
  PermGroup natural_a5;
  PermGroup transitive_a5;
};
A6Subgroups a6_on_36_subgroups(std::size_t which_d10 = 0);

Instance build_ex61(PermGroup const &t, BuildOptions const &options = {});
Instance build_ex62(PermGroup const &t, PermGroup const &a, BuildOptions const &options = {});
Instance build_ex63(BuildOptions const &options = {});
Instance build_ex64(PermGroup const &t, PermGroup const &a, PermGroup const &b,
                    BuildOptions const &options = {});
Instance build_ex65(PermGroup const &t, PermGroup const &a, PermGroup const &b,
                    PermGroup const &c, BuildOptions const &options = {});
/// The M-normal system on the same action as an ex64 or ex65 instance.
Instance build_companion_normal(PermGroup const &t, std::vector<PermGroup> const &factors,
                                BuildOptions const &options = {});

/// An automorphism of a small group given as a table on its elements.
class AutomorphismTable {
public:
  AutomorphismTable(PermGroup group, std::unordered_map<Permutation, Permutation> map);

  PermGroup const &group() const { return group_; }
  Permutation apply(Permutation const &x) const;
  PermGroup apply(PermGroup const &subgroup) const;

  /// Bijective on the group and multiplicative.
  bool is_automorphism() const;
  bool is_involution() const;

private:
  PermGroup group_;
  std::unordered_map<Permutation, Permutation> map_;
};

/// Parses the shipped automorphism fixture of Alt(6).
AutomorphismTable parse_automorphism_table(std::string const &text);
std::string const &tau_fixture_text();

struct TauCheck {
  bool automorphism = false;
  bool involution = false;
  bool swaps_classes = false;
};

/// A = stabilizer of the last point, B = its image under the table.
TauCheck check_tau(AutomorphismTable const &tau);

/// Named instances with their default parameters.
std::vector<std::string> catalog_names();
Instance build_instance(std::string const &name, BuildOptions const &options = {});
/// Instances that need parameters (ex61, ex62, ex64, ex65, companion_normal).
Instance build_instance(std::string const &name, FactorParams const &params,
                        BuildOptions const &options = {});

/// One line per expected field that recomputation does not reproduce.
std::vector<std::string> validate_instance(Instance const &instance);

} // namespace cartdec

#endif
