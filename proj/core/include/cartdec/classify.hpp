#ifndef CARTDEC_CLASSIFY_HPP
#define CARTDEC_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cartdec/cartesian.hpp"
#include "cartdec/perm_group.hpp"

namespace cartdec {

/// Default cap on the order of a simple factor scanned element by element.
inline constexpr std::size_t kDefaultFactorCap = 10'000;

/// Transitive minimal normal subgroups of a transitive group.
std::vector<PermGroup> plinths(PermGroup const &group, std::size_t cap = kDefaultElementCap);

bool is_innately_transitive(PermGroup const &group, std::size_t cap = kDefaultElementCap);

/// Throws StructureError for an abelian plinth.
void require_nonabelian_plinth(PermGroup const &plinth);

/// M as an internal direct product of simple subgroups T_1..T_k.
class DirectFactorization {
public:
  /// Verifies that the factors are simple, commute pairwise and multiply to
  /// the plinth. Throws StructureError otherwise.
  DirectFactorization(PermGroup plinth, std::vector<PermGroup> factors,
                      std::size_t factor_cap = kDefaultFactorCap);

  PermGroup const &plinth() const { return plinth_; }
  std::size_t size() const { return factors_.size(); }
  std::vector<PermGroup> const &factors() const { return factors_; }
  PermGroup const &factor(std::size_t i) const { return factors_.at(i); }
  /// Product of every factor except the i-th.
  PermGroup const &complement(std::size_t i) const { return complements_.at(i); }

  /// sigma_i(m): the t in T_i with m * t^-1 in the complement.
  Permutation project(Permutation const &m, std::size_t i) const;
  PermGroup project(PermGroup const &subgroup, std::size_t i) const;

  /// Product of the factors listed in `cell`.
  PermGroup product(std::vector<std::size_t> const &cell) const;

private:
  PermGroup plinth_;
  std::vector<PermGroup> factors_;
  std::vector<PermGroup> complements_;
  std::vector<std::vector<Permutation>> elements_;
};

/// Finds the simple direct factors of a nonabelian characteristically simple
/// group. Factors are ordered by their least moved point.
DirectFactorization simple_direct_factors(PermGroup const &plinth,
                                          std::size_t factor_cap = kDefaultFactorCap);

bool is_simple_group(PermGroup const &group, std::size_t cap = kDefaultFactorCap);

/// T_i = sigma_i(K_j) * (intersection over m != j of sigma_i(K_m)).
bool projective_factorization_holds(DirectFactorization const &f,
                                    std::vector<PermGroup> const &ks, std::size_t i,
                                    std::size_t j);

struct FactorSet {
  std::size_t factor = 0;
  std::vector<PermGroup> subgroups;
};

/// Distinct proper projections per factor. Throws StructureError if some
/// set has more than three members or the sizes differ between factors.
std::vector<FactorSet> factor_sets(DirectFactorization const &f,
                                   std::vector<PermGroup> const &ks);

/// T = A(B n C) = B(C n A) = C(A n B). Throws InputError unless A, B, C are
/// proper subgroups of T.
bool is_strong_multiple_factorization(PermGroup const &t, PermGroup const &a,
                                      PermGroup const &b, PermGroup const &c);

/// cells[i] lists the factors (0-based) making up M_i, so that
/// K_i = (M_i n M_omega) x prod_{j != i} M_j.
using NormalWitness = std::vector<std::vector<std::size_t>>;

std::optional<NormalWitness> find_normal_witness(DirectFactorization const &f,
                                                 CartesianSystem const &system);

struct DiagonalPair {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t system_index = 0;
};

std::vector<DiagonalPair> diagonal_profile(DirectFactorization const &f,
                                           std::vector<PermGroup> const &ks);

/// Throws StructureError unless `plinth` is a nonabelian normal subgroup of
/// `group` whose simple factors are permuted transitively, and is transitive
/// on the points (or on the cosets of `g_omega` when the system has no base
/// point).
void verify_plinth(PermGroup const &group, DirectFactorization const &f,
                   CartesianSystem const &system, std::optional<PermGroup> const &g_omega);

/// G_omega restricted to its conjugation action on the system is transitive.
bool conjugation_transitive(PermGroup const &g_omega, std::vector<PermGroup> const &ks);

struct ClassificationReport {
  std::size_t ell = 0;
  std::optional<bool> homogeneous;
  std::optional<bool> g_transitive;
  std::optional<NormalWitness> normal_cells;
  std::size_t factor_set_size = 0;
  std::vector<FactorSet> factor_sets;
  std::vector<DiagonalPair> diagonal_pairs;
  bool smf_detected = false;
};

struct ClassifyOptions {
  std::size_t max_degree = 20'000;
  std::size_t factor_cap = kDefaultFactorCap;
  /// Used instead of computing the factors when present.
  std::optional<DirectFactorization> factorization;
};

/// Full report for a Cartesian system of `group`. `g_omega` is required when
/// the system has no base point; otherwise it is computed.
ClassificationReport classify_system(PermGroup const &group, CartesianSystem const &system,
                                     std::optional<PermGroup> g_omega = {},
                                     ClassifyOptions const &options = {});

} // namespace cartdec

#endif
