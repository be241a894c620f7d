#pragma once

// Diagonalizable subgroups of the standard torus (K*)^m, monomial matrices,
// weight actions, and the character arithmetic used when lifting actions.
//
// A subgroup G is stored by its relation lattice L ⊆ Z^m: the characters
// z^a with t^a = 1 for all t in G. Roots of unity are exponents in Q/Z.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "toricq/intlin.hpp"

namespace toricq {

class DiagonalizableSubgroup {
 public:
  /// Columns of `relations` generate L; it must have `ambient` rows.
  DiagonalizableSubgroup(std::size_t ambient, IntMatrix relations);

  static DiagonalizableSubgroup whole_torus(std::size_t ambient);
  static DiagonalizableSubgroup trivial(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  const IntMatrix& relations() const { return relations_; }
  std::size_t dimension() const;
  /// L is saturated.
  bool is_connected() const;

 private:
  std::size_t ambient_;
  IntMatrix relations_;
};

/// Linear map z -> g.z with (g.z)_i = zeta^{scalars[i]} * z_{perm^{-1}(i)}, so
/// g sends the hyperplane V(z_j) to V(z_{perm[j]}).
class MonomialMatrix {
 public:
  /// `perm[j]` is the image of j; scalars are reduced into [0, 1).
  MonomialMatrix(std::vector<std::size_t> perm, std::vector<Rational> scalars);

  static MonomialMatrix identity(std::size_t m);

  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  const std::vector<Rational>& scalars() const { return scalars_; }

  MonomialMatrix inverse() const;
  /// Order in the group of monomial matrices.
  std::size_t order() const;

  friend MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<Rational> scalars_;
};

/// Diagonal action of an r-torus on K^m; column i is the weight of z_i.
struct WeightAction {
  IntMatrix weights;

  std::size_t torus_rank() const { return weights.rows(); }
  std::size_t ambient() const { return weights.cols(); }
};

DiagonalizableSubgroup subgroup_from_weights(const WeightAction& w);

/// The torus acts with trivial kernel.
bool is_effective(const WeightAction& w);

struct QuotientPoint {
  friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

/// Quotient map K^m -> K, z -> z^exponents.
struct QuotientMonomial {
  IntVector exponents;
  friend bool operator==(const QuotientMonomial&, const QuotientMonomial&) = default;
};

using QuotientKind = std::variant<QuotientPoint, QuotientMonomial>;

/// For a connected subgroup of dimension m-1: a monomial quotient exactly when
/// the primitive generator of L has a sign. Throws HypothesisError otherwise.
QuotientKind classify_quotient(const DiagonalizableSubgroup& g0);

/// Primitive generator of a rank-one relation lattice, first nonzero entry
/// positive. Throws HypothesisError if L does not have rank one.
IntVector relation_generator(const DiagonalizableSubgroup& g);

/// T_i = {(1,..,t,..,1)} ⊆ G.
bool contains_coordinate_subtorus(const DiagonalizableSubgroup& g, std::size_t i);

/// Conjugation by g maps G0 onto itself (the permutation of g preserves L).
bool commutes_with_torus(const MonomialMatrix& g, const DiagonalizableSubgroup& g0);

/// g t = t g for every t in G0.
bool centralizes(const MonomialMatrix& g, const DiagonalizableSubgroup& g0);

struct HyperplaneReport {
  /// pi[j] = index of the image of V(z_j).
  std::vector<std::size_t> pi;
  bool fixes_zero_support = false;
  bool permutes_positive_support = false;
};

HyperplaneReport hyperplane_permutation_report(const MonomialMatrix& g, const IntVector& exponents);

/// kappa^T xi = d * xi0 with |det kappa| = d / gcd(d, gcd(xi)).
struct Isogeny {
  IntMatrix kappa;
  IntVector xi0;
};

/// Throws DomainError for d = 0 or empty xi.
Isogeny character_root_isogeny(const IntVector& xi, const Integer& d);

struct SubgroupDecomposition {
  std::size_t torus_rank = 0;
  std::vector<Integer> cyclic_orders;
  friend bool operator==(const SubgroupDecomposition&, const SubgroupDecomposition&) = default;
};

/// G ≅ (K*)^torus_rank x Z/c_1 x ... x Z/c_k.
SubgroupDecomposition decompose_subgroup(const DiagonalizableSubgroup& g);

/// Reduce a rational number into [0, 1).
Rational fractional_part(const Rational& q);

}  // namespace toricq
