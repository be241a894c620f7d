#pragma once

// Cox's quotient presentation q : Z -> X of the toric variety of a fan.
//
// For a fan Δ with rays ϱ_1..ϱ_m, Q : Z^m -> N sends e_i to the primitive
// generator of ϱ_i. Each maximal cone τ gives the orthant face
// σ(τ) = cone(e_i : ϱ_i ⊆ τ); these form the fan Σ of the open set Z ⊆ K^m.
// The kernel H of the induced map of big tori has relation lattice im(Q^T),
// and its character group Z^m / im(Q^T) grades the Cox coordinates.

#include <cstddef>
#include <vector>

#include "toricq/fans.hpp"
#include "toricq/groups.hpp"

namespace toricq {

struct CoxPresentation {
  Fan delta;
  IntMatrix q_matrix;  // n x m
  Fan sigma;           // in Z^m
  DiagonalizableSubgroup kernel_group;

  std::size_t ray_count() const { return q_matrix.cols(); }
};

CoxPresentation cox_presentation(const Fan& delta);

/// Ray indices of the maximal cones, the sets I(τ).
std::vector<std::vector<std::size_t>> max_cone_index_sets(const Fan& delta);

/// Smallest dimension of an orthant face missing from Σ, i.e. the
/// codimension of K^m \ Z. Returns m + 1 when the complement is empty.
std::size_t complement_codim(const CoxPresentation& p);

/// Every stabilizer H ∩ T_{I(τ)} is trivial.
bool acts_freely(const CoxPresentation& p);

/// Every maximal cone is smooth.
bool variety_is_smooth(const Fan& delta);

/// Degree of a Laurent monomial z^a in Z^m / im(Q^T). The free part is
/// <k_j, a> for the Hermite basis k_j of ker Q; torsion residues come from
/// the Smith form of Q^T and lie in [0, c_i).
struct ClassGroupElement {
  IntVector free_part;
  IntVector torsion_part;
  friend bool operator==(const ClassGroupElement&, const ClassGroupElement&) = default;
};

/// Throws HypothesisError for degenerate fans.
CokernelInvariants class_group(const CoxPresentation& p);
ClassGroupElement degree_of_monomial(const CoxPresentation& p, const IntVector& exponents);
ClassGroupElement add(const CoxPresentation& p, const ClassGroupElement& a, const ClassGroupElement& b);

/// Lifting of a subtorus T ⊆ T_X, given by an injective cocharacter map
/// iota (n x r), to a diagonal action on K^m: Q W^T = d * iota with d minimal.
struct SubtorusLift {
  IntMatrix weights;  // r x m
  Integer degree;
  bool effective = false;
};

/// Throws HypothesisError if iota is not injective and
/// InternalConsistencyError if some column has no rational preimage.
SubtorusLift lift_subtorus(const CoxPresentation& p, const IntMatrix& iota);

}  // namespace toricq
