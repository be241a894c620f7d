#pragma once

// End-to-end check that a codimension-one torus action, already lifted to
// weights W on the Cox coordinates, sits inside the big torus of X.
//
// Steps, in order: nondegeneracy of Δ, convex support of Δ (sufficient for
// "no small holes"), the Cox presentation, effectivity of W, and the
// dimension count for the group generated by the image of T and by H. On
// success the composite Q W^T is the cocharacter embedding T -> T_X.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricq/cox.hpp"

namespace toricq {

/// Stable names: degenerate-fan, holes-not-certified, ineffective-action,
/// wrong-dimension.
enum class Diagnostic { degenerate_fan, holes_not_certified, ineffective_action, wrong_dimension };

std::string to_string(Diagnostic d);

struct PipelineReport {
  bool nondegenerate = false;
  SupportVerdict no_small_holes = SupportVerdict::not_certified;

  std::size_t ray_count = 0;
  std::optional<CokernelInvariants> class_group;  // absent for degenerate fans
  SubgroupDecomposition kernel_decomposition;
  std::size_t complement_codim = 0;

  std::size_t input_torus_rank = 0;
  bool effective = false;
  /// m - rank(ker W ∩ im Q^T): dimension of the subgroup of (K*)^m generated
  /// by the image of T and by H.
  std::size_t combined_dimension = 0;
  /// Q W^T, always computed.
  IntMatrix image;
  bool hypotheses_met = false;
  /// Q W^T and the saturation of its column span; present iff hypotheses_met.
  std::optional<IntMatrix> embedding;
  std::optional<IntMatrix> saturated_embedding;
  Integer isogeny_degree = 1;
  std::vector<Diagnostic> diagnostics;
};

/// Throws ShapeError when W does not have one column per ray of Δ.
PipelineReport theorem_pipeline(const Fan& delta, const WeightAction& w);

nlohmann::json to_json(const PipelineReport& report);

/// Rank of (ker W ⊗ Q) ∩ (im Q^T ⊗ Q) inside Q^m.
std::size_t intersection_rank(const IntMatrix& weights, const IntMatrix& q_matrix);

}  // namespace toricq
