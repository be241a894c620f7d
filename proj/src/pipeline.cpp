#include "toricq/pipeline.hpp"

#include "toricq/errors.hpp"
#include "toricq/io.hpp"

namespace toricq {

std::string to_string(Diagnostic d) {
  switch (d) {
    case Diagnostic::degenerate_fan:
      return "degenerate-fan";
    case Diagnostic::holes_not_certified:
      return "holes-not-certified";
    case Diagnostic::ineffective_action:
      return "ineffective-action";
    case Diagnostic::wrong_dimension:
      return "wrong-dimension";
  }
  return "unknown";
}

std::size_t intersection_rank(const IntMatrix& weights, const IntMatrix& q_matrix) {
  const std::size_t m = weights.cols();
  if (q_matrix.cols() != m) throw ShapeError("intersection_rank: weights and Q act on different Z^m");
  IntMatrix kernel = IntMatrix::from_columns(m, kernel_basis(weights));
  IntMatrix image = q_matrix.transpose();
  return rank(kernel) + rank(image) - rank(kernel.hconcat(image));
}

PipelineReport theorem_pipeline(const Fan& delta, const WeightAction& w) {
  const std::size_t n = delta.rank();
  const std::size_t m = delta.ray_count();
  if (w.ambient() != m)
    throw ShapeError("weight matrix has " + std::to_string(w.ambient()) + " columns but the fan has " +
                     std::to_string(m) + " rays");

  PipelineReport r;
  r.input_torus_rank = w.torus_rank();

  r.nondegenerate = is_nondegenerate(delta);
  if (!r.nondegenerate) r.diagnostics.push_back(Diagnostic::degenerate_fan);

  r.no_small_holes = convex_support_report(delta).verdict;
  if (r.no_small_holes != SupportVerdict::convex) r.diagnostics.push_back(Diagnostic::holes_not_certified);

  CoxPresentation cox = cox_presentation(delta);
  r.ray_count = m;
  if (r.nondegenerate) r.class_group = class_group(cox);
  r.kernel_decomposition = decompose_subgroup(cox.kernel_group);
  r.complement_codim = complement_codim(cox);

  r.effective = is_effective(w);
  if (!r.effective) r.diagnostics.push_back(Diagnostic::ineffective_action);

  r.combined_dimension = m - intersection_rank(w.weights, cox.q_matrix);
  r.image = cox.q_matrix * w.weights.transpose();
  const bool rank_ok = w.torus_rank() + 1 == n;
  const bool group_ok = r.combined_dimension + 1 == m;
  const bool image_ok = rank(r.image) == w.torus_rank();
  if (!rank_ok || !group_ok || !image_ok) r.diagnostics.push_back(Diagnostic::wrong_dimension);

  r.hypotheses_met = r.diagnostics.empty();
  if (r.hypotheses_met) {
    r.embedding = r.image;
    r.saturated_embedding = saturation(r.image);
  }
  return r;
}

nlohmann::json to_json(const PipelineReport& r) {
  using nlohmann::json;
  json diagnostics = json::array();
  for (auto d : r.diagnostics) diagnostics.push_back(to_string(d));
  json class_group = nullptr;
  if (r.class_group) {
    json torsion = json::array();
    for (const auto& t : r.class_group->torsion) torsion.push_back(io::integer_to_json(t));
    class_group = json{{"free", r.class_group->free_rank}, {"torsion", torsion}};
  }
  json cyclic = json::array();
  for (const auto& c : r.kernel_decomposition.cyclic_orders) cyclic.push_back(io::integer_to_json(c));
  json holes = r.no_small_holes == SupportVerdict::not_certified
                   ? json("not-certified")
                   : json(r.no_small_holes == SupportVerdict::convex);
  return json{
      {"nondegenerate", r.nondegenerate},
      {"no_small_holes_certified", holes},
      {"cox_data",
       {{"m", r.ray_count},
        {"class_group", class_group},
        {"kernel_group", {{"torus_rank", r.kernel_decomposition.torus_rank}, {"cyclic_orders", cyclic}}},
        {"complement_codim", r.complement_codim}}},
      {"input_torus_rank", r.input_torus_rank},
      {"effective", r.effective},
      {"combined_dimension", r.combined_dimension},
      {"image", io::matrix_to_json(r.image)},
      {"hypotheses_met", r.hypotheses_met},
      {"embedding", r.embedding ? io::matrix_to_json(*r.embedding) : json(nullptr)},
      {"saturated_embedding", r.saturated_embedding ? io::matrix_to_json(*r.saturated_embedding) : json(nullptr)},
      {"isogeny_degree", io::integer_to_json(r.isogeny_degree)},
      {"diagnostics", diagnostics},
  };
}

}  // namespace toricq
