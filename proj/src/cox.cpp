#include "toricq/cox.hpp"

#include <algorithm>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

Fan orthant_fan(std::size_t m, const std::vector<std::vector<std::size_t>>& index_sets) {
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return Fan(m, std::move(basis), index_sets);
}

bool contained_in_some(const std::vector<std::size_t>& subset, const std::vector<std::vector<std::size_t>>& sets) {
  return std::any_of(sets.begin(), sets.end(), [&](const std::vector<std::size_t>& s) {
    return std::includes(s.begin(), s.end(), subset.begin(), subset.end());
  });
}

}  // namespace

std::vector<std::vector<std::size_t>> max_cone_index_sets(const Fan& delta) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : delta.max_cones()) out.push_back(c.rays);
  return out;
}

CoxPresentation cox_presentation(const Fan& delta) {
  IntMatrix q = ray_matrix(delta);
  const std::size_t m = q.cols();
  Fan sigma = orthant_fan(m, max_cone_index_sets(delta));
  DiagonalizableSubgroup h(m, q.transpose());
  return CoxPresentation{delta, std::move(q), std::move(sigma), std::move(h)};
}

std::size_t complement_codim(const CoxPresentation& p) {
  const std::size_t m = p.ray_count();
  const auto sets = max_cone_index_sets(p.delta);
  for (std::size_t k = 1; k <= m; ++k) {
    // Walk through the k-subsets of {0..m-1} in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!contained_in_some(idx, sets)) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return m + 1;
}

bool acts_freely(const CoxPresentation& p) {
  for (const auto& idx : max_cone_index_sets(p.delta)) {
    // Projection of im(Q^T) onto the coordinates I(τ) must be all of Z^I.
    IntMatrix projected = p.q_matrix.select_columns(idx).transpose();
    CokernelInvariants inv = cokernel_invariants(projected);
    if (inv.free_rank != 0 || !inv.torsion.empty()) return false;
  }
  return true;
}

bool variety_is_smooth(const Fan& delta) {
  return std::all_of(delta.max_cones().begin(), delta.max_cones().end(),
                     [](const FanCone& c) { return is_smooth(c.cone); });
}

CokernelInvariants class_group(const CoxPresentation& p) {
  if (!is_nondegenerate(p.delta)) throw HypothesisError("class group requested for a degenerate fan");
  return cokernel_invariants(p.q_matrix.transpose());
}

ClassGroupElement degree_of_monomial(const CoxPresentation& p, const IntVector& exponents) {
  if (!is_nondegenerate(p.delta)) throw HypothesisError("class group requested for a degenerate fan");
  if (exponents.size() != p.ray_count()) throw ShapeError("exponent vector has the wrong length");
  ClassGroupElement deg;
  for (const auto& k : kernel_basis(p.q_matrix)) deg.free_part.push_back(dot(k, exponents));
  SnfResult s = smith_normal_form(p.q_matrix.transpose());
  IntVector w = s.u * exponents;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (s.d(i, i) > 1) deg.torsion_part.push_back(floor_mod(w[i], s.d(i, i)));
  return deg;
}

ClassGroupElement add(const CoxPresentation& p, const ClassGroupElement& a, const ClassGroupElement& b) {
  CokernelInvariants inv = class_group(p);
  if (a.free_part.size() != inv.free_rank || b.free_part.size() != inv.free_rank ||
      a.torsion_part.size() != inv.torsion.size() || b.torsion_part.size() != inv.torsion.size())
    throw ShapeError("class group elements of the wrong shape");
  ClassGroupElement c;
  c.free_part = toricq::add(a.free_part, b.free_part);
  for (std::size_t i = 0; i < inv.torsion.size(); ++i)
    c.torsion_part.push_back(floor_mod(a.torsion_part[i] + b.torsion_part[i], inv.torsion[i]));
  return c;
}

SubtorusLift lift_subtorus(const CoxPresentation& p, const IntMatrix& iota) {
  const IntMatrix& q = p.q_matrix;
  if (iota.rows() != q.rows()) throw ShapeError("iota must have one row per lattice coordinate");
  if (rank(iota) != iota.cols()) throw HypothesisError("iota is not injective");

  SubtorusLift lift;
  lift.degree = 1;
  for (std::size_t j = 0; j < iota.cols(); ++j) {
    auto dj = divisibility_index(q, iota.column(j));
    if (!dj) throw InternalConsistencyError("iota column " + std::to_string(j) + " is not in the span of the rays");
    lift.degree = lcm(lift.degree, *dj);
  }
  std::vector<IntVector> rows;
  for (std::size_t j = 0; j < iota.cols(); ++j) {
    auto x = solve_integer(q, scale(iota.column(j), lift.degree));
    if (!x) throw InternalConsistencyError("no integral lift after scaling by the divisibility index");
    rows.push_back(std::move(*x));
  }
  lift.weights = IntMatrix::from_rows(q.cols(), rows);
  IntMatrix target = iota;
  for (std::size_t i = 0; i < target.rows(); ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) target(i, j) *= lift.degree;
  if (q * lift.weights.transpose() != target) throw InternalConsistencyError("lift does not satisfy Q W^T = d iota");
  lift.effective = is_effective(WeightAction{lift.weights});
  return lift;
}

}  // namespace toricq
