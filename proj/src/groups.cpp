#include "toricq/groups.hpp"

#include <algorithm>
#include <numeric>

#include "toricq/errors.hpp"

namespace toricq {

Rational fractional_part(const Rational& q) {
  Rational r(q.get_num() - floor_div(q.get_num(), q.get_den()) * q.get_den(), q.get_den());
  r.canonicalize();
  return r;
}

DiagonalizableSubgroup::DiagonalizableSubgroup(std::size_t ambient, IntMatrix relations)
    : ambient_(ambient), relations_(std::move(relations)) {
  if (relations_.rows() != ambient_) throw ShapeError("relation lattice has the wrong ambient dimension");
}

DiagonalizableSubgroup DiagonalizableSubgroup::whole_torus(std::size_t ambient) {
  return DiagonalizableSubgroup(ambient, IntMatrix(ambient, 0));
}

DiagonalizableSubgroup DiagonalizableSubgroup::trivial(std::size_t ambient) {
  return DiagonalizableSubgroup(ambient, IntMatrix::identity(ambient));
}

std::size_t DiagonalizableSubgroup::dimension() const { return ambient_ - rank(relations_); }

bool DiagonalizableSubgroup::is_connected() const { return cokernel_invariants(relations_).torsion.empty(); }

// ---------------------------------------------------------------------------

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<Rational> scalars)
    : perm_(std::move(perm)), scalars_(std::move(scalars)) {
  if (scalars_.size() != perm_.size()) throw ShapeError("monomial matrix: perm and scalars differ in length");
  std::vector<bool> hit(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || hit[p]) throw DomainError("monomial matrix: perm is not a permutation");
    hit[p] = true;
  }
  for (auto& q : scalars_) q = fractional_part(q);
}

MonomialMatrix MonomialMatrix::identity(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialMatrix(std::move(p), std::vector<Rational>(m, Rational(0)));
}

// (g h . z)_i = zeta^{q^g_i} (h.z)_{pg^{-1}(i)} = zeta^{q^g_i + q^h_{pg^{-1}(i)}} z_{ph^{-1} pg^{-1}(i)}
MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h) {
  if (g.size() != h.size()) throw ShapeError("monomial matrices of different sizes");
  const std::size_t m = g.size();
  std::vector<std::size_t> ginv(m);
  for (std::size_t j = 0; j < m; ++j) ginv[g.perm_[j]] = j;
  std::vector<std::size_t> perm(m);
  std::vector<Rational> scalars(m);
  for (std::size_t j = 0; j < m; ++j) perm[j] = g.perm_[h.perm_[j]];
  for (std::size_t i = 0; i < m; ++i) scalars[i] = g.scalars_[i] + h.scalars_[ginv[i]];
  return MonomialMatrix(std::move(perm), std::move(scalars));
}

MonomialMatrix MonomialMatrix::inverse() const {
  const std::size_t m = size();
  std::vector<std::size_t> inv(m);
  for (std::size_t j = 0; j < m; ++j) inv[perm_[j]] = j;
  std::vector<Rational> scalars(m);
  for (std::size_t j = 0; j < m; ++j) scalars[j] = -scalars_[perm_[j]];
  return MonomialMatrix(std::move(inv), std::move(scalars));
}

std::size_t MonomialMatrix::order() const {
  const MonomialMatrix id = identity(size());
  MonomialMatrix power = *this;
  std::size_t k = 1;
  while (!(power == id)) {
    power = power * *this;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

DiagonalizableSubgroup subgroup_from_weights(const WeightAction& w) {
  std::vector<IntVector> ker = kernel_basis(w.weights);
  return DiagonalizableSubgroup(w.ambient(), IntMatrix::from_columns(w.ambient(), ker));
}

bool is_effective(const WeightAction& w) {
  SnfResult s = smith_normal_form(w.weights);
  if (s.rank() != w.torus_rank()) return false;
  for (const auto& f : s.invariant_factors())
    if (f != 1) return false;
  return true;
}

IntVector relation_generator(const DiagonalizableSubgroup& g) {
  HnfResult h = row_hermite_form(g.relations().transpose());
  if (h.rank != 1) throw HypothesisError("relation lattice does not have rank one");
  return primitive_vector(h.h.row(0));
}

QuotientKind classify_quotient(const DiagonalizableSubgroup& g0) {
  const std::size_t m = g0.ambient();
  if (m == 0 || g0.dimension() + 1 != m)
    throw HypothesisError("quotient classification needs a subgroup of dimension m-1");
  if (!g0.is_connected()) throw HypothesisError("quotient classification needs a connected subgroup");
  IntVector a = relation_generator(g0);
  const bool nonneg = std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 0; });
  const bool nonpos = std::all_of(a.begin(), a.end(), [](const Integer& x) { return x <= 0; });
  if (!nonneg && !nonpos) return QuotientPoint{};
  for (auto& x : a) x = abs(x);
  return QuotientMonomial{std::move(a)};
}

bool contains_coordinate_subtorus(const DiagonalizableSubgroup& g, std::size_t i) {
  if (i >= g.ambient()) throw ShapeError("coordinate index out of range");
  for (std::size_t j = 0; j < g.relations().cols(); ++j)
    if (g.relations()(i, j) != 0) return false;
  return true;
}

bool commutes_with_torus(const MonomialMatrix& g, const DiagonalizableSubgroup& g0) {
  if (g.size() != g0.ambient()) throw ShapeError("monomial matrix and subgroup of different sizes");
  // (g t g^{-1})_i = t_{pi^{-1}(i)}; the character a pulls back to j -> a_{pi(j)}.
  const auto& pi = g.permutation();
  for (const auto& a : g0.relations().column_list()) {
    IntVector moved(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) moved[j] = a[pi[j]];
    if (!lattice_membership(g0.relations(), moved)) return false;
  }
  return true;
}

bool centralizes(const MonomialMatrix& g, const DiagonalizableSubgroup& g0) {
  if (g.size() != g0.ambient()) throw ShapeError("monomial matrix and subgroup of different sizes");
  // g t g^{-1} = t on G0 iff t_{pi^{-1}(i)} / t_i is trivial there for every i.
  const auto& pi = g.permutation();
  const std::size_t m = g.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (pi[j] == j) continue;
    IntVector chi(m);
    chi[j] += 1;
    chi[pi[j]] -= 1;
    if (!lattice_membership(g0.relations(), chi)) return false;
  }
  return true;
}

HyperplaneReport hyperplane_permutation_report(const MonomialMatrix& g, const IntVector& exponents) {
  if (g.size() != exponents.size()) throw ShapeError("monomial matrix and exponent vector of different sizes");
  HyperplaneReport r;
  r.pi = g.permutation();
  r.fixes_zero_support = true;
  r.permutes_positive_support = true;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0 && r.pi[j] != j) r.fixes_zero_support = false;
    if ((exponents[j] > 0) != (exponents[r.pi[j]] > 0)) r.permutes_positive_support = false;
  }
  return r;
}

Isogeny character_root_isogeny(const IntVector& xi, const Integer& d) {
  if (d <= 0) throw DomainError("isogeny degree must be positive");
  const std::size_t r = xi.size();
  if (r == 0) throw DomainError("character must have at least one coordinate");
  if (is_zero(xi)) return {IntMatrix::identity(r), IntVector(r)};

  // U xi = (g, 0, ..., 0) from the Smith form of xi as a column.
  SnfResult s = smith_normal_form(IntMatrix::from_columns(r, {xi}));
  IntMatrix u = s.u;
  if (s.v(0, 0) < 0) u.negate_row(0);
  const Integer g = s.d(0, 0);
  Integer common;
  mpz_gcd(common.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  const Integer e = d / common;

  IntMatrix kappa_t = u;
  for (std::size_t j = 0; j < r; ++j) kappa_t(0, j) *= e;
  IntVector image = kappa_t * xi;
  IntVector xi0(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!mpz_divisible_p(image[i].get_mpz_t(), d.get_mpz_t()))
      throw InternalConsistencyError("isogeny does not make xi divisible by d");
    mpz_divexact(xi0[i].get_mpz_t(), image[i].get_mpz_t(), d.get_mpz_t());
  }
  return {kappa_t.transpose(), std::move(xi0)};
}

SubgroupDecomposition decompose_subgroup(const DiagonalizableSubgroup& g) {
  CokernelInvariants inv = cokernel_invariants(g.relations());
  return {inv.free_rank, inv.torsion};
}

}  // namespace toricq
