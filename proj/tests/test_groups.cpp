#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricq/errors.hpp"
#include "toricq/groups.hpp"

using namespace toricq;

namespace {

IntVector v(std::initializer_list<long> xs) { return to_int_vector(xs); }

DiagonalizableSubgroup by_relations(std::size_t m, std::vector<IntVector> gens) {
  return DiagonalizableSubgroup(m, IntMatrix::from_columns(m, gens));
}

MonomialMatrix perm(std::vector<std::size_t> p) {
  return MonomialMatrix(p, std::vector<Rational>(p.size(), Rational(0)));
}

}  // namespace

TEST_CASE("subgroups from weights") {
  auto g = subgroup_from_weights(WeightAction{IntMatrix{{1, -1}}});
  CHECK(g.dimension() == 1);
  CHECK(relation_generator(g) == v({1, 1}));

  auto whole = subgroup_from_weights(WeightAction{IntMatrix::identity(3)});
  CHECK(rank(whole.relations()) == 0);
  CHECK(whole.dimension() == 3);

  auto h = subgroup_from_weights(WeightAction{IntMatrix{{1, 2, 1}}});
  CHECK(rank(h.relations()) == 2);
  CHECK(h.dimension() == 1);

  CHECK(DiagonalizableSubgroup::trivial(3).dimension() == 0);
  CHECK(DiagonalizableSubgroup::whole_torus(3).is_connected());
  CHECK_FALSE(by_relations(1, {v({2})}).is_connected());
}

TEST_CASE("effectivity") {
  CHECK(is_effective(WeightAction{IntMatrix{{1, -1}}}));
  CHECK_FALSE(is_effective(WeightAction{IntMatrix{{2}}}));
  CHECK(is_effective(WeightAction{IntMatrix{{1, 0, 0}, {0, 1, 1}}}));
  CHECK_FALSE(is_effective(WeightAction{IntMatrix{{1, 1}, {1, 1}}}));
}

TEST_CASE("quotient classification") {
  auto anti = subgroup_from_weights(WeightAction{IntMatrix{{1, -1}}});
  auto k = classify_quotient(anti);
  REQUIRE(std::holds_alternative<QuotientMonomial>(k));
  CHECK(std::get<QuotientMonomial>(k).exponents == v({1, 1}));

  auto diag = subgroup_from_weights(WeightAction{IntMatrix{{1, 1}}});
  CHECK(std::holds_alternative<QuotientPoint>(classify_quotient(diag)));

  auto second = subgroup_from_weights(WeightAction{IntMatrix{{0, 1}}});
  auto k2 = classify_quotient(second);
  REQUIRE(std::holds_alternative<QuotientMonomial>(k2));
  CHECK(std::get<QuotientMonomial>(k2).exponents == v({1, 0}));

  CHECK_THROWS_AS(classify_quotient(by_relations(2, {v({2, 2})})), HypothesisError);
  CHECK_THROWS_AS(classify_quotient(DiagonalizableSubgroup::whole_torus(2)), HypothesisError);
}

TEST_CASE("coordinate subtori") {
  CHECK(contains_coordinate_subtorus(DiagonalizableSubgroup::whole_torus(3), 1));
  CHECK_FALSE(contains_coordinate_subtorus(by_relations(2, {v({1, 1})}), 0));
  auto g = by_relations(3, {v({1, 0, 0})});
  CHECK(contains_coordinate_subtorus(g, 1));
  CHECK(contains_coordinate_subtorus(g, 2));
  CHECK_FALSE(contains_coordinate_subtorus(g, 0));
}

TEST_CASE("monomial matrices") {
  MonomialMatrix g({1, 2, 0}, {Rational(1, 2), Rational(0), Rational(5, 3)});
  CHECK(g.scalars()[2] == Rational(2, 3));
  CHECK(g * g.inverse() == MonomialMatrix::identity(3));
  CHECK(g.inverse() * g == MonomialMatrix::identity(3));
  CHECK(MonomialMatrix::identity(3).order() == 1);
  CHECK(perm({1, 0}).order() == 2);
  // The cube of the 3-cycle has scalars equal to the sum of all of them.
  CHECK(g.order() == 18);
  MonomialMatrix h({0, 2, 1}, {Rational(1, 4), Rational(0), Rational(0)});
  CHECK((g * h) * g.inverse() == g * (h * g.inverse()));
  CHECK_THROWS_AS(MonomialMatrix({0, 0}, {Rational(0), Rational(0)}), DomainError);
  CHECK(fractional_part(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("commuting with the torus") {
  auto g0 = by_relations(2, {v({1, 1})});
  CHECK(commutes_with_torus(MonomialMatrix::identity(2), g0));
  CHECK(commutes_with_torus(perm({1, 0}), g0));
  CHECK_FALSE(commutes_with_torus(perm({1, 0}), by_relations(2, {v({1, 0})})));
  CHECK(centralizes(MonomialMatrix::identity(2), g0));
  CHECK_FALSE(centralizes(perm({1, 0}), g0));
  CHECK(centralizes(perm({1, 0}), by_relations(2, {v({1, -1})})));
}

TEST_CASE("hyperplane permutation report") {
  auto id = hyperplane_permutation_report(MonomialMatrix::identity(3), v({1, 1, 0}));
  CHECK(id.fixes_zero_support);
  CHECK(id.permutes_positive_support);

  auto sw = hyperplane_permutation_report(perm({1, 0, 2}), v({1, 1, 0}));
  CHECK(sw.pi == std::vector<std::size_t>{1, 0, 2});
  CHECK(sw.fixes_zero_support);
  CHECK(sw.permutes_positive_support);

  auto bad = hyperplane_permutation_report(perm({0, 2, 1}), v({1, 1, 0}));
  CHECK_FALSE(bad.permutes_positive_support);
  CHECK_FALSE(bad.fixes_zero_support);
}

TEST_CASE("character roots") {
  auto zero = character_root_isogeny(v({0, 0}), 3);
  CHECK(zero.kappa == IntMatrix::identity(2));
  CHECK(zero.xi0 == v({0, 0}));

  auto a = character_root_isogeny(v({1, 0}), 2);
  CHECK(abs(determinant(a.kappa)) == 2);
  CHECK(a.kappa.transpose() * v({1, 0}) == scale(a.xi0, 2));

  auto b = character_root_isogeny(v({2}), 2);
  CHECK(b.kappa == IntMatrix{{1}});
  CHECK(b.xi0 == v({1}));

  CHECK_THROWS_AS(character_root_isogeny(v({1}), 0), DomainError);

  // Brute force over 2x2 matrices with entries up to 6 (>= d): no isogeny of smaller
  // degree makes xi divisible by d.
  std::mt19937 rng(71);
  std::uniform_int_distribution<long> e(-4, 4);
  std::uniform_int_distribution<long> dd(1, 6);
  for (int trial = 0; trial < 15; ++trial) {
    IntVector xi{e(rng), e(rng)};
    Integer d = dd(rng);
    auto iso = character_root_isogeny(xi, d);
    long best = 0;
    for (long a11 = -6; a11 <= 6; ++a11)
      for (long a12 = -6; a12 <= 6; ++a12)
        for (long a21 = -6; a21 <= 6; ++a21)
          for (long a22 = -6; a22 <= 6; ++a22) {
            long det = a11 * a22 - a12 * a21;
            if (det == 0) continue;
            // kappa^T xi must be divisible by d.
            Integer c1 = a11 * xi[0] + a21 * xi[1];
            Integer c2 = a12 * xi[0] + a22 * xi[1];
            if (c1 % d != 0 || c2 % d != 0) continue;
            if (best == 0 || std::abs(det) < best) best = std::abs(det);
          }
    CAPTURE(to_string(xi));
    CAPTURE(d.get_str());
    CHECK(abs(determinant(iso.kappa)) == best);
  }
}

TEST_CASE("subgroup decomposition") {
  CHECK(decompose_subgroup(DiagonalizableSubgroup::trivial(3)).torus_rank == 0);
  CHECK(decompose_subgroup(DiagonalizableSubgroup::trivial(3)).cyclic_orders.empty());
  auto g = by_relations(2, {v({1, 1}), v({0, 4})});
  auto dec = decompose_subgroup(g);
  CHECK(dec.torus_rank == 0);
  CHECK(dec.cyclic_orders == std::vector<Integer>{4});
  auto inv = cokernel_invariants(g.relations());
  CHECK(inv.torsion == dec.cyclic_orders);
}
