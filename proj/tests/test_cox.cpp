#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "toricq/cox.hpp"
#include "toricq/errors.hpp"

using namespace toricq;

namespace {

IntVector v(std::initializer_list<long> xs) { return to_int_vector(xs); }

IntVector unit(std::size_t m, std::size_t i) {
  IntVector e(m, 0);
  e[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("cox presentation") {
  auto p2 = cox_presentation(corpus::load("p2"));
  CHECK(p2.ray_count() == 3);
  CHECK(p2.q_matrix == IntMatrix({{1, 0, -1}, {0, 1, -1}}));
  CHECK(p2.sigma.max_cones().size() == 3);
  CHECK(p2.sigma.rank() == 3);
  CHECK(p2.kernel_group.dimension() == 1);

  auto a2 = cox_presentation(corpus::load("a2"));
  CHECK(a2.q_matrix == IntMatrix::identity(2));
  CHECK(a2.sigma.max_cones().size() == 1);
  CHECK(a2.kernel_group.dimension() == 0);
  CHECK(decompose_subgroup(a2.kernel_group).cyclic_orders.empty());

  auto qc = cox_presentation(corpus::load("quadric_cone"));
  CHECK(qc.q_matrix == IntMatrix({{1, 1}, {0, 2}}));
  CHECK(qc.kernel_group.dimension() == 0);
  auto h = decompose_subgroup(qc.kernel_group);
  CHECK(h.cyclic_orders == std::vector<Integer>{2});
  // (eps, eps) with eps^2 = 1: the character (1,-1) is trivial on H.
  CHECK(lattice_membership(qc.kernel_group.relations(), v({1, -1})));
  CHECK_FALSE(lattice_membership(qc.kernel_group.relations(), v({1, 0})));

  CHECK(is_map_of_fans(p2.q_matrix, p2.sigma, p2.delta));
}

TEST_CASE("complement codimension") {
  CHECK(complement_codim(cox_presentation(corpus::load("p2"))) == 3);
  auto a2 = cox_presentation(corpus::load("a2"));
  CHECK(complement_codim(a2) == a2.ray_count() + 1);
  CHECK(complement_codim(cox_presentation(corpus::load("p1xp1"))) == 2);
  CHECK(complement_codim(cox_presentation(corpus::load("p1"))) == 2);
}

TEST_CASE("free action and smoothness") {
  CHECK(acts_freely(cox_presentation(corpus::load("p2"))));
  CHECK_FALSE(acts_freely(cox_presentation(corpus::load("quadric_cone"))));
  CHECK(acts_freely(cox_presentation(corpus::load("a2"))));
  CHECK(variety_is_smooth(corpus::load("p2")));
  CHECK_FALSE(variety_is_smooth(corpus::load("quadric_cone")));
  CHECK(variety_is_smooth(corpus::load("f2")));
  CHECK_FALSE(variety_is_smooth(corpus::load("p112")));
}

TEST_CASE("class group and degrees") {
  auto p2 = cox_presentation(corpus::load("p2"));
  CHECK(class_group(p2) == CokernelInvariants{1, {}});
  for (std::size_t i = 0; i < 3; ++i) CHECK(degree_of_monomial(p2, unit(3, i)) == degree_of_monomial(p2, unit(3, 0)));
  CHECK(abs(degree_of_monomial(p2, unit(3, 0)).free_part.at(0)) == 1);

  auto qc = cox_presentation(corpus::load("quadric_cone"));
  CHECK(class_group(qc) == CokernelInvariants{0, {2}});
  CHECK(degree_of_monomial(qc, unit(2, 0)).torsion_part == v({1}));
  CHECK(degree_of_monomial(qc, unit(2, 1)).torsion_part == v({1}));
  CHECK(degree_of_monomial(qc, v({1, 1})).torsion_part == v({0}));

  auto w = cox_presentation(corpus::load("p121"));
  CHECK(class_group(w) == CokernelInvariants{1, {}});
  IntVector deg;
  for (std::size_t i = 0; i < 3; ++i) deg.push_back(degree_of_monomial(w, unit(3, i)).free_part.at(0));
  CHECK((deg == v({1, 2, 1}) || deg == v({-1, -2, -1})));

  CHECK_THROWS_AS(class_group(cox_presentation(Fan(2, {v({1, 0})}, {{0}}))), HypothesisError);

  // Additivity and agreement with the determinantal oracle.
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> e(-3, 3);
  for (const auto& name : corpus::fan_names()) {
    Fan f = corpus::load(name);
    if (!is_nondegenerate(f)) continue;
    auto p = cox_presentation(f);
    auto [free_rank, torsion] = oracle::cokernel(p.q_matrix.transpose());
    CHECK(class_group(p) == CokernelInvariants{free_rank, torsion});
    CHECK(decompose_subgroup(p.kernel_group).torus_rank == free_rank);
    CHECK(decompose_subgroup(p.kernel_group).cyclic_orders == torsion);
    for (int k = 0; k < 5; ++k) {
      IntVector a(p.ray_count()), b(p.ray_count());
      for (auto& x : a) x = e(rng);
      for (auto& x : b) x = e(rng);
      CHECK(degree_of_monomial(p, add(a, b)) == add(p, degree_of_monomial(p, a), degree_of_monomial(p, b)));
      // Characters of the torus T_X have degree zero.
      IntVector m(f.rank());
      for (auto& x : m) x = e(rng);
      IntVector chi = p.q_matrix.transpose() * m;
      {
        auto zero = degree_of_monomial(p, chi);
        CHECK(is_zero(zero.free_part));
        CHECK(is_zero(zero.torsion_part));
      }
    }
  }
}

TEST_CASE("lifting subtori") {
  auto p2 = cox_presentation(corpus::load("p2"));
  auto lift = lift_subtorus(p2, IntMatrix{{1}, {0}});
  CHECK(lift.degree == 1);
  CHECK(p2.q_matrix * lift.weights.transpose() == IntMatrix({{1}, {0}}));
  CHECK(lift.effective);

  auto qc = cox_presentation(corpus::load("quadric_cone"));
  auto l2 = lift_subtorus(qc, IntMatrix{{0}, {1}});
  CHECK(l2.degree == 2);
  CHECK(qc.q_matrix * l2.weights.transpose() == IntMatrix({{0}, {2}}));

  auto f2 = cox_presentation(corpus::load("f2"));
  IntMatrix iota = IntMatrix::from_columns(2, {f2.q_matrix.column(0)});
  auto l3 = lift_subtorus(f2, iota);
  CHECK(l3.degree == 1);
  CHECK(l3.weights == IntMatrix::from_rows(4, {unit(4, 0)}));

  CHECK_THROWS_AS(lift_subtorus(p2, IntMatrix{{1, 2}, {2, 4}}), HypothesisError);
  CHECK_THROWS_AS(lift_subtorus(p2, IntMatrix{{1, 0, 0}}), ShapeError);
}
