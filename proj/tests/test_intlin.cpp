#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricq/errors.hpp"
#include "toricq/intlin.hpp"

using namespace toricq;

namespace {

IntVector v(std::initializer_list<long> xs) { return to_int_vector(xs); }

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i + 1, i + 1) != 0 && (d(i, i) == 0 || d(i + 1, i + 1) % d(i, i) != 0)) return false;
    if (i + 1 < n && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  auto s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.d == IntMatrix::identity(3));
  CHECK(s.u == IntMatrix::identity(3));
  CHECK(s.v == IntMatrix::identity(3));

  s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.d == IntMatrix({{1, 0}, {0, 6}}));
  CHECK(s.invariant_factors() == oracle::invariant_factors(IntMatrix{{2, 0}, {0, 3}}));

  IntMatrix a{{1, 0}, {0, 1}, {-1, -1}};
  s = smith_normal_form(a);
  CHECK(s.d == IntMatrix({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), 6);
    auto s = smith_normal_form(a);
    CAPTURE(a.to_string());
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(oracle::det(s.u)) == 1);
    CHECK(abs(oracle::det(s.v)) == 1);
    CHECK(is_diagonal_chain(s.d));
    CHECK(s.invariant_factors() == oracle::invariant_factors(a));
    CHECK(s.rank() == oracle::rank(a));
  }
}

TEST_CASE("zero and empty matrices") {
  auto s = smith_normal_form(IntMatrix(2, 3));
  CHECK(s.rank() == 0);
  CHECK(s.d.is_zero());
  CHECK(cokernel_invariants(IntMatrix(2, 0)).free_rank == 2);
  CHECK(kernel_basis(IntMatrix(0, 2)).size() == 2);
  CHECK(rank(IntMatrix(0, 0)) == 0);
}

TEST_CASE("row hermite form") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 4, 5);
    auto h = row_hermite_form(a);
    CHECK(h.u * a == h.h);
    CHECK(abs(oracle::det(h.u)) == 1);
    CHECK(h.rank == oracle::rank(a));
    for (std::size_t i = 0; i < h.rank; ++i) {
      const auto p = h.pivot_columns[i];
      CHECK(h.h(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.h(k, p) >= 0);
        CHECK(h.h(k, p) < h.h(i, p));
      }
    }
  }
}

TEST_CASE("rank and determinant") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 4, 4, 3);
    CHECK(rank(a) == oracle::rank(a));
    CHECK(determinant(a) == oracle::det(a));
  }
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), ShapeError);
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix{{1, 0}, {1, 2}}) == CokernelInvariants{0, {2}});
  CHECK(cokernel_invariants(IntMatrix::identity(2)) == CokernelInvariants{0, {}});
  CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}, {-1, -1}}) == CokernelInvariants{1, {}});

  // Brute-force coset enumeration: the number of k-torsion elements fixes the
  // isomorphism type of a finite abelian group.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 2, 2, 3);
    if (oracle::det(a) == 0) continue;
    auto inv = cokernel_invariants(a);
    CHECK(inv.free_rank == 0);
    CHECK(oracle::torsion_profile(a, 6) == oracle::torsion_profile(inv.torsion, 6));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(IntMatrix{{1, -1}}) == std::vector<IntVector>{v({1, 1})});
  CHECK(kernel_basis(IntMatrix::identity(2)).empty());
  auto k = kernel_basis(IntMatrix{{1, 0, -1}, {0, 1, -2}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == v({1, 2, 1}) || k[0] == v({-1, -2, -1})));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 2, 4, 4);
    auto basis = kernel_basis(a);
    CHECK(basis.size() == 4 - oracle::rank(a));
    for (const auto& b : basis) CHECK(is_zero(a * b));
    if (basis.empty()) continue;
    // Saturated: the basis spans a primitive sublattice, so its maximal minors
    // are coprime.
    IntMatrix b = IntMatrix::from_columns(4, basis);
    auto inv = oracle::invariant_factors(b);
    for (const auto& d : inv) CHECK(d == 1);
  }
}

TEST_CASE("primitive vectors") {
  CHECK(primitive_vector(v({2, 4})) == v({1, 2}));
  CHECK(primitive_vector(v({0, -3})) == v({0, -1}));
  CHECK(primitive_vector(v({6, 10, 15})) == v({6, 10, 15}));
  CHECK(gcd(v({6, 10, 15})) == 1);
  CHECK_THROWS_AS(primitive_vector(v({0, 0})), InvalidRayError);
}

TEST_CASE("lattice membership and divisibility index") {
  IntMatrix l{{1, 1}, {0, 2}};
  CHECK_FALSE(lattice_membership(l, v({0, 1})));
  CHECK(divisibility_index(l, v({0, 1})) == Integer(2));
  CHECK(oracle::divisibility_index(l, v({0, 1}), 10) == 2);
  CHECK(lattice_membership(IntMatrix::identity(2), v({7, -3})));
  CHECK(divisibility_index(IntMatrix::identity(2), v({7, -3})) == Integer(1));
  IntMatrix axis{{2}, {0}};
  CHECK_FALSE(lattice_membership(axis, v({1, 1})));
  CHECK_FALSE(divisibility_index(axis, v({1, 1})).has_value());

  std::mt19937 rng(29);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 2, 3);
    if (oracle::rank(a) != 2) continue;
    IntVector p{e(rng), e(rng), e(rng)};
    CHECK(lattice_membership(a, p) == oracle::in_lattice(a, p));
    auto got = divisibility_index(a, p);
    auto want = oracle::divisibility_index(a, p, 2000);
    CHECK(got.has_value() == want.has_value());
    if (got && want) CHECK(*got == *want);
  }
}

TEST_CASE("integer solutions") {
  CHECK(solve_integer(IntMatrix::identity(3), v({4, -1, 2})) == v({4, -1, 2}));
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, v({1})).has_value());
  auto x = solve_integer(IntMatrix{{1, 1}, {0, 2}}, v({0, 2}));
  REQUIRE(x.has_value());
  CHECK(*x == v({-1, 1}));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 3, 4, 4);
    IntVector y = oracle::random_matrix(rng, 4, 1, 3).column(0);
    IntVector b = a * y;
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
}

TEST_CASE("saturation") {
  IntMatrix s = saturation(IntMatrix{{2}, {4}});
  CHECK(s.cols() == 1);
  CHECK((s.column(0) == v({1, 2}) || s.column(0) == v({-1, -2})));
  IntMatrix q = saturation(IntMatrix{{1, 1}, {0, 2}});
  CHECK(abs(oracle::det(q)) == 1);
}
