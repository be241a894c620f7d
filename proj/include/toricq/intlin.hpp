#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Every routine here is a pure function of its arguments. Matrices are
// dense and row-major; the sizes we care about are small (dimension < 20),
// so no attempt is made at asymptotically fast algorithms.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toricq {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Rows given explicitly; `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;

  IntMatrix transpose() const;
  /// Columns `cols` of this matrix, in the given order.
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row(target) += factor * row(source)
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// column(target) += factor * column(source)
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// ---------------------------------------------------------------------------
// Scalar and vector helpers

/// a = q*b + r with 0 <= r < |b|
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Non-negative gcd of the entries; 0 for the zero vector.
Integer gcd(const IntVector& v);
bool is_zero(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, const Integer& s);
IntVector add(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
IntVector to_int_vector(std::initializer_list<long> values);

/// v divided by the positive gcd of its entries. Throws InvalidRayError for 0.
IntVector primitive_vector(const IntVector& v);

/// Positive multiple of a rational vector with coprime integer entries
/// (the zero vector maps to the zero vector).
IntVector clear_denominators(const RatVector& v);

std::string to_string(const IntVector& v);

// ---------------------------------------------------------------------------
// Normal forms

/// U * A * V = D with U, V unimodular and D in Smith normal form.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// U * A = H with U unimodular and H in row Hermite normal form: row echelon,
/// positive pivots, entries above a pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  /// Column of the pivot of row i, for i < rank.
  std::vector<std::size_t> pivot_columns;
};

HnfResult row_hermite_form(const IntMatrix& a);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& a);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Lattices

/// Invariants of Z^rows / im(A).
struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

CokernelInvariants cokernel_invariants(const IntMatrix& a);

/// Basis of the saturated lattice ker(A) ∩ Z^cols, in row Hermite normal form.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// One integer solution of A x = b, or nullopt when none exists. The
/// solution is reduced modulo ker(A) so that it is canonical for (A, b).
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Is v in the lattice generated by the columns of L?
bool lattice_membership(const IntMatrix& lattice, const IntVector& v);

/// Smallest d >= 1 with d*v in the column lattice of L; nullopt when v is
/// not even in its rational span.
std::optional<Integer> divisibility_index(const IntMatrix& lattice, const IntVector& v);

/// Basis (as columns) of the saturation of the column span of A in Z^rows.
IntMatrix saturation(const IntMatrix& a);

}  // namespace toricq
