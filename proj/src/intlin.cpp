#include "toricq/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toricq/errors.hpp"

namespace toricq {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw ShapeError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, cols[k]);
  }
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw ShapeError("hconcat: row counts differ");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << toricq::to_string(row(i));
  }
  os << ']';
  return os.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector product: size mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------------------

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector scale(const IntVector& v, const Integer& s) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ShapeError("add: size mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector negate(const IntVector& v) { return scale(v, -1); }

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector primitive_vector(const IntVector& v) {
  Integer g = gcd(v);
  if (g == 0) throw InvalidRayError("zero vector does not define a ray");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector clear_denominators(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  if (is_zero(out)) return out;
  return primitive_vector(out);
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Smith normal form
//
// Pivot on the entry of least absolute value in the trailing submatrix, clear
// its row and column by division with remainder, and restart whenever a
// remainder survives. Once the pivot row/column are clear, an entry not
// divisible by the pivot is folded into the pivot row.

namespace {

bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  SnfResult s{IntMatrix::identity(r), a, IntMatrix::identity(c)};
  IntMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = t, pj = t;
    if (!find_min_pivot(d, t, pi, pj)) break;
    while (true) {
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_columns(t, pj);
      s.v.swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_column_multiple(j, t, -q);
        s.v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_min_pivot(d, t, pi, pj);
        continue;
      }

      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
      pi = t;
      pj = t;
      find_min_pivot(d, t, pi, pj);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

std::size_t SnfResult::rank() const {
  std::size_t k = 0;
  while (k < std::min(d.rows(), d.cols()) && d(k, k) != 0) ++k;
  return k;
}

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t k = 0; k < rank(); ++k) f.push_back(d(k, k));
  return f;
}

// ---------------------------------------------------------------------------

HnfResult row_hermite_form(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  HnfResult res{a, IntMatrix::identity(r), 0, {}};
  IntMatrix& h = res.h;
  std::size_t pr = 0;
  for (std::size_t j = 0; j < c && pr < r; ++j) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i)
        if (h(i, j) != 0 && (best == r || abs(h(i, j)) < abs(h(best, j)))) best = i;
      if (best == r) break;
      h.swap_rows(pr, best);
      res.u.swap_rows(pr, best);
      bool done = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (h(i, j) == 0) continue;
        Integer q = floor_div(h(i, j), h(pr, j));
        h.add_row_multiple(i, pr, -q);
        res.u.add_row_multiple(i, pr, -q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pr, j) == 0) continue;
    if (h(pr, j) < 0) {
      h.negate_row(pr);
      res.u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q = floor_div(h(i, j), h(pr, j));
      h.add_row_multiple(i, pr, -q);
      res.u.add_row_multiple(i, pr, -q);
    }
    res.pivot_columns.push_back(j);
    ++pr;
  }
  res.rank = pr;
  return res;
}

namespace {

// Bareiss elimination in place; returns the rank and leaves the last pivot
// (the determinant up to sign for square full-rank input) in `last`.
std::size_t bareiss(IntMatrix& m, Integer& last, int& sign) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  Integer prev = 1;
  std::size_t row = 0;
  sign = 1;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && m(p, col) == 0) ++p;
    if (p == r) continue;
    if (p != row) {
      m.swap_rows(p, row);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        Integer t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  last = prev;
  return row;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  Integer last;
  int sign;
  return bareiss(m, last, sign);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  IntMatrix m = a;
  Integer last;
  int sign;
  if (bareiss(m, last, sign) < a.rows()) return 0;
  return sign * m(a.rows() - 1, a.cols() - 1);
}

// ---------------------------------------------------------------------------

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  SnfResult s = smith_normal_form(a);
  CokernelInvariants inv;
  inv.free_rank = a.rows() - s.rank();
  for (const auto& f : s.invariant_factors())
    if (f > 1) inv.torsion.push_back(f);
  return inv;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const std::size_t c = a.cols();
  if (c == 0) return {};
  SnfResult s = smith_normal_form(a);
  const std::size_t k = s.rank();
  if (k == c) return {};
  std::vector<IntVector> raw;
  for (std::size_t j = k; j < c; ++j) raw.push_back(s.v.column(j));
  HnfResult h = row_hermite_form(IntMatrix::from_rows(c, raw));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < h.rank; ++i) basis.push_back(h.h.row(i));
  return basis;
}

namespace {

// Reduce x modulo the lattice spanned by `kernel` so that, at each pivot of
// the kernel's echelon form taken from the right, the entry of x lies in
// [0, pivot). Pivots from the right keep small-index coordinates untouched.
IntVector reduce_modulo_kernel(IntVector x, const std::vector<IntVector>& kernel) {
  if (kernel.empty()) return x;
  const std::size_t c = x.size();
  std::vector<IntVector> reversed;
  for (const auto& k : kernel) reversed.emplace_back(k.rbegin(), k.rend());
  HnfResult h = row_hermite_form(IntMatrix::from_rows(c, reversed));
  for (std::size_t i = 0; i < h.rank; ++i) {
    IntVector row = h.h.row(i);
    std::reverse(row.begin(), row.end());
    const std::size_t p = c - 1 - h.pivot_columns[i];
    Integer q = floor_div(x[p], row[p]);
    if (q != 0) x = add(x, scale(row, -q));
  }
  return x;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw ShapeError("solve_integer: right-hand side has wrong length");
  const std::size_t c = a.cols();
  // Column Hermite form: A * U^T = H^T where U * A^T = H.
  HnfResult hr = row_hermite_form(a.transpose());
  IntVector y(c);
  for (std::size_t i = 0; i < hr.rank; ++i) {
    const std::size_t prow = hr.pivot_columns[i];
    Integer rest = b[prow];
    for (std::size_t l = 0; l < i; ++l) rest -= hr.h(l, prow) * y[l];
    if (!mpz_divisible_p(rest.get_mpz_t(), hr.h(i, prow).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), rest.get_mpz_t(), hr.h(i, prow).get_mpz_t());
  }
  IntVector x = hr.u.transpose() * y;
  if (a * x != b) return std::nullopt;
  x = reduce_modulo_kernel(std::move(x), kernel_basis(a));
  if (a * x != b) throw InternalConsistencyError("solve_integer: reduction broke the solution");
  return x;
}

bool lattice_membership(const IntMatrix& lattice, const IntVector& v) {
  return solve_integer(lattice, v).has_value();
}

std::optional<Integer> divisibility_index(const IntMatrix& lattice, const IntVector& v) {
  if (v.size() != lattice.rows()) throw ShapeError("divisibility_index: vector has wrong length");
  SnfResult s = smith_normal_form(lattice);
  const std::size_t k = s.rank();
  IntVector w = s.u * v;
  for (std::size_t i = k; i < w.size(); ++i)
    if (w[i] != 0) return std::nullopt;
  Integer d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.d(i, i).get_mpz_t(), w[i].get_mpz_t());
    d = lcm(d, s.d(i, i) / g);
  }
  return d;
}

IntMatrix saturation(const IntMatrix& a) {
  std::vector<IntVector> left = kernel_basis(a.transpose());
  std::vector<IntVector> sat = kernel_basis(IntMatrix::from_rows(a.rows(), left));
  return IntMatrix::from_columns(a.rows(), sat);
}

}  // namespace toricq
