#include "arithmirror/exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <utility>

#include "arithmirror/error.hpp"

namespace arithmirror {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRat& v) { return v.get_str(); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long>(rows[r][c]);
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& cols,
                                  std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = static_cast<long>(cols[c][r]);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  assert(v.size() == m.cols());
  IntVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Row echelon by unimodular row operations.

namespace {

// Reduces the first `ncols` columns of `a` to row echelon form using only
// unimodular row operations on whole rows. Returns the pivot columns.
// With `reduce_above` the result on those columns is the Hermite form.
std::vector<std::size_t> echelonize(IntMatrix& a, std::size_t ncols, bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    while (true) {
      // Smallest nonzero magnitude at or below row r becomes the pivot.
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == a.rows()) break;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    if (reduce_above)
      for (std::size_t i = 0; i < r; ++i)
        a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return echelonize(a, a.cols(), false).size();
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  echelonize(a, a.cols(), true);
  return a;
}

std::vector<IntVector> canonical_basis(std::span<const IntVector> generators,
                                       std::size_t dim) {
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(generators, dim));
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    IntVector row = h.row(r);
    if (std::any_of(row.begin(), row.end(), [](const BigInt& v) { return v != 0; }))
      out.push_back(std::move(row));
  }
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // [M^T | I]: unimodular row operations that zero a row of M^T leave a
  // kernel vector in the identity block, and the zero rows span the whole
  // (saturated) kernel.
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = 1;
  }
  const std::size_t r = echelonize(aug, k, false).size();
  std::vector<IntVector> raw;
  for (std::size_t i = r; i < n; ++i) {
    IntVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = aug(i, k + j);
    raw.push_back(std::move(v));
  }
  return canonical_basis(raw, n);
}

std::vector<IntVector> saturate(std::span<const IntVector> generators, std::size_t dim) {
  const auto orth = kernel_basis(IntMatrix::from_rows(generators, dim));
  return kernel_basis(IntMatrix::from_rows(orth, dim));
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<BigInt> SnfResult::elementary_divisors() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) done = false;
      }
      if (!done) continue;

      // Divisibility: fold any offending row into row t and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_add(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{std::move(a), std::move(u), std::move(v)};
}

std::vector<BigInt> elementary_divisors(const IntMatrix& m) {
  return smith_normal_form(m).elementary_divisors();
}

}  // namespace arithmirror
