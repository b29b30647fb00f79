#pragma once

// Exact integer and rational arithmetic, integer matrices, and the
// Smith/Hermite normal forms used for kernels, sublattices and torsion.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace arithmirror {

using BigInt = mpz_class;
using BigRat = mpq_class;
using IntVector = std::vector<BigInt>;

/// Builds a rational in lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);
std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// Dense integer matrix with immutable shape.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Rows given as vectors; `cols` is needed when `rows` is empty.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols);
  /// Columns given as vectors of length `rows`.
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols,
                                std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector operator*(const IntMatrix& m, const IntVector& v);

/// Exact determinant (fraction-free Bareiss elimination). Requires a square matrix.
BigInt determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  /// Nonzero diagonal entries of D, in divisibility order.
  std::vector<BigInt> elementary_divisors() const;
};

/// U * M * V = D with U, V unimodular and d1 | d2 | ... on the diagonal.
SnfResult smith_normal_form(const IntMatrix& m);
std::vector<BigInt> elementary_divisors(const IntMatrix& m);

/// Unique row-style Hermite normal form: pivots positive and strictly moving
/// right, entries above each pivot reduced into [0, pivot). Zero rows last.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Nonzero rows of the Hermite form of the given generators. Two generating
/// sets of the same submodule give identical output.
std::vector<IntVector> canonical_basis(std::span<const IntVector> generators,
                                       std::size_t dim);

/// Basis of {k in Z^cols : M k = 0} in canonical form.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Basis of span_Q(L) intersected with Z^dim, in canonical form.
std::vector<IntVector> saturate(std::span<const IntVector> generators, std::size_t dim);

/// Floor division and modulo that always round toward negative infinity.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace arithmirror
