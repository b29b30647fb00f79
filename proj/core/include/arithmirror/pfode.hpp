#pragma once

// Exact rational polynomials, rational functions, power series in w = 1/t and
// linear differential operators sum_i c_i(t) d^i/dt^i: period series from
// constant terms, operator recovery, symmetric squares and square roots, and
// the order-2 projective normal form.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arithmirror/exactmath.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror {

/// Dense polynomial in t over Q, lowest degree first, no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRat> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);
  static RationalPoly constant(const BigRat& c);
  static RationalPoly monomial(const BigRat& c, std::size_t degree);

  const std::vector<BigRat>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }
  BigRat leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

  RationalPoly derivative() const;
  /// p(-t).
  RationalPoly negate_variable() const;
  BigRat eval(const BigRat& t) const;
  RationalPoly monic() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const BigRat& k, const RationalPoly& a);
  friend RationalPoly operator-(const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigRat> c_;
};

/// Quotient and remainder of a by b != 0 (DivisionByZero otherwise).
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
/// "t^4 - 256", "t^2/4", "6t^3 + 162".
std::string to_string(const RationalPoly& p, const std::string& var = "t");

/// num/den in lowest terms with den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(RationalPoly::constant(1)) {}
  RationalFunction(RationalPoly num);  // NOLINT: polynomials are rational functions
  RationalFunction(RationalPoly num, RationalPoly den);

  const RationalPoly& num() const noexcept { return num_; }
  const RationalPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  RationalFunction derivative() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalPoly num_;
  RationalPoly den_;
};

std::string to_string(const RationalFunction& f, const std::string& var = "t");

/// sum_i c_i(t) (d/dt)^i. Stored primitive: integer coefficients with content
/// one and positive leading coefficient of c_k. The order is the index of the
/// last nonzero coefficient; the zero operator has order -1.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(std::vector<RationalPoly> coeffs);
  /// Clears the denominators of rational-function coefficients first.
  static DiffOperator from_rational(const std::vector<RationalFunction>& coeffs);

  long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<RationalPoly>& coeffs() const noexcept { return c_; }
  const RationalPoly& coeff(std::size_t i) const { return c_.at(i); }
  std::size_t max_degree() const;

  /// L with t replaced by -t: c_i(-t) (-1)^i.
  DiffOperator negate_variable() const;

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }

 private:
  std::vector<RationalPoly> c_;
};

/// "(3t)P + (7t^2)P' + ...". Coefficients are printed multiplied by `scale`.
std::string pretty(const DiffOperator& op, const BigRat& scale = BigRat(1),
                   const std::string& fn = "P");

/// Same order and c_i c'_k = c'_i c_k for all i: proportional by a rational
/// function.
bool operator_equal_up_to_unit(const DiffOperator& a, const DiffOperator& b);

/// w^prefactor_exponent * sum_{k=0}^{K} coeffs[k] w^k, w = 1/t, known exactly
/// through w^{prefactor_exponent + K}.
struct RationalSeries {
  long prefactor_exponent = 0;
  std::vector<BigRat> coeffs;

  std::size_t truncation() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const;
};

/// CT(S^k) for k = 0..K where S is the Laurent polynomial whose monomials are
/// `exponents` (all with coefficient one). Exact via meet in the middle over
/// powers up to ceil(K/2).
std::vector<BigInt> constant_terms(const std::vector<Point>& exponents, std::size_t K,
                                   unsigned workers = 1);

/// sum_{k=0}^{K} (-1)^k CT(S^k) t^{-k-1}, S over the vertices of the polar
/// dual. Requires reflexive, K <= 60.
RationalSeries period_series(const LatticePolytope& polytope, std::size_t K, unsigned workers = 1);

/// L(series), exact through the largest order the input truncation allows.
RationalSeries apply_operator(const DiffOperator& op, const RationalSeries& series);

/// Operator of the given order with polynomial coefficients of degree at most
/// degree_bound annihilating the series. The smallest degree that admits a
/// solution is used; the solve leaves five coefficients out for verification.
/// Throws InsufficientSeries when K + 1 < unknowns + 5.
std::optional<DiffOperator> recover_operator(const RationalSeries& series, long order,
                                             long degree_bound = 4);

/// Throws WrongOrder unless the input has order 2.
DiffOperator symmetric_square(const DiffOperator& l2);
/// Throws WrongOrder unless the input has order 3.
std::optional<DiffOperator> symmetric_square_root(const DiffOperator& l3);

struct ProjectiveNormalForm {
  RationalFunction potential;  // g in R'' + g R = 0
  DiffOperator op;             // den(g) R'' + num(g) R, primitive
};
ProjectiveNormalForm projective_normal_form2(const DiffOperator& l2);

/// Operators and potentials of the Picard-Fuchs tables, per group (1 or 2).
DiffOperator table_order3(int group);
DiffOperator table_order2(int group);
/// The printed order-2 operators carry the factor 1/4 on their zeroth coefficient.
inline BigRat table_order2_scale() { return BigRat(1, 4); }
RationalFunction table_potential(int group);

}  // namespace arithmirror
