#include "arithmirror/pfode.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "arithmirror/error.hpp"
#include "parallel.hpp"

namespace arithmirror {

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::constant(const BigRat& c) { return RationalPoly(std::vector<BigRat>{c}); }

RationalPoly RationalPoly::monomial(const BigRat& c, std::size_t degree) {
  std::vector<BigRat> v(degree + 1, BigRat(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::derivative() const {
  std::vector<BigRat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::negate_variable() const {
  auto c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return RationalPoly(std::move(c));
}

BigRat RationalPoly::eval(const BigRat& t) const {
  BigRat v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  return (BigRat(1) / leading()) * *this;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a) { return BigRat(-1) * a; }
RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const BigRat& k, const RationalPoly& a) {
  auto c = a.c_;
  for (auto& x : c) x *= k;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<BigRat> q;
  RationalPoly r = a;
  if (r.degree() >= b.degree()) q.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), BigRat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const BigRat k = r.leading() / b.leading();
    q[shift] = k;
    r = r - RationalPoly::monomial(k, shift) * b;
  }
  return {RationalPoly(std::move(q)), r};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::string term(const BigRat& c, std::size_t k, const std::string& var) {
  const BigInt n = abs(c.get_num());
  const BigInt& d = c.get_den();
  std::string s;
  if (k == 0) {
    s = n.get_str();
  } else {
    if (n != 1) s = n.get_str();
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  if (d != 1) s += "/" + d.get_str();
  return s;
}

}  // namespace

std::string to_string(const RationalPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const BigRat& c = p.coeffs()[k];
    if (c == 0) continue;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term(c, k, var);
    else
      out += (c < 0 ? " - " : " + ") + term(c, k, var);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(RationalPoly num)
    : num_(std::move(num)), den_(RationalPoly::constant(1)) {}

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = RationalPoly::constant(1);
    return;
  }
  const auto g = gcd(num_, den_);
  num_ = divmod(num_, g).first;
  den_ = divmod(den_, g).first;
  const BigRat lead = den_.leading();
  num_ = (BigRat(1) / lead) * num_;
  den_ = (BigRat(1) / lead) * den_;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  if (f.den() == RationalPoly::constant(1)) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// ---------------------------------------------------------------------------
// DiffOperator

DiffOperator::DiffOperator(std::vector<RationalPoly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) return;
  BigInt den = 1, content = 0;
  for (const auto& p : c_)
    for (const auto& c : p.coeffs()) den = lcm(den, BigInt(c.get_den()));
  for (const auto& p : c_)
    for (const auto& c : p.coeffs()) content = gcd(content, BigInt(c.get_num() * (den / c.get_den())));
  BigRat scale(den, content);
  scale.canonicalize();
  if (c_.back().leading() < 0) scale = -scale;
  for (auto& p : c_) p = scale * p;
}

DiffOperator DiffOperator::from_rational(const std::vector<RationalFunction>& coeffs) {
  RationalPoly l = RationalPoly::constant(1);
  for (const auto& f : coeffs)
    if (!f.is_zero()) l = divmod(l * f.den(), gcd(l, f.den())).first;
  std::vector<RationalPoly> c;
  for (const auto& f : coeffs) c.push_back(f.num() * divmod(l, f.den()).first);
  return DiffOperator(std::move(c));
}

std::size_t DiffOperator::max_degree() const {
  long d = 0;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return static_cast<std::size_t>(d);
}

DiffOperator DiffOperator::negate_variable() const {
  std::vector<RationalPoly> c;
  for (std::size_t i = 0; i < c_.size(); ++i)
    c.push_back(BigRat(i % 2 ? -1 : 1) * c_[i].negate_variable());
  return DiffOperator(std::move(c));
}

std::string pretty(const DiffOperator& op, const BigRat& scale, const std::string& fn) {
  if (op.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < op.coeffs().size(); ++i) {
    if (op.coeff(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(scale * op.coeff(i)) + ")" + fn + std::string(i, '\'');
  }
  return out;
}

bool operator_equal_up_to_unit(const DiffOperator& a, const DiffOperator& b) {
  if (a.order() != b.order()) return false;
  if (a.is_zero()) return true;
  const auto k = static_cast<std::size_t>(a.order());
  for (std::size_t i = 0; i <= k; ++i)
    if (!(a.coeff(i) * b.coeff(k) == b.coeff(i) * a.coeff(k))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Series

bool RationalSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigRat& c) { return c == 0; });
}

namespace {

// Points packed 16 bits per coordinate around an offset; packing is linear so
// monomial multiplication is integer addition.
constexpr std::int64_t kOffset = 1 << 15;

std::uint64_t pack(const Point& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    key += static_cast<std::uint64_t>(p[i] + kOffset) << (16 * i);
  return key;
}

std::uint64_t raw(const Point& p) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    key += static_cast<std::uint64_t>(p[i]) << (16 * i);
  return key;
}

using PowerMap = std::unordered_map<std::uint64_t, BigInt>;

}  // namespace

std::vector<BigInt> constant_terms(const std::vector<Point>& exponents, std::size_t K,
                                   unsigned workers) {
  if (exponents.empty()) {
    std::vector<BigInt> out(K + 1, BigInt(0));
    out[0] = 1;
    return out;
  }
  const std::size_t n = exponents.front().size();
  if (n > 4) throw Error(ErrorKind::UnsupportedDimension, "at most four variables");
  std::int64_t bound = 0;
  for (const auto& e : exponents)
    for (auto c : e) bound = std::max<std::int64_t>(bound, c < 0 ? -c : c);
  if (bound * static_cast<std::int64_t>(K) >= kOffset)
    throw Error(ErrorKind::InvalidArgument, "exponents too large for constant-term expansion");

  const Point zero(n, 0);
  const std::uint64_t origin = pack(zero);
  std::vector<std::uint64_t> steps;
  for (const auto& e : exponents) steps.push_back(raw(e));

  const std::size_t half = (K + 1) / 2;
  std::vector<PowerMap> powers(half + 1);
  powers[0][origin] = 1;
  for (std::size_t j = 1; j <= half; ++j) {
    auto& cur = powers[j];
    cur.reserve(powers[j - 1].size() * 2);
    for (const auto& [key, c] : powers[j - 1])
      for (auto s : steps) cur[key + s] += c;
  }

  std::vector<BigInt> out(K + 1);
  detail::parallel_for(K + 1, workers, [&](std::size_t k) {
    const std::size_t a = (k + 1) / 2, b = k - a;
    const auto& pa = powers[a];
    const auto& pb = powers[b];
    BigInt sum = 0;
    for (const auto& [key, c] : pb) {
      const auto it = pa.find(2 * origin - key);
      if (it != pa.end()) sum += c * it->second;
    }
    out[k] = sum;
  });
  return out;
}

RationalSeries period_series(const LatticePolytope& polytope, std::size_t K, unsigned workers) {
  if (K > 60) throw Error(ErrorKind::InvalidArgument, "truncation order above 60");
  if (!is_reflexive(polytope))
    throw Error(ErrorKind::NonIntegralDual, "period series requires a reflexive polytope");
  const auto dual = polar_dual(polytope);
  const auto ct = constant_terms(dual.vertices(), K, workers);
  RationalSeries s;
  s.prefactor_exponent = 1;
  for (std::size_t k = 0; k <= K; ++k) s.coeffs.emplace_back(k % 2 ? BigInt(-ct[k]) : ct[k]);
  return s;
}

namespace {

// (-1)^i m (m+1) ... (m+i-1): the factor of d^i/dt^i on w^m, w = 1/t.
BigInt derivative_factor(long m, std::size_t i) {
  BigInt f = (i % 2) ? -1 : 1;
  for (std::size_t r = 0; r < i; ++r) f *= m + static_cast<long>(r);
  return f;
}

}  // namespace

RationalSeries apply_operator(const DiffOperator& op, const RationalSeries& series) {
  RationalSeries out;
  const std::size_t K = series.truncation();
  if (op.is_zero() || series.coeffs.empty()) {
    out.prefactor_exponent = series.prefactor_exponent;
    out.coeffs.assign(series.coeffs.size(), BigRat(0));
    return out;
  }
  long shift = 0;
  bool first = true;
  for (std::size_t i = 0; i < op.coeffs().size(); ++i)
    for (std::size_t j = 0; j < op.coeff(i).coeffs().size(); ++j)
      if (op.coeff(i).coeffs()[j] != 0) {
        const long d = static_cast<long>(i) - static_cast<long>(j);
        shift = first ? d : std::min(shift, d);
        first = false;
      }
  out.prefactor_exponent = series.prefactor_exponent + shift;
  out.coeffs.assign(K + 1, BigRat(0));
  for (std::size_t i = 0; i < op.coeffs().size(); ++i)
    for (std::size_t j = 0; j < op.coeff(i).coeffs().size(); ++j) {
      const BigRat& c = op.coeff(i).coeffs()[j];
      if (c == 0) continue;
      const long d = static_cast<long>(i) - static_cast<long>(j);
      for (std::size_t k = 0; k <= K; ++k) {
        const long idx = static_cast<long>(k) + d - shift;
        if (idx > static_cast<long>(K)) break;
        if (series.coeffs[k] == 0) continue;
        const long m = series.prefactor_exponent + static_cast<long>(k);
        out.coeffs[static_cast<std::size_t>(idx)] += c * series.coeffs[k] * derivative_factor(m, i);
      }
    }
  return out;
}

namespace {

// Nullspace of a dense rational matrix via reduced row echelon form.
std::vector<std::vector<BigRat>> nullspace(std::vector<std::vector<BigRat>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const BigRat inv = BigRat(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const BigRat f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<BigRat>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRat> v(cols, BigRat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<DiffOperator> recover_operator(const RationalSeries& series, long order,
                                             long degree_bound) {
  if (order < 0 || degree_bound < 0)
    throw Error(ErrorKind::InvalidArgument, "order and degree bound must be nonnegative");
  constexpr std::size_t kHeldOut = 5;
  const std::size_t K = series.truncation();
  const std::size_t equations = series.coeffs.size();
  const auto k_order = static_cast<std::size_t>(order);
  for (long D = 0; D <= degree_bound; ++D) {
    const auto deg = static_cast<std::size_t>(D);
    const std::size_t unknowns = (k_order + 1) * (deg + 1);
    if (equations < unknowns + kHeldOut)
      throw Error(ErrorKind::InsufficientSeries,
                  std::to_string(equations) + " series coefficients for " +
                      std::to_string(unknowns) + " unknowns");
    // Row r is the coefficient of w^{e - D + r} in L(series).
    std::vector<std::vector<BigRat>> a(equations, std::vector<BigRat>(unknowns, BigRat(0)));
    for (std::size_t i = 0; i <= k_order; ++i)
      for (std::size_t j = 0; j <= deg; ++j) {
        const std::size_t u = i * (deg + 1) + j;
        for (std::size_t k = 0; k <= K; ++k) {
          const std::size_t r = k + i + deg - j;
          if (r >= equations) break;
          const long m = series.prefactor_exponent + static_cast<long>(k);
          a[r][u] = series.coeffs[k] * derivative_factor(m, i);
        }
      }
    std::vector<std::vector<BigRat>> solve(a.begin(), a.end() - kHeldOut);
    const auto basis = nullspace(std::move(solve), unknowns);
    std::optional<DiffOperator> fallback;
    for (const auto& v : basis) {
      bool ok = true;
      for (std::size_t r = equations - kHeldOut; r < equations && ok; ++r) {
        BigRat sum = 0;
        for (std::size_t u = 0; u < unknowns; ++u) sum += a[r][u] * v[u];
        ok = sum == 0;
      }
      if (!ok) continue;
      std::vector<RationalPoly> c;
      for (std::size_t i = 0; i <= k_order; ++i)
        c.emplace_back(std::vector<BigRat>(v.begin() + static_cast<long>(i * (deg + 1)),
                                           v.begin() + static_cast<long>((i + 1) * (deg + 1))));
      DiffOperator op(std::move(c));
      if (op.order() == order) return op;
      if (!fallback && !op.is_zero()) fallback = op;
    }
    if (fallback) return fallback;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symmetric squares and normal forms

DiffOperator symmetric_square(const DiffOperator& l2) {
  if (l2.order() != 2) throw Error(ErrorKind::WrongOrder, "symmetric square needs an order-2 operator");
  const auto& a0 = l2.coeff(0);
  const auto& a1 = l2.coeff(1);
  const auto& a2 = l2.coeff(2);
  const BigRat two(2), three(3), four(4);
  return DiffOperator({
      four * (a0 * a1) + two * (a0.derivative() * a2) - two * (a0 * a2.derivative()),
      four * (a0 * a2) + two * (a1 * a1) + a2 * a1.derivative() - a1 * a2.derivative(),
      three * (a1 * a2),
      a2 * a2,
  });
}

std::optional<DiffOperator> symmetric_square_root(const DiffOperator& l3) {
  if (l3.order() != 3) throw Error(ErrorKind::WrongOrder, "square root needs an order-3 operator");
  const RationalFunction b0 = l3.coeff(0), b1 = l3.coeff(1), b2 = l3.coeff(2), b3 = l3.coeff(3);
  const RationalFunction two(RationalPoly{2}), three(RationalPoly{3}), four(RationalPoly{4});
  const RationalFunction a2 = b3;
  const RationalFunction a1 = b2 / three;
  const RationalFunction a0 =
      (b1 * b3 - two * a1 * a1 - a2 * a1.derivative() + a1 * a2.derivative()) / (four * a2);
  const RationalFunction check =
      four * a0 * a1 + two * a0.derivative() * a2 - two * a0 * a2.derivative();
  if (!(check == b0 * b3)) return std::nullopt;
  return DiffOperator::from_rational({a0, a1, a2});
}

ProjectiveNormalForm projective_normal_form2(const DiffOperator& l2) {
  if (l2.order() != 2) throw Error(ErrorKind::WrongOrder, "normal form needs an order-2 operator");
  const RationalFunction a2 = l2.coeff(2);
  const RationalFunction f1 = RationalFunction(l2.coeff(1)) / a2;
  const RationalFunction f0 = RationalFunction(l2.coeff(0)) / a2;
  const RationalFunction half(RationalPoly::constant(BigRat(1, 2)));
  const RationalFunction quarter(RationalPoly::constant(BigRat(1, 4)));
  ProjectiveNormalForm out;
  out.potential = f0 - half * f1.derivative() - quarter * f1 * f1;
  out.op = DiffOperator::from_rational({out.potential, RationalFunction(), RationalFunction(RationalPoly{1})});
  return out;
}

DiffOperator table_order3(int group) {
  if (group == 1) return DiffOperator({{0, 3}, {0, 0, 7}, {162, 0, 0, 6}, {0, 108, 0, 0, 1}});
  if (group == 2) return DiffOperator({{0, 1}, {0, 0, 7}, {0, 0, 0, 6}, {-256, 0, 0, 0, 1}});
  throw Error(ErrorKind::InvalidArgument, "group must be 1 or 2");
}

DiffOperator table_order2(int group) {
  const auto quarter_t2 = RationalPoly::monomial(BigRat(1, 4), 2);
  if (group == 1) return DiffOperator({quarter_t2, {54, 0, 0, 2}, {0, 108, 0, 0, 1}});
  if (group == 2) return DiffOperator({quarter_t2, {0, 0, 0, 2}, {-256, 0, 0, 0, 1}});
  throw Error(ErrorKind::InvalidArgument, "group must be 1 or 2");
}

RationalFunction table_potential(int group) {
  if (group == 1)
    return RationalFunction(RationalPoly{8748, 0, 0, -540, 0, 0, 1},
                            RationalPoly{0, 0, 46656, 0, 0, 864, 0, 0, 4});
  if (group == 2)
    return RationalFunction(RationalPoly{0, 0, 2816, 0, 0, 0, 1},
                            RationalPoly{262144, 0, 0, 0, -2048, 0, 0, 0, 4});
  throw Error(ErrorKind::InvalidArgument, "group must be 1 or 2");
}

}  // namespace arithmirror
