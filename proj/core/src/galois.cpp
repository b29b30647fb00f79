#include "arithmirror/galois.hpp"

#include <algorithm>
#include <string>

#include "arithmirror/error.hpp"

namespace arithmirror {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * m[i]) % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
  Poly a(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    a[i] = code % p;
    code /= p;
  }
  trim(a);
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = decode(low, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > 65536)
      throw Error(ErrorKind::OrderTooLarge,
                  "field order " + std::to_string(p) + "^" + std::to_string(s) + " exceeds 2^16");
  }

  FiniteField f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = static_cast<std::uint32_t>(q);

  if (s == 1) {
    f.modulus_ = {0, 1};
  } else {
    // Smallest monic irreducible by the integer code of its lower coefficients.
    for (std::uint32_t low = 0;; ++low) {
      Poly cand = decode(low, p, s);
      cand.resize(s + 1, 0);
      cand[s] = 1;
      if (cand[0] != 0 && irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
  }

  // Primitive element search: the smallest code whose powers fill F_q^*.
  const std::uint32_t n = f.q_ - 1;
  f.exp_.assign(n, 0);
  f.log_.assign(f.q_, -1);
  for (std::uint32_t g = 1; g < f.q_; ++g) {
    const Poly gp = decode(g, p, s);
    Poly cur = {1};
    std::vector<std::int32_t> log(f.q_, -1);
    std::vector<Element> exp(n);
    bool primitive = true;
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t code = encode(cur, p);
      if (log[code] != -1) {
        primitive = false;
        break;
      }
      log[code] = static_cast<std::int32_t>(k);
      exp[k] = code;
      cur = s == 1 ? Poly{static_cast<std::uint32_t>((static_cast<std::uint64_t>(code) * g) % p)}
                   : poly_mod(poly_mul(cur, gp, p), f.modulus_, p);
      trim(cur);
    }
    if (primitive) {
      f.exp_ = std::move(exp);
      f.log_ = std::move(log);
      break;
    }
  }

  f.zech_.assign(n, -1);
  for (std::uint32_t k = 0; k < n; ++k) {
    const Element sum = f.add_slow(f.one(), f.exp_[k]);
    f.zech_[k] = sum == 0 ? -1 : f.log_[sum];
  }
  return f;
}

FiniteField::Element FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const {
  std::vector<std::uint32_t> c(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Element FiniteField::add_slow(Element a, Element b) const {
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (s_ == 1) {
    const Element r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const std::int32_t la = log_[a];
  const std::int32_t lb = log_[b];
  const std::uint32_t n = q_ - 1;
  const std::int32_t z = zech_[(static_cast<std::uint32_t>(lb) + n - static_cast<std::uint32_t>(la)) % n];
  if (z < 0) return 0;
  return exp_[(static_cast<std::uint32_t>(la) + static_cast<std::uint32_t>(z)) % n];
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (s_ == 1) return a == 0 ? 0 : p_ - a;
  Element out = 0, scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    const Element c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (s_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  return exp_[(static_cast<std::uint32_t>(log_[a]) + static_cast<std::uint32_t>(log_[b])) % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t n = q_ - 1;
  return exp_[(n - static_cast<std::uint32_t>(log_[a])) % n];
}

FiniteField::Element FiniteField::pow(Element a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

std::uint32_t FiniteField::log(Element a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
  return static_cast<std::uint32_t>(log_[a]);
}

std::vector<FiniteField::Element> FiniteField::nonzero_elements() const {
  std::vector<Element> out(q_ - 1);
  for (Element a = 1; a < q_; ++a) out[a - 1] = a;
  return out;
}

// ---------------------------------------------------------------------------

TorusPoints::TorusPoints(const FiniteField& field, std::size_t m)
    : units_(field.nonzero_elements()), m_(m) {}

std::uint64_t TorusPoints::size() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < m_; ++i) n *= units_.size();
  return n;
}

TorusPoints::iterator TorusPoints::begin() const {
  iterator it;
  it.units_ = &units_;
  it.index_.assign(m_, 0);
  it.point_.assign(m_, units_.front());
  it.done_ = false;
  return it;
}

TorusPoints::iterator& TorusPoints::iterator::operator++() {
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (++index_[i] < units_->size()) {
      point_[i] = (*units_)[index_[i]];
      return *this;
    }
    index_[i] = 0;
    point_[i] = units_->front();
  }
  done_ = true;  // wrapped around (or m = 0: a single empty tuple)
  return *this;
}

}  // namespace arithmirror
