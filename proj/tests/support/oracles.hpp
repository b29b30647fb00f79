#pragma once

// Independent brute-force references for the test suites. Nothing here calls
// into the library's counting, field or series code.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// --- projective hypersurfaces over F_p, p prime -----------------------------

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

using Coords = std::vector<std::int64_t>;
using Poly = std::function<std::int64_t(const Coords&)>;

// Visits every vector of F_p^n.
inline void each_vector(std::size_t n, std::int64_t p, const std::function<void(const Coords&)>& f) {
  Coords x(n, 0);
  while (true) {
    f(x);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
    if (i == n) return;
  }
}

// Fermat pencil sum x_i^{n+1} + t prod x_i in P^n over F_p.
struct Fermat {
  std::size_t vars;  // n + 1
  std::int64_t p;
  std::int64_t t;

  std::int64_t value(const Coords& x) const {
    std::int64_t s = 0, prod = 1;
    for (auto c : x) {
      s += powmod(c, static_cast<std::int64_t>(vars), p);
      prod = prod * c % p;
    }
    return mod(s + t * prod, p);
  }
  std::int64_t partial(const Coords& x, std::size_t i) const {
    std::int64_t prod = 1;
    for (std::size_t j = 0; j < vars; ++j)
      if (j != i) prod = prod * x[j] % p;
    return mod(static_cast<std::int64_t>(vars) * powmod(x[i], static_cast<std::int64_t>(vars) - 1, p) +
                   t * prod,
               p);
  }
};

inline std::uint64_t fermat_count(std::size_t n, std::int64_t p, std::int64_t t) {
  const Fermat f{n + 1, p, t};
  std::uint64_t zeros = 0;
  each_vector(n + 1, p, [&](const Coords& x) {
    bool nonzero = false;
    for (auto c : x) nonzero = nonzero || c != 0;
    if (nonzero && f.value(x) == 0) ++zeros;
  });
  return zeros / static_cast<std::uint64_t>(p - 1);
}

inline bool fermat_smooth(std::size_t n, std::int64_t p, std::int64_t t) {
  const Fermat f{n + 1, p, t};
  bool singular = false;
  each_vector(n + 1, p, [&](const Coords& x) {
    if (singular) return;
    bool nonzero = false;
    for (auto c : x) nonzero = nonzero || c != 0;
    if (!nonzero || f.value(x) != 0) return;
    for (std::size_t i = 0; i < n + 1; ++i)
      if (f.partial(x, i) != 0) return;
    singular = true;
  });
  return !singular;
}

// Bidegree (2,2) pencil on P1 x P1: sum_{a,b} x_a^2 y_b^2 + t x0 x1 y0 y1.
inline std::int64_t p1p1_value(const Coords& x, std::int64_t p, std::int64_t t) {
  std::int64_t s = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) s += x[a] * x[a] % p * (x[2 + b] * x[2 + b] % p);
  return mod(s + t * (x[0] * x[1] % p) % p * (x[2] * x[3] % p), p);
}

inline std::uint64_t p1p1_count(std::int64_t p, std::int64_t t) {
  std::uint64_t zeros = 0;
  each_vector(4, p, [&](const Coords& x) {
    if ((x[0] == 0 && x[1] == 0) || (x[2] == 0 && x[3] == 0)) return;
    if (p1p1_value(x, p, t) == 0) ++zeros;
  });
  return zeros / static_cast<std::uint64_t>((p - 1) * (p - 1));
}

inline bool p1p1_smooth(std::int64_t p, std::int64_t t) {
  bool singular = false;
  each_vector(4, p, [&](const Coords& x) {
    if (singular) return;
    if ((x[0] == 0 && x[1] == 0) || (x[2] == 0 && x[3] == 0)) return;
    if (p1p1_value(x, p, t) != 0) return;
    // partial derivatives by finite expansion of the quadratic terms
    const std::int64_t sy = x[2] * x[2] + x[3] * x[3], sx = x[0] * x[0] + x[1] * x[1];
    const std::int64_t d[4] = {mod(2 * x[0] * sy + t * x[1] * x[2] % p * x[3], p),
                               mod(2 * x[1] * sy + t * x[0] * x[2] % p * x[3], p),
                               mod(2 * x[2] * sx + t * x[0] * x[1] % p * x[3], p),
                               mod(2 * x[3] * sx + t * x[0] * x[1] % p * x[2], p)};
    singular = d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0;
  });
  return !singular;
}

// --- constant terms -----------------------------------------------------------

// CT(S^k) by expanding S^k term by term (multinomial walk over all k-tuples of
// monomials whose exponents sum to zero), with memoised partial sums.
inline mpz_class constant_term_walk(const std::vector<std::vector<std::int64_t>>& monomials,
                                    unsigned k) {
  // dynamic programming over the partial exponent sum after j factors
  using Key = std::vector<std::int64_t>;
  std::vector<std::pair<Key, mpz_class>> layer = {{Key(monomials.front().size(), 0), 1}};
  for (unsigned j = 0; j < k; ++j) {
    std::vector<std::pair<Key, mpz_class>> next;
    for (const auto& [key, c] : layer)
      for (const auto& m : monomials) {
        Key nk = key;
        for (std::size_t i = 0; i < nk.size(); ++i) nk[i] += m[i];
        bool merged = false;
        for (auto& [k2, c2] : next)
          if (k2 == nk) {
            c2 += c;
            merged = true;
            break;
          }
        if (!merged) next.emplace_back(nk, c);
      }
    layer = std::move(next);
  }
  for (const auto& [key, c] : layer) {
    bool zero = true;
    for (auto v : key) zero = zero && v == 0;
    if (zero) return c;
  }
  return 0;
}

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace oracle
