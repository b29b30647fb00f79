#include <doctest.h>

#include <cmath>
#include <optional>
#include <set>

#include "arithmirror/error.hpp"
#include "arithmirror/galois.hpp"

using namespace arithmirror;

namespace {

std::optional<ErrorKind> thrown(std::uint32_t p, std::uint32_t s) {
  try {
    FiniteField::make(p, s);
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("galois") {
  TEST_CASE("construction errors") {
    CHECK(thrown(4, 1) == ErrorKind::NotPrime);
    CHECK(thrown(1, 1) == ErrorKind::NotPrime);
    CHECK(thrown(2, 17) == ErrorKind::OrderTooLarge);
    CHECK(thrown(257, 2) == ErrorKind::OrderTooLarge);
    CHECK(thrown(5, 0) == ErrorKind::InvalidArgument);
    CHECK_FALSE(thrown(2, 16).has_value());
  }

  TEST_CASE("primality") {
    std::set<std::uint64_t> small;
    for (std::uint64_t n = 0; n < 200; ++n) {
      bool prime = n >= 2;
      for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
      CHECK(is_prime(n) == prime);
    }
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(65535));
  }

  TEST_CASE("field axioms, exhaustively for small orders") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
        {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}};
    for (auto [p, s] : fields) {
      const auto F = FiniteField::make(p, s);
      const auto q = F.order();
      CAPTURE(q);
      REQUIRE(q == static_cast<std::uint32_t>(std::pow(p, s)));
      for (std::uint32_t a = 0; a < q; ++a) {
        CHECK(F.add(a, F.zero()) == a);
        CHECK(F.mul(a, F.one()) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        for (std::uint32_t b = 0; b < q; ++b) {
          CHECK(F.add(a, b) == F.add(b, a));
          CHECK(F.mul(a, b) == F.mul(b, a));
          for (std::uint32_t c = 0; c < q; ++c) {
            if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) FAIL("add assoc " << a << b << c);
            if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) FAIL("mul assoc " << a << b << c);
            if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)))
              FAIL("distributivity " << a << b << c);
          }
        }
      }
      // characteristic p, Frobenius additive
      std::uint32_t sum = 0;
      for (std::uint32_t i = 0; i < p; ++i) sum = F.add(sum, F.one());
      CHECK(sum == 0);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
      CHECK_THROWS_AS(F.inv(0), Error);
    }
  }

  TEST_CASE("generator, logarithms and integer images") {
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {2, 4}, {3, 3}, {2, 8}, {251, 1}, {5, 4}}) {
      const auto F = FiniteField::make(p, s);
      const auto q = F.order();
      std::set<std::uint32_t> seen;
      auto x = F.one();
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        CHECK(F.exp(k) == x);
        CHECK(F.log(x) == k);
        seen.insert(x);
        x = F.mul(x, F.generator());
      }
      CHECK(x == F.one());
      CHECK(seen.size() == q - 1);
      CHECK(F.nonzero_elements().size() == q - 1);
      CHECK(F.from_int(-1) == F.neg(F.one()));
      CHECK(F.from_int(static_cast<std::int64_t>(p)) == 0);
      CHECK(F.pow(F.generator(), -1) == F.inv(F.generator()));
      CHECK(F.modulus().size() == (s == 1 ? 2u : s + 1));
    }
  }

  TEST_CASE("torus points") {
    const auto F = FiniteField::make(3, 2);
    const auto pts = torus_points(F, 3);
    CHECK(pts.size() == 512);
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t n = 0;
    for (const auto& x : pts) {
      for (auto c : x) CHECK(c != 0);
      seen.insert(x);
      ++n;
    }
    CHECK(n == 512);
    CHECK(seen.size() == 512);
    CHECK(torus_points(F, 0).size() == 1);
  }
}
