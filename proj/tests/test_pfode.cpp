#include <doctest.h>

#include <random>

#include "arithmirror/datasets.hpp"
#include "arithmirror/error.hpp"
#include "arithmirror/pfode.hpp"
#include "support/oracles.hpp"

using namespace arithmirror;

namespace {

// Group I operator as re-derived from the period series of its polytopes.
DiffOperator derived_group1() { return DiffOperator({{0, 1}, {0, 0, 7}, {162, 0, 0, 6}, {0, 108, 0, 0, 1}}); }

std::vector<std::vector<std::int64_t>> to_rows(const std::vector<Point>& pts) {
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_SUITE("pfode") {
  TEST_CASE("polynomial arithmetic") {
    const RationalPoly a{1, 2, 1}, b{1, 1};
    CHECK(a == b * b);
    const auto [q, r] = divmod(a, b);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(gcd(a, RationalPoly{-1, 0, 1}) == b);
    CHECK(gcd(RationalPoly{}, RationalPoly{}).is_zero());
    CHECK(a.derivative() == RationalPoly{2, 2});
    CHECK(a.negate_variable() == RationalPoly{1, -2, 1});
    CHECK(a.eval(BigRat(1, 2)) == BigRat(9, 4));
    CHECK((a - a).is_zero());
    CHECK(RationalPoly{0, 0, 0}.degree() == -1);
    CHECK_THROWS_AS(divmod(a, RationalPoly{}), Error);
    CHECK(to_string(RationalPoly{-256, 0, 0, 0, 1}) == "t^4 - 256");
    CHECK(to_string(RationalPoly::monomial(BigRat(1, 4), 2)) == "t^2/4");
    CHECK(to_string(RationalPoly{162, 0, 0, 6}) == "6t^3 + 162");
  }

  TEST_CASE("rational functions stay reduced") {
    const RationalFunction f(RationalPoly{-1, 0, 1}, RationalPoly{2, 2});
    CHECK(f.num() == RationalPoly::constant(BigRat(1, 2)) * RationalPoly{-1, 1});
    CHECK(f.den() == RationalPoly::constant(1));
    const RationalFunction g(RationalPoly{1}, RationalPoly{0, 1});
    CHECK(g * RationalFunction(RationalPoly{0, 1}) == RationalFunction(RationalPoly{1}));
    CHECK(g.derivative() == RationalFunction(RationalPoly{-1}, RationalPoly{0, 0, 1}));
    CHECK((g + g - g) == g);
    CHECK((g / g) == RationalFunction(RationalPoly{1}));
    CHECK_THROWS_AS(RationalFunction(RationalPoly{1}, RationalPoly{}), Error);
  }

  TEST_CASE("operator normalization") {
    const DiffOperator l({{0, 2}, {4}, {0, 0, -6}});
    CHECK(l.coeff(0) == RationalPoly{0, -1});
    CHECK(l.coeff(2) == RationalPoly{0, 0, 3});
    CHECK(l.order() == 2);
    CHECK(DiffOperator({{}, {}}).is_zero());
    CHECK(l.max_degree() == 2);
  }

  TEST_CASE("equality up to a unit") {
    const auto l = table_order3(2);
    std::vector<RationalPoly> seven, poly;
    for (const auto& c : l.coeffs()) {
      seven.push_back(RationalPoly{7} * c);
      poly.push_back(RationalPoly{1, 0, 1} * c);
    }
    CHECK(operator_equal_up_to_unit(l, DiffOperator(seven)));
    CHECK(operator_equal_up_to_unit(l, DiffOperator(poly)));
    CHECK_FALSE(operator_equal_up_to_unit(table_order3(1), table_order3(2)));
    CHECK_FALSE(operator_equal_up_to_unit(l, table_order2(2)));
  }

  TEST_CASE("constant terms against a term-by-term expansion") {
    for (const char* name : {"diamond", "p2", "square", "poly3", "poly10", "poly4283"}) {
      const auto dual = polar_dual(*builtin_polytope(name));
      const auto ct = constant_terms(dual.vertices(), 8, 2);
      for (unsigned k = 0; k <= 8; ++k) {
        CAPTURE(name);
        CAPTURE(k);
        CHECK(ct[k] == oracle::constant_term_walk(to_rows(dual.vertices()), k));
      }
      CHECK(ct[0] == 1);
      CHECK(ct[1] == 0);
    }
  }

  TEST_CASE("constant terms in closed form") {
    const std::vector<Point> diamond{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const auto ct = constant_terms(diamond, 20);
    CHECK(ct[2] == 4);
    CHECK(ct[4] == 36);
    for (unsigned k = 0; k <= 20; k += 2) {
      const auto b = oracle::binomial(k, k / 2);
      CHECK(ct[k] == b * b);
      CHECK(ct[k + 1 <= 20 ? k + 1 : k - 1] == 0);
    }
    const std::vector<Point> p2{{1, 0}, {0, 1}, {-1, -1}};
    const auto c2 = constant_terms(p2, 30, 3);
    CHECK(c2[3] == 6);
    CHECK(c2[6] == 90);
    for (unsigned k = 0; k <= 10; ++k) {
      const auto f = oracle::factorial(k);
      CHECK(c2[3 * k] == oracle::factorial(3 * k) / (f * f * f));
    }
    CHECK(constant_terms(p2, 30, 1) == c2);
  }

  TEST_CASE("period series layout") {
    const auto s = period_series(*builtin_polytope("p2"), 9);
    CHECK(s.prefactor_exponent == 1);
    REQUIRE(s.coeffs.size() == 10);
    CHECK(s.coeffs[0] == 1);
    CHECK(s.coeffs[3] == -6);
    CHECK(s.coeffs[6] == 90);
    CHECK_THROWS_AS(period_series(*builtin_polytope("p2"), 61), Error);
  }

  TEST_CASE("apply_operator trivial cases") {
    const auto s = period_series(*builtin_polytope("poly10"), 12);
    CHECK(apply_operator(DiffOperator(), s).is_zero());
    const RationalSeries constant{0, {BigRat(5)}};
    CHECK(apply_operator(DiffOperator({{}, {1}}), constant).is_zero());
    // t d/dt (w^2) = -2 w^2
    const RationalSeries w2{2, {BigRat(1)}};
    const auto out = apply_operator(DiffOperator({{}, {0, 1}}), w2);
    CHECK(out.prefactor_exponent == 2);
    CHECK(out.coeffs[0] == -2);
  }

  TEST_CASE("recover_operator") {
    // w + 2w^2 - w^3 = (t^2 + 2t - 1)/t^3 is killed by t(t^2+2t-1) d/dt + (t^2+4t-3).
    RationalSeries poly{1, std::vector<BigRat>(16, BigRat(0))};
    poly.coeffs[0] = 1;
    poly.coeffs[1] = 2;
    poly.coeffs[2] = -1;
    const auto first = recover_operator(poly, 1, 3);
    REQUIRE(first.has_value());
    CHECK(first->order() == 1);
    CHECK(apply_operator(*first, poly).is_zero());
    CHECK(operator_equal_up_to_unit(*first, DiffOperator({{-3, 4, 1}, {0, -1, 2, 1}})));

    const auto s10 = period_series(*builtin_polytope("poly10"), 20);
    CHECK_THROWS_AS(recover_operator(s10, 3, 4), Error);  // 20 unknowns need 25 coefficients

    const auto p2 = period_series(*builtin_polytope("p2"), 20);
    const auto l = recover_operator(p2, 2, 3);
    REQUIRE(l.has_value());
    // the cubic pencil's period satisfies an order-2 operator with singularities at t^3 = -27
    CHECK(apply_operator(*l, period_series(*builtin_polytope("p2"), 40)).is_zero());
  }

  TEST_CASE("group operators recovered from period series") {
    for (const char* name : {"poly4283", "poly753", "poly754"}) {
      CAPTURE(name);
      const auto op = recover_operator(period_series(*builtin_polytope(name), 30), 3, 4);
      REQUIRE(op.has_value());
      CHECK(*op == derived_group1());
    }
    for (const char* name : {"poly4314", "poly433", "poly3316", "poly436", "poly3321"}) {
      CAPTURE(name);
      const auto op = recover_operator(period_series(*builtin_polytope(name), 30), 3, 4);
      REQUIRE(op.has_value());
      CHECK(*op == table_order3(2));
    }
  }

  TEST_CASE("annihilation of the period series") {
    const auto g2 = period_series(*builtin_polytope("poly433"), 30);
    CHECK(apply_operator(table_order3(2), g2).is_zero());
    CHECK(apply_operator(table_order3(2).negate_variable(), g2).is_zero());
    const auto g1 = period_series(*builtin_polytope("poly753"), 30);
    CHECK(apply_operator(derived_group1(), g1).is_zero());
    // The operator with zeroth coefficient 3t kills neither sign convention.
    CHECK_FALSE(apply_operator(table_order3(1), g1).is_zero());
    CHECK_FALSE(apply_operator(table_order3(1).negate_variable(), g1).is_zero());
  }

  TEST_CASE("symmetric squares") {
    CHECK(symmetric_square(DiffOperator({{}, {}, {1}})) == DiffOperator({{}, {}, {}, {1}}));
    const auto sq2 = symmetric_square(table_order2(2));
    CHECK(operator_equal_up_to_unit(sq2, table_order3(2)));
    std::vector<RationalPoly> scaled;
    const auto t1 = table_order3(2);
    for (const auto& c : t1.coeffs()) scaled.push_back(RationalPoly{-256, 0, 0, 0, 1} * c);
    CHECK(sq2 == DiffOperator(scaled));
    CHECK(operator_equal_up_to_unit(symmetric_square(table_order2(1)), derived_group1()));
    CHECK_THROWS_AS(symmetric_square(table_order3(1)), Error);
  }

  TEST_CASE("symmetric square roots") {
    const auto r2 = symmetric_square_root(table_order3(2));
    REQUIRE(r2.has_value());
    CHECK(operator_equal_up_to_unit(*r2, table_order2(2)));
    const auto r1 = symmetric_square_root(derived_group1());
    REQUIRE(r1.has_value());
    CHECK(operator_equal_up_to_unit(*r1, table_order2(1)));
    CHECK_FALSE(symmetric_square_root(table_order3(1)).has_value());
    CHECK_THROWS_AS(symmetric_square_root(table_order2(1)), Error);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-3, 3);
    int round_trips = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<RationalPoly> c;
      for (int i = 0; i < 3; ++i) c.push_back(RationalPoly{coef(rng), coef(rng), coef(rng)});
      if (c[2].is_zero()) continue;
      const DiffOperator l(c);
      const auto root = symmetric_square_root(symmetric_square(l));
      REQUIRE(root.has_value());
      CHECK(operator_equal_up_to_unit(*root, l));
      ++round_trips;
    }
    CHECK(round_trips > 40);
  }

  TEST_CASE("projective normal forms") {
    for (int g : {1, 2}) {
      const auto pnf = projective_normal_form2(table_order2(g));
      CHECK(pnf.potential == table_potential(g));
      const auto again = projective_normal_form2(pnf.op);
      CHECK(again.potential == pnf.potential);
      CHECK(again.op == pnf.op);
    }
    // t^2 (t^4 + 2816) / (4 (t^2 + 16)^2 (t + 4)^2 (t - 4)^2), assembled factor by factor
    const RationalPoly a{16, 0, 1}, b{4, 1}, c{-4, 1};
    CHECK(table_potential(2) == RationalFunction(RationalPoly{0, 0, 1} * RationalPoly{2816, 0, 0, 0, 1},
                                                 RationalPoly{4} * a * a * b * b * c * c));
    // (t^6 - 540 t^3 + 8748) / (4 t^2 (t^3 + 108)^2)
    const RationalPoly d{108, 0, 0, 1};
    CHECK(table_potential(1) == RationalFunction(RationalPoly{8748, 0, 0, -540, 0, 0, 1},
                                                 RationalPoly{0, 0, 4} * d * d));
    const DiffOperator normal({{1, 0, 1}, {}, {2}});
    CHECK(projective_normal_form2(normal).op == normal);
    CHECK_THROWS_AS(projective_normal_form2(table_order3(2)), Error);
  }

  TEST_CASE("pretty printing") {
    CHECK(pretty(table_order3(2)) == "(t)P + (7t^2)P' + (6t^3)P'' + (t^4 - 256)P'''");
    CHECK(pretty(table_order2(1), table_order2_scale()) ==
          "(t^2/4)P + (2t^3 + 54)P' + (t^4 + 108t)P''");
  }
}
