#include <doctest.h>

#include "arithmirror/datasets.hpp"
#include "arithmirror/error.hpp"
#include "arithmirror/pencil.hpp"
#include "support/oracles.hpp"

using namespace arithmirror;

TEST_SUITE("pencil") {
  TEST_CASE("Cox form of the cubic pencil") {
    const auto pencil = build_pencil(*builtin_polytope("p2"));
    CHECK(pencil.cox_form() == "z1^3 + z2^3 + z3^3 + t*z1*z2*z3");
  }

  TEST_CASE("projective plane and space against Fermat enumeration") {
    for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{{"p2", 2}, {"p3", 3}}) {
      const auto pencil = build_pencil(*builtin_polytope(name));
      for (std::uint32_t p : {3u, 5u, 7u}) {
        const auto F = FiniteField::make(p);
        const auto table = count_table(pencil, F, name);
        REQUIRE(table.rows.size() == p);
        for (std::uint32_t t = 0; t < p; ++t) {
          CAPTURE(name);
          CAPTURE(p);
          CAPTURE(t);
          CHECK(table.rows[t].count == oracle::fermat_count(n, p, t));
          CHECK(table.rows[t].smooth == oracle::fermat_smooth(n, p, t));
          CHECK(count_points(pencil, F, t) == table.rows[t].count);
          CHECK(is_smooth_member(pencil, F, t) == table.rows[t].smooth);
        }
      }
    }
  }

  TEST_CASE("diamond pencil against the bidegree (2,2) curve on P1 x P1") {
    const auto pencil = build_pencil(*builtin_polytope("diamond"));
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
      const auto table = count_table(pencil, FiniteField::make(p), "diamond");
      for (std::uint32_t t = 0; t < p; ++t) {
        CAPTURE(p);
        CAPTURE(t);
        CHECK(table.rows[t].count == oracle::p1p1_count(p, t));
        CHECK(table.rows[t].smooth == oracle::p1p1_smooth(p, t));
      }
    }
  }

  TEST_CASE("stratified counts agree with Cox enumeration, prime and prime-power fields") {
    for (const char* name : {"p2", "diamond", "p1xp1", "p3"}) {
      const auto pencil = build_pencil(*builtin_polytope(name));
      for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
        if (std::string(name) == "p3" && s > 1) continue;
        const auto F = FiniteField::make(p, s);
        const auto table = count_table(pencil, F, name);
        for (std::uint32_t t = 0; t < F.order(); ++t) {
          CAPTURE(name);
          CAPTURE(F.order());
          CAPTURE(t);
          CHECK(table.rows[t].count == count_points_cox_oracle(pencil, F, t));
        }
      }
    }
  }

  TEST_CASE("Cox enumeration refuses a torsion quotient") {
    const auto pencil = build_pencil(*builtin_polytope("square"));
    try {
      count_points_cox_oracle(pencil, FiniteField::make(5), 1);
      FAIL("expected TorsionUnsupported");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TorsionUnsupported);
    }
  }

  TEST_CASE("ambient point counts") {
    const auto p2 = build_pencil(*builtin_polytope("p2"));
    for (std::uint32_t q : {3u, 4u, 5u, 9u}) CHECK(p2.ambient_points(q) == q * q + q + 1);
    const auto dm = build_pencil(*builtin_polytope("diamond"));
    for (std::uint32_t q : {3u, 5u}) CHECK(dm.ambient_points(q) == (q + 1) * (q + 1));
  }

  TEST_CASE("worker count does not change the table") {
    const auto pencil = build_pencil(*builtin_polytope("poly4283"));
    const auto F = FiniteField::make(7);
    const auto a = count_table(pencil, F, "x", 1);
    const auto b = count_table(pencil, F, "x", 3);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].count == b.rows[i].count);
      CHECK(a.rows[i].smooth == b.rows[i].smooth);
    }
  }

  TEST_CASE("counts do not depend on the triangulation order") {
    for (const auto& rec : group_polytopes()) {
      const auto lex = build_pencil(rec.polytope, TriangulationOrder::Lex);
      const auto rev = build_pencil(rec.polytope, TriangulationOrder::RevLex);
      for (std::uint32_t p : {5u, 7u}) {
        const auto F = FiniteField::make(p);
        const auto a = count_table(lex, F, rec.label);
        const auto b = count_table(rev, F, rec.label);
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
          CAPTURE(rec.label);
          CAPTURE(p);
          CAPTURE(i);
          CHECK(a.rows[i].count == b.rows[i].count);
          CHECK(a.rows[i].smooth == b.rows[i].smooth);
        }
      }
    }
  }

  TEST_CASE("table metadata") {
    const auto pencil = build_pencil(*builtin_polytope("p2"));
    const auto t = count_table(pencil, FiniteField::make(2, 2), "p2");
    CHECK(t.p == 2);
    CHECK(t.s == 2);
    CHECK(t.rows.size() == 4);
    CHECK(t.polytope_hash == pencil.polytope().hash());
    CHECK(t.triangulation_hash == pencil.fan().fingerprint());
  }

  TEST_CASE("non-reflexive input is rejected") {
    const auto big = LatticePolytope::from_points({{2, 2}, {-2, 2}, {-2, -2}, {2, -2}});
    CHECK_THROWS_AS(build_pencil(big), Error);
  }
}
