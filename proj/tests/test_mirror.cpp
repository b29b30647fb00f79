#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "arithmirror/datasets.hpp"
#include "arithmirror/mirror.hpp"

using namespace arithmirror;

namespace {

const std::vector<int> kGroup1{3, 4283, 753, 754};
const std::vector<int> kGroup2{10, 4314, 433, 3316, 436, 3321};

LatticePolytope poly(int id) { return *builtin_polytope("poly" + std::to_string(id)); }

}  // namespace

TEST_SUITE("mirror") {
  TEST_CASE("compare_tables only judges mutually smooth rows") {
    CountTable x{"x", 3, 1, 0, 0, {{0, 4, true}, {1, 7, true}, {2, 9, false}}};
    CountTable y{"y", 3, 1, 0, 0, {{0, 4, true}, {1, 4, true}, {2, 1, true}}};
    const auto r = compare_tables(x, y);
    CHECK(r.q == 3);
    CHECK(r.smooth_rows == 2);
    CHECK(r.congruent);
    CHECK_FALSE(r.equal);
    CHECK(r.rows[0].equal);
    CHECK_FALSE(r.rows[2].both_smooth);
    CHECK_FALSE(r.rows[2].congruent);
    y.rows[1].count = 5;
    CHECK_FALSE(compare_tables(x, y).congruent);
  }

  TEST_CASE("polygon classification") {
    const auto result = classify_polygon_pairs();
    REQUIRE(result.size() == 16);
    std::size_t equal = 0;
    for (const auto& c : result) {
      CAPTURE(c.polygon_id);
      const bool satisfies = c.condition != PolygonCondition::None;
      CHECK(c.verdict == (satisfies ? PolygonVerdict::Equal : PolygonVerdict::NotEqual));
      CHECK(c.smooth_values_tested > 0);
      if (c.verdict == PolygonVerdict::Equal) ++equal;
      if (c.verdict == PolygonVerdict::NotEqual) {
        REQUIRE(c.witness.has_value());
        CHECK(c.witness->count_x != c.witness->count_y);
        // the witness is reproducible from scratch
        const auto pol = reflexive_polygons();
        const auto rep = congruence_test(pol[c.polygon_id].polytope, pol[c.dual_id].polytope,
                                         c.witness->p, c.witness->s);
        const auto& row = rep.rows[c.witness->t];
        CHECK(row.both_smooth);
        CHECK(row.count_x == c.witness->count_x);
        CHECK(row.count_y == c.witness->count_y);
      }
      CHECK(result[c.dual_id].dual_id == c.polygon_id);
    }
    CHECK(equal == 10);
  }

  TEST_CASE("condition labels") {
    const auto result = classify_polygon_pairs();
    CHECK(result[0].condition == PolygonCondition::Triangles);
    CHECK(result[3].condition == PolygonCondition::P1xP1);
    CHECK(result[13].condition == PolygonCondition::P1xP1);
    for (std::size_t i : {6u, 7u, 8u, 9u}) CHECK(result[i].dual_id == i);
  }

  TEST_CASE("congruence within the groups and across the polar pairs") {
    for (const auto* group : {&kGroup1, &kGroup2})
      for (std::size_t i = 0; i < group->size(); ++i)
        for (std::size_t j = i + 1; j < group->size(); ++j)
          for (std::uint32_t p : {5u, 7u}) {
            CAPTURE((*group)[i]);
            CAPTURE((*group)[j]);
            CAPTURE(p);
            CHECK(congruence_test(poly((*group)[i]), poly((*group)[j]), p).congruent);
          }
  }

  TEST_CASE("different groups are not congruent") {
    const auto r = congruence_test(poly(754), poly(10), 7);
    CHECK(r.smooth_rows > 0);
    CHECK_FALSE(r.congruent);
  }

  TEST_CASE("lemma predicate") {
    CHECK(lemma_pair_predicate(poly(3), poly(4283)).has_value());
    CHECK_FALSE(lemma_pair_predicate(poly(3), poly(10)).has_value());
    const auto p = poly(433);
    const auto id = lemma_pair_predicate(p, p);
    REQUIRE(id.has_value());
    VertexMap identity(p.vertices().size());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(*id == identity);
    for (int a : kGroup1)
      for (int b : kGroup1) {
        CHECK(lemma_pair_predicate(poly(a), poly(b)).has_value());
        CHECK(lemma_pair_predicate(poly(a), poly(b)).has_value() ==
              lemma_pair_predicate(poly(b), poly(a)).has_value());
      }
  }

  TEST_CASE("search over the bundled group polytopes") {
    const auto records = group_polytopes();
    const auto r = search_pairs(records, 2);
    const auto ids = match_paper_ids(records);
    std::vector<std::vector<int>> groups;
    for (const auto& g : r.groups) {
      std::vector<int> paper;
      for (auto i : g) paper.push_back(*ids[i]);
      std::sort(paper.begin(), paper.end());
      groups.push_back(paper);
    }
    std::sort(groups.begin(), groups.end());
    auto g1 = kGroup1, g2 = kGroup2;
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    CHECK(groups == std::vector<std::vector<int>>{g1, g2});
    CHECK(r.groups_transitive);
    CHECK(r.nonsimplex_pairs.size() == 5);
    CHECK(r.self_dual.empty());
    CHECK(r.records == 10);
  }

  TEST_CASE("search over nothing") {
    const auto r = search_pairs({});
    CHECK(r.records == 0);
    CHECK(r.comb_equiv_to_dual.empty());
    CHECK(r.kernel_pairs.empty());
    CHECK(r.groups.empty());
  }

  TEST_CASE("polygons: combinatorial self-duality is a vertex count") {
    const auto polys = reflexive_polygons();
    const auto r = search_pairs(polys);
    std::vector<std::size_t> expected;
    for (const auto& rec : polys) {
      const auto dual_id = std::stoul(*label_value(rec.label, "dual"));
      if (rec.polytope.vertices().size() == polys[dual_id].polytope.vertices().size())
        expected.push_back(rec.id);
    }
    CHECK(r.comb_equiv_to_dual == expected);
    for (auto i : r.self_dual) CHECK(label_value(polys[i].label, "dual") == std::to_string(i));
  }
}
