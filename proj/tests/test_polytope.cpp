#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "arithmirror/datasets.hpp"
#include "arithmirror/error.hpp"
#include "arithmirror/polytope.hpp"
#include "support/polygon_oracle.hpp"

using namespace arithmirror;

namespace {

std::vector<LatticePolytope> all_bundled() {
  std::vector<LatticePolytope> out;
  for (const auto& r : reflexive_polygons()) out.push_back(r.polytope);
  for (const auto& r : group_polytopes()) out.push_back(r.polytope);
  return out;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("polar duals of the small examples") {
    const auto diamond = *builtin_polytope("diamond");
    CHECK(sorted(polar_dual(diamond).vertices()) ==
          sorted({{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}));
    const auto p2 = *builtin_polytope("p2");
    CHECK(sorted(polar_dual(p2).vertices()) == sorted({{2, -1}, {-1, 2}, {-1, -1}}));
  }

  TEST_CASE("duality is an involution that swaps vertices and facets") {
    for (const auto& p : all_bundled()) {
      CHECK(is_reflexive(p));
      const auto d = polar_dual(p);
      CHECK(is_reflexive(d));
      CHECK(same_vertex_set(polar_dual(d), p));
      CHECK(d.vertices().size() == p.facets().size());
      CHECK(d.facets().size() == p.vertices().size());
    }
  }

  TEST_CASE("non-reflexive inputs") {
    const auto big = LatticePolytope::from_points({{2, 2}, {-2, 2}, {-2, -2}, {2, -2}});
    CHECK_FALSE(is_reflexive(big));
    CHECK(kind_of([&] { polar_dual(big); }) == ErrorKind::NonIntegralDual);
    const auto shifted = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
    CHECK(kind_of([&] { polar_dual(shifted); }) == ErrorKind::OriginNotInterior);
    CHECK(kind_of([] { LatticePolytope::from_points({{1}, {-1}}); }) ==
          ErrorKind::UnsupportedDimension);
  }

  TEST_CASE("lattice points") {
    CHECK(builtin_polytope("diamond")->lattice_points().size() == 5);
    CHECK(builtin_polytope("square")->lattice_points().size() == 9);
    const auto pts = builtin_polytope("square")->lattice_points();
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    const auto p4283 = *builtin_polytope("poly4283");
    for (const Point& x : std::vector<Point>{{1, 1, 1}, {0, 1, -1}, {-2, -2, -1}}) {
      CAPTURE(to_string(x));
      CHECK(p4283.contains(x));
      CHECK_FALSE(p4283.vertex_index(x).has_value());
      const auto bd = p4283.boundary_points();
      CHECK(std::find(bd.begin(), bd.end(), x) != bd.end());
    }
    CHECK(enumerate_lattice_points(p4283) == p4283.lattice_points());
  }

  TEST_CASE("face lattices") {
    for (const auto& rec : group_polytopes()) {
      const auto& p = rec.polytope;
      const auto fl = face_lattice(p);
      CHECK(fl.count(-1) == 1);
      CHECK(fl.count(0) == p.vertices().size());
      CHECK(fl.count(2) == p.facets().size());
      CHECK(fl.count(3) == 1);
      CHECK(fl.count(0) - fl.count(1) + fl.count(2) == 2);  // Euler
    }
    const auto sq = face_lattice(*builtin_polytope("square"));
    CHECK(sq.count(0) == 4);
    CHECK(sq.count(1) == 4);
  }

  TEST_CASE("combinatorial equivalence") {
    const auto diamond = *builtin_polytope("diamond");
    const auto square = *builtin_polytope("square");
    const auto maps = combinatorially_equivalent(diamond, square);
    CHECK(maps.size() == 8);  // dihedral group of the 4-cycle
    for (const auto& p : all_bundled()) {
      const auto self = combinatorially_equivalent(p, p);
      VertexMap id(p.vertices().size());
      std::iota(id.begin(), id.end(), 0);
      CHECK(std::find(self.begin(), self.end(), id) != self.end());
    }
    const auto p3 = *builtin_polytope("poly3");
    CHECK_FALSE(combinatorially_equivalent(p3, polar_dual(p3)).empty());
    const auto cube = LatticePolytope::from_points(
        {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    CHECK(combinatorially_equivalent(*builtin_polytope("p3"), cube).empty());
  }

  TEST_CASE("lattice equivalence") {
    const auto diamond = *builtin_polytope("diamond");
    const auto rotated = transform(IntMatrix{{0, -1}, {1, 0}}, diamond);
    const auto g = lattice_equivalent(diamond, rotated);
    REQUIRE(g.has_value());
    CHECK(abs(determinant(*g)) == 1);
    CHECK(same_vertex_set(transform(*g, diamond), rotated));
    CHECK_FALSE(lattice_equivalent(diamond, *builtin_polytope("square")).has_value());

    // lattice equivalence implies combinatorial equivalence and equal point counts
    const auto polys = reflexive_polygons();
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = 0; j < polys.size(); ++j) {
        const bool eq = lattice_equivalent(polys[i].polytope, polys[j].polytope).has_value();
        CHECK(eq == (i == j));
      }
  }

  TEST_CASE("figure polytopes are recovered from transformed copies") {
    std::vector<PolytopeRecord> records;
    const IntMatrix g{{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
    REQUIRE(abs(determinant(g)) == 1);
    std::size_t id = 0;
    for (const auto& f : figure_polytopes()) {
      auto p = transform(g, LatticePolytope::from_points(f.vertices));
      records.push_back(PolytopeRecord{id++, p, "test", ""});
    }
    records.push_back(PolytopeRecord{id++, *builtin_polytope("p3"), "test", ""});
    const auto ids = match_paper_ids(records);
    for (std::size_t i = 0; i < figure_polytopes().size(); ++i)
      CHECK(ids[i] == figure_polytopes()[i].paper_id);
    CHECK_FALSE(ids.back().has_value());
  }

  TEST_CASE("database parsing") {
    std::istringstream one("3 5 first\n1 0 -1 0 -1\n0 1 -1 0 0\n0 0 0 1 -1\n");
    const auto recs = parse_database(one, "mem");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].polytope.vertices().size() == 5);
    CHECK(recs[0].label == "first");
    CHECK(same_vertex_set(recs[0].polytope, *builtin_polytope("poly3")));

    std::istringstream rows("4 2\n1 0\n0 1\n-1 0\n0 -1\n");
    CHECK(same_vertex_set(parse_database(rows, "mem").at(0).polytope, *builtin_polytope("diamond")));

    std::istringstream empty("");
    CHECK(parse_database(empty, "mem").empty());

    std::istringstream bad("2 3\n1 0 -1\n0 x -1\n");
    CHECK(kind_of([&] { parse_database(bad, "mem"); }) == ErrorKind::ParseError);
    try {
      std::istringstream bad2("2 3\n1 0 -1\n0 x -1\n");
      parse_database(bad2, "mem");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("mem:3:") != std::string::npos);
    }

    std::istringstream nonrefl("2 4\n2 -2 -2 2\n2 2 -2 -2\n");
    CHECK(kind_of([&] { parse_database(nonrefl, "mem"); }) == ErrorKind::ValidationError);

    const auto groups = ingest_database(ARITHMIRROR_TEST_DATA_DIR "/group_polytopes.txt");
    CHECK(groups.size() == 10);
    CHECK(groups[0].id == 0);
    CHECK(label_value(groups[0].label, "paper_id") == "3");
  }

  TEST_CASE("format_block round trip") {
    for (const auto& p : all_bundled()) {
      std::istringstream in(format_block(p, "x=1"));
      const auto back = parse_database(in, "mem");
      REQUIRE(back.size() == 1);
      CHECK(back[0].polytope.vertices() == p.vertices());
    }
  }

  TEST_CASE("brute-force polygon oracle finds exactly the 16 bundled classes") {
    const auto found = oracle::reflexive_polygons_in_box(4, 6);
    std::vector<LatticePolytope> classes;
    for (const auto& h : found) {
      std::vector<Point> pts;
      for (const auto& q : h) pts.push_back({q.x, q.y});
      const auto lp = LatticePolytope::from_points(pts);
      const bool known = std::any_of(classes.begin(), classes.end(), [&](const LatticePolytope& c) {
        return lattice_equivalent(c, lp).has_value();
      });
      if (!known) classes.push_back(lp);
    }
    CHECK(classes.size() == 16);
    for (const auto& r : reflexive_polygons())
      CHECK(std::count_if(classes.begin(), classes.end(), [&](const LatticePolytope& c) {
              return lattice_equivalent(c, r.polytope).has_value();
            }) == 1);
  }
}
