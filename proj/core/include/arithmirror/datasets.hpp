#pragma once

// Bundled polytope data: the 16 reflexive polygons and the ten 3-D polytopes
// of Groups I and II, plus a few named polytopes used by examples and tests.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arithmirror/polytope.hpp"

namespace arithmirror {

/// One representative per GL(2, Z) class, ordered by lattice-point count then
/// vertex count. Labels carry "polygon=<i> points=<n> dual=<j>".
std::vector<PolytopeRecord> reflexive_polygons();

/// The ten Group polytopes in their figure coordinates. Labels carry
/// "paper_id=<id> group=<I|II>".
std::vector<PolytopeRecord> group_polytopes();

struct FigurePolytope {
  int paper_id = 0;
  int group = 0;  // 1 or 2
  std::vector<Point> vertices;
};

/// Vertex lists of the Group I and Group II figures.
const std::vector<FigurePolytope>& figure_polytopes();

/// Paper id of each record, found by lattice equivalence with a figure
/// polytope; nullopt for records that match none.
std::vector<std::optional<int>> match_paper_ids(const std::vector<PolytopeRecord>& records);

/// "diamond", "square", "p1xp1", "p2", "p3", or "poly<paper id>".
std::optional<LatticePolytope> builtin_polytope(std::string_view name);
std::vector<std::string> builtin_names();

/// Value of `key=value` in a whitespace separated label.
std::optional<std::string> label_value(const std::string& label, std::string_view key);

}  // namespace arithmirror
