#include "arithmirror/datasets.hpp"

#include <sstream>

namespace arithmirror {

namespace bundled {
extern const std::string_view kReflexivePolygons;
extern const std::string_view kGroupPolytopes;
}  // namespace bundled

namespace {

std::vector<PolytopeRecord> parse_bundled(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_database(in, "builtin");
}

}  // namespace

std::vector<PolytopeRecord> reflexive_polygons() {
  static const auto records = parse_bundled(bundled::kReflexivePolygons);
  return records;
}

std::vector<PolytopeRecord> group_polytopes() {
  static const auto records = parse_bundled(bundled::kGroupPolytopes);
  return records;
}

const std::vector<FigurePolytope>& figure_polytopes() {
  static const std::vector<FigurePolytope> figures = {
      {3, 1, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {-1, 0, -1}}},
      {4283, 1, {{1, 0, 0}, {1, 3, 0}, {-2, -3, 0}, {1, 0, 3}, {-2, 0, -3}}},
      {753, 1, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 1, 3}, {-1, -1, -3}}},
      {754, 1, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {1, 0, 3}, {-2, 0, -3}}},
      {10, 2, {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 0, 1}, {-2, 0, -1}}},
      {4314, 2, {{1, 0, 0}, {1, 2, 0}, {-3, -2, 0}, {1, 2, 4}, {-3, -2, -4}}},
      {433, 2, {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 1, 2}, {-2, -1, -2}}},
      {3316, 2, {{1, 0, 0}, {1, 2, 0}, {-3, -2, 0}, {1, 0, 2}, {-3, 0, -2}}},
      {436, 2, {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {1, 0, 2}, {-3, 0, -2}}},
      {3321, 2, {{1, 0, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 1, 4}, {-2, -1, -4}}},
  };
  return figures;
}

std::vector<std::optional<int>> match_paper_ids(const std::vector<PolytopeRecord>& records) {
  std::vector<LatticePolytope> figures;
  for (const auto& f : figure_polytopes()) figures.push_back(LatticePolytope::from_points(f.vertices));
  std::vector<std::optional<int>> out;
  for (const auto& r : records) {
    std::optional<int> id;
    if (r.polytope.dim() == 3)
      for (std::size_t i = 0; i < figures.size() && !id; ++i)
        if (lattice_equivalent(r.polytope, figures[i])) id = figure_polytopes()[i].paper_id;
    out.push_back(id);
  }
  return out;
}

std::optional<LatticePolytope> builtin_polytope(std::string_view name) {
  if (name == "diamond" || name == "p1xp1")
    return LatticePolytope::from_points({{-1, 0}, {0, 1}, {1, 0}, {0, -1}});
  if (name == "square") return LatticePolytope::from_points({{-1, -1}, {-1, 1}, {1, 1}, {1, -1}});
  if (name == "p2") return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}});
  if (name == "p3")
    return LatticePolytope::from_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  if (name.rfind("poly", 0) == 0) {
    const std::string id(name.substr(4));
    for (const auto& f : figure_polytopes())
      if (std::to_string(f.paper_id) == id || std::to_string(f.paper_id) + "_3d" == id)
        return LatticePolytope::from_points(f.vertices);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names = {"diamond", "square", "p1xp1", "p2", "p3"};
  for (const auto& f : figure_polytopes()) names.push_back("poly" + std::to_string(f.paper_id));
  return names;
}

std::optional<std::string> label_value(const std::string& label, std::string_view key) {
  std::istringstream in(label);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos && std::string_view(token).substr(0, eq) == key)
      return token.substr(eq + 1);
  }
  return std::nullopt;
}

}  // namespace arithmirror
