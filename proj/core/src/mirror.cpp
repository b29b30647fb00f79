#include "arithmirror/mirror.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "arithmirror/datasets.hpp"
#include "arithmirror/error.hpp"
#include "parallel.hpp"

namespace arithmirror {

MirrorReport compare_tables(const CountTable& x, const CountTable& y) {
  if (x.p != y.p || x.s != y.s || x.rows.size() != y.rows.size())
    throw Error(ErrorKind::InvalidArgument, "count tables are over different fields");
  MirrorReport r;
  r.id_x = x.polytope_id;
  r.id_y = y.polytope_id;
  r.p = x.p;
  r.s = x.s;
  r.q = static_cast<std::uint32_t>(x.rows.size());
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    MirrorRow row;
    row.t = x.rows[i].t;
    row.count_x = x.rows[i].count;
    row.count_y = y.rows[i].count;
    row.smooth_x = x.rows[i].smooth;
    row.smooth_y = y.rows[i].smooth;
    row.both_smooth = row.smooth_x && row.smooth_y;
    row.congruent = row.count_x % r.q == row.count_y % r.q;
    row.equal = row.count_x == row.count_y;
    if (row.both_smooth) {
      ++r.smooth_rows;
      r.congruent = r.congruent && row.congruent;
      r.equal = r.equal && row.equal;
    }
    r.rows.push_back(row);
  }
  return r;
}

MirrorReport congruence_test(const LatticePolytope& x, const LatticePolytope& y, std::uint32_t p,
                             std::uint32_t s, const std::string& id_x, const std::string& id_y,
                             TriangulationOrder order, unsigned workers) {
  if (x.dim() != y.dim())
    throw Error(ErrorKind::InvalidArgument, "polytopes have different dimensions");
  const auto field = FiniteField::make(p, s);
  const auto px = build_pencil(x, order);
  const auto py = build_pencil(y, order);
  return compare_tables(count_table(px, field, id_x, workers),
                        count_table(py, field, id_y, workers));
}

std::string to_string(PolygonCondition c) {
  switch (c) {
    case PolygonCondition::Triangles: return "triangles";
    case PolygonCondition::SelfDual: return "self-dual";
    case PolygonCondition::P1xP1: return "P1xP1";
    case PolygonCondition::None: break;
  }
  return "none";
}

std::string to_string(PolygonVerdict v) {
  switch (v) {
    case PolygonVerdict::Equal: return "EQUAL";
    case PolygonVerdict::NotEqual: return "NOT_EQUAL";
    case PolygonVerdict::Undetermined: break;
  }
  return "UNDETERMINED";
}

namespace {

PolygonCondition polygon_condition(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.is_simplex() && b.is_simplex()) return PolygonCondition::Triangles;
  if (lattice_equivalent(a, b)) return PolygonCondition::SelfDual;
  const auto p1xp1 = *builtin_polytope("p1xp1");
  if (lattice_equivalent(a, p1xp1) || lattice_equivalent(b, p1xp1)) return PolygonCondition::P1xP1;
  return PolygonCondition::None;
}

// Compares the pencils of a and b over F_{p^s}; records the first unequal
// mutually smooth value.
void compare_over(const PencilHypersurface& x, const PencilHypersurface& y, std::uint32_t p,
                  std::uint32_t s, PolygonClassification& out) {
  const auto field = FiniteField::make(p, s);
  const auto r = compare_tables(count_table(x, field, "X"), count_table(y, field, "Y"));
  out.smooth_values_tested += r.smooth_rows;
  if (out.witness) return;
  for (const auto& row : r.rows)
    if (row.both_smooth && !row.equal) {
      out.witness = Witness{p, s, row.t, row.count_x, row.count_y};
      return;
    }
}

}  // namespace

std::vector<PolygonClassification> classify_polygon_pairs(const ClassifyOptions& options) {
  const auto polygons = reflexive_polygons();
  std::vector<PolygonClassification> out(polygons.size());
  detail::parallel_for(polygons.size(), options.workers, [&](std::size_t i) {
    const auto& a = polygons[i].polytope;
    const auto b = polar_dual(a);
    auto& c = out[i];
    c.polygon_id = polygons[i].id;
    c.dual_id = polygons[i].id;
    for (const auto& other : polygons)
      if (lattice_equivalent(other.polytope, b)) {
        c.dual_id = other.id;
        break;
      }
    c.condition = polygon_condition(a, b);
    const auto x = build_pencil(a);
    const auto y = build_pencil(b);
    for (const auto& [p, s] : options.fields) compare_over(x, y, p, s, c);
    if (!c.witness && c.condition == PolygonCondition::None)
      for (std::uint32_t p = 2; p < options.witness_prime_bound && !c.witness; ++p)
        if (is_prime(p)) compare_over(x, y, p, 1, c);
    if (c.witness)
      c.verdict = PolygonVerdict::NotEqual;
    else if (c.condition != PolygonCondition::None)
      c.verdict = PolygonVerdict::Equal;
  });
  return out;
}

std::optional<VertexMap> lemma_pair_predicate(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size()) return std::nullopt;
  const auto ka = kernel_basis(a.vertex_matrix());
  for (const auto& map : combinatorially_equivalent(a, b)) {
    std::vector<Point> permuted;
    for (auto j : map) permuted.push_back(b.vertices()[j]);
    const auto m = IntMatrix::from_columns(permuted, static_cast<std::size_t>(b.dim()));
    if (kernel_basis(m) == ka) return map;
  }
  return std::nullopt;
}

PairSearchResult search_pairs(const std::vector<PolytopeRecord>& records, unsigned workers) {
  PairSearchResult result;
  result.records = records.size();
  const std::size_t n = records.size();
  constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Invariant buckets for locating duals among the records.
  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;
  auto key = [](const LatticePolytope& p) {
    return Key{p.dim(), p.vertices().size(), p.facets().size(), p.lattice_points().size()};
  };
  std::map<Key, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[key(records[i].polytope)].push_back(i);

  struct PerRecord {
    bool comb = false;
    bool self_dual = false;
    bool predicate = false;
    std::size_t dual = npos;
  };
  std::vector<PerRecord> info(n);
  detail::parallel_for(n, workers, [&](std::size_t i) {
    const auto& a = records[i].polytope;
    const auto d = polar_dual(a);
    auto& r = info[i];
    r.comb = !combinatorially_equivalent(a, d).empty();
    if (!r.comb) return;
    r.self_dual = lattice_equivalent(a, d).has_value();
    r.predicate = lemma_pair_predicate(a, d).has_value();
    if (r.self_dual) {
      r.dual = i;
      return;
    }
    const auto it = buckets.find(key(d));
    if (it != buckets.end())
      for (auto j : it->second)
        if (lattice_equivalent(records[j].polytope, d)) {
          r.dual = j;
          break;
        }
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = info[i];
    if (r.comb) result.comb_equiv_to_dual.push_back(records[i].id);
    if (!r.comb || !r.predicate) continue;
    if (r.self_dual) {
      result.self_dual.push_back(records[i].id);
      if (records[i].polytope.is_simplex()) result.self_dual_simplex.push_back(records[i].id);
      continue;
    }
    if (r.dual == npos) {
      pairs.emplace_back(i, npos);
    } else {
      pairs.emplace_back(std::min(i, r.dual), std::max(i, r.dual));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::size_t> members;
  for (const auto& [a, b] : pairs) {
    const auto id_b = b == npos ? npos : records[b].id;
    result.kernel_pairs.emplace_back(records[a].id, id_b);
    if (records[a].polytope.is_simplex()) continue;
    result.nonsimplex_pairs.emplace_back(records[a].id, id_b);
    members.push_back(a);
    if (b != npos) members.push_back(b);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // Predicate graph on the members; components by union-find.
  const std::size_t m = members.size();
  std::vector<char> adj(m * m, 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  detail::parallel_for(edges.size(), workers, [&](std::size_t e) {
    const auto [i, j] = edges[e];
    adj[i * m + j] = adj[j * m + i] =
        lemma_pair_predicate(records[members[i]].polytope, records[members[j]].polytope) ? 1 : 0;
  });
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (adj[i * m + j]) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < m; ++i) comps[find(i)].push_back(i);
  for (const auto& [root, idx] : comps) {
    std::vector<std::size_t> group;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      group.push_back(records[members[idx[a]]].id);
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (!adj[idx[a] * m + idx[b]]) result.groups_transitive = false;
    }
    std::sort(group.begin(), group.end());
    result.groups.push_back(std::move(group));
  }
  std::sort(result.groups.begin(), result.groups.end());
  return result;
}

}  // namespace arithmirror
