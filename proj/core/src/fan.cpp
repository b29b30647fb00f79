#include "arithmirror/fan.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "arithmirror/error.hpp"

namespace arithmirror {

bool operator==(const Cone& a, const Cone& b) { return a.dim == b.dim && a.rays == b.rays; }

Fan::Fan(int dim, std::vector<Point> rays, std::vector<std::vector<Cone>> cones_by_dim)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones_by_dim)) {
  for (auto& level : cones_)
    std::sort(level.begin(), level.end(),
              [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
}

std::size_t Fan::cone_count() const {
  std::size_t n = 0;
  for (const auto& level : cones_) n += level.size();
  return n;
}

std::vector<Point> Fan::generators(const Cone& c) const {
  std::vector<Point> out;
  for (auto r : c.rays) out.push_back(rays_[r]);
  return out;
}

bool Fan::is_simplicial() const {
  for (const auto& level : cones_)
    for (const auto& c : level)
      if (c.rays.size() != static_cast<std::size_t>(c.dim)) return false;
  return true;
}

std::uint64_t Fan::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(dim_);
  for (const auto& r : rays_)
    for (auto c : r) mix(c);
  for (const auto& level : cones_) {
    mix(-1);
    for (const auto& c : level) {
      mix(-2);
      for (auto r : c.rays) mix(static_cast<std::int64_t>(r));
    }
  }
  return h;
}

Fan face_fan(const LatticePolytope& p) {
  const int n = p.dim();
  std::vector<std::vector<Cone>> cones(static_cast<std::size_t>(n) + 1);
  cones[0].push_back(Cone{{}, 0});
  for (const auto& face : face_lattice(p).faces) {
    if (face.dim < 0 || face.dim >= n) continue;
    Cone c;
    c.dim = face.dim + 1;
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
      if (face.vertices >> i & 1) c.rays.push_back(i);
    cones[static_cast<std::size_t>(c.dim)].push_back(std::move(c));
  }
  return Fan(n, p.vertices(), std::move(cones));
}

namespace {

using Triangle = std::array<std::size_t, 3>;

std::int64_t orient(const Point& normal, const Point& a, const Point& b, const Point& c) {
  const std::int64_t x1 = b[0] - a[0], y1 = b[1] - a[1], z1 = b[2] - a[2];
  const std::int64_t x2 = c[0] - a[0], y2 = c[1] - a[1], z2 = c[2] - a[2];
  const std::int64_t cx = y1 * z2 - z1 * y2;
  const std::int64_t cy = z1 * x2 - x1 * z2;
  const std::int64_t cz = x1 * y2 - y1 * x2;
  return normal[0] * cx + normal[1] * cy + normal[2] * cz;
}

// Triangulates one facet of a 3-d polytope. `pts` are the facet's lattice
// points (lexicographic), `is_vertex` marks the facet vertices. Returned
// triangles index into `pts` and are positively oriented w.r.t. `normal`.
std::vector<Triangle> triangulate_facet(const Point& normal, const std::vector<Point>& pts,
                                        const std::vector<bool>& is_vertex,
                                        TriangulationOrder order) {
  std::vector<std::size_t> verts;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (is_vertex[i]) verts.push_back(i);
  const std::size_t apex = verts.front();  // lexicographically smallest vertex
  std::vector<std::size_t> rest(verts.begin() + 1, verts.end());
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return orient(normal, pts[apex], pts[a], pts[b]) > 0;
  });
  std::vector<Triangle> tris;
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) tris.push_back({apex, rest[i], rest[i + 1]});

  std::vector<std::size_t> inserts;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!is_vertex[i]) inserts.push_back(i);
  if (order == TriangulationOrder::RevLex) std::reverse(inserts.begin(), inserts.end());

  for (std::size_t p : inserts) {
    bool placed = false;
    for (std::size_t t = 0; t < tris.size() && !placed; ++t) {
      const auto [a, b, c] = tris[t];
      const std::array<std::int64_t, 3> o = {orient(normal, pts[a], pts[b], pts[p]),
                                             orient(normal, pts[b], pts[c], pts[p]),
                                             orient(normal, pts[c], pts[a], pts[p])};
      if (o[0] < 0 || o[1] < 0 || o[2] < 0) continue;
      placed = true;
      const int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
      if (zeros == 0) {
        tris[t] = {a, b, p};
        tris.push_back({b, c, p});
        tris.push_back({c, a, p});
        continue;
      }
      // p lies on an edge; split every triangle sharing it.
      std::size_t e0 = a, e1 = b;
      if (o[1] == 0) {
        e0 = b;
        e1 = c;
      } else if (o[2] == 0) {
        e0 = c;
        e1 = a;
      }
      std::vector<Triangle> next;
      for (const auto& tri : tris) {
        Triangle r = tri;
        bool shares = false;
        for (int rot = 0; rot < 3 && !shares; ++rot) {
          if ((r[0] == e0 && r[1] == e1) || (r[0] == e1 && r[1] == e0)) {
            shares = true;
            break;
          }
          r = {r[1], r[2], r[0]};
        }
        if (!shares) {
          next.push_back(tri);
          continue;
        }
        next.push_back({r[0], p, r[2]});
        next.push_back({p, r[1], r[2]});
      }
      tris = std::move(next);
    }
    if (!placed)
      throw Error(ErrorKind::InvalidArgument, "facet point outside its facet triangulation");
  }
  return tris;
}

}  // namespace

Fan maximal_refinement(const LatticePolytope& p, TriangulationOrder order) {
  const int n = p.dim();
  if (n > 3)
    throw Error(ErrorKind::UnsupportedDimension,
                "maximal refinement implemented for dimension <= 3");
  const std::vector<Point> rays = p.boundary_points();
  std::map<Point, std::size_t> ray_index;
  for (std::size_t i = 0; i < rays.size(); ++i) ray_index.emplace(rays[i], i);

  std::set<std::vector<std::size_t>> maximal;
  for (const auto& facet : p.facets()) {
    std::vector<Point> pts;
    std::vector<bool> is_vertex;
    for (const auto& x : rays)
      if (pairing(facet.normal, x) == facet.offset) {
        pts.push_back(x);
        is_vertex.push_back(p.vertex_index(x).has_value());
      }
    if (n == 2) {
      // Collinear points: lexicographic order runs along the edge.
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        std::vector<std::size_t> c = {ray_index.at(pts[i]), ray_index.at(pts[i + 1])};
        std::sort(c.begin(), c.end());
        maximal.insert(c);
      }
      continue;
    }
    for (const auto& tri : triangulate_facet(facet.normal, pts, is_vertex, order)) {
      std::vector<std::size_t> c = {ray_index.at(pts[tri[0]]), ray_index.at(pts[tri[1]]),
                                    ray_index.at(pts[tri[2]])};
      std::sort(c.begin(), c.end());
      maximal.insert(c);
    }
  }

  std::vector<std::set<std::vector<std::size_t>>> faces(static_cast<std::size_t>(n) + 1);
  for (const auto& m : maximal) {
    const std::size_t k = m.size();
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) sub.push_back(m[i]);
      faces[sub.size()].insert(sub);
    }
  }
  std::vector<std::vector<Cone>> cones(static_cast<std::size_t>(n) + 1);
  for (std::size_t d = 0; d < faces.size(); ++d)
    for (const auto& s : faces[d]) cones[d].push_back(Cone{s, static_cast<int>(d)});
  return Fan(n, rays, std::move(cones));
}

namespace {

// Coordinates of y in a Hermite-form basis (rows with strictly increasing pivots).
std::vector<std::int64_t> coordinates(const std::vector<IntVector>& basis, const Point& y) {
  std::vector<std::int64_t> out;
  IntVector residual(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) residual[i] = static_cast<long>(y[i]);
  for (const auto& row : basis) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    BigInt c;
    if (residual[pivot] % row[pivot] != 0)
      throw Error(ErrorKind::NonExactDivision, "point outside the orbit sublattice");
    c = residual[pivot] / row[pivot];
    for (std::size_t i = 0; i < y.size(); ++i) residual[i] -= c * row[i];
    out.push_back(c.get_si());
  }
  for (const auto& r : residual)
    if (r != 0) throw Error(ErrorKind::NonExactDivision, "point outside the orbit sublattice");
  return out;
}

}  // namespace

std::vector<OrbitDatum> orbit_data(const Fan& fan, const LatticePolytope& dual) {
  const std::size_t n = static_cast<std::size_t>(fan.dim());
  std::vector<OrbitDatum> out;
  for (int d = 0; d <= fan.dim(); ++d) {
    const auto& level = fan.cones(d);
    for (std::size_t ci = 0; ci < level.size(); ++ci) {
      const Cone& cone = level[ci];
      OrbitDatum datum;
      datum.cone_dim = d;
      datum.cone_index = ci;
      datum.orbit_dim = fan.dim() - d;
      const auto gens = fan.generators(cone);
      for (std::size_t j = 0; j < dual.vertices().size(); ++j)
        if (std::all_of(gens.begin(), gens.end(),
                        [&](const Point& v) { return pairing(v, dual.vertices()[j]) == -1; }))
          datum.survivors.push_back(j);
      if (datum.survivors.empty())
        throw Error(ErrorKind::EmptyDualFace,
                    "cone with no surviving dual vertex; fan and dual are inconsistent");
      datum.base_point = dual.vertices()[datum.survivors.front()];
      for (auto j : datum.survivors)
        datum.base_point = std::min(datum.base_point, dual.vertices()[j]);
      std::vector<IntVector> rows;
      for (const auto& g : gens) {
        IntVector r;
        for (auto c : g) r.emplace_back(static_cast<long>(c));
        rows.push_back(std::move(r));
      }
      datum.basis = kernel_basis(IntMatrix::from_rows(rows, n));
      for (auto j : datum.survivors) {
        Point diff(n);
        for (std::size_t k = 0; k < n; ++k) diff[k] = dual.vertices()[j][k] - datum.base_point[k];
        datum.exponents.push_back(coordinates(datum.basis, diff));
      }
      for (std::size_t r = 0; r < cone.rays.size(); ++r) {
        OrbitDatum::Normal nd;
        nd.ray = cone.rays[r];
        nd.has_t = d == 1;
        for (std::size_t j = 0; j < dual.vertices().size(); ++j) {
          bool ok = true;
          for (std::size_t r2 = 0; r2 < gens.size() && ok; ++r2)
            ok = pairing(gens[r2], dual.vertices()[j]) == (r2 == r ? 0 : -1);
          if (ok) nd.members.push_back(j);
        }
        Point ref(n, 0);
        if (!nd.has_t && !nd.members.empty()) {
          ref = dual.vertices()[nd.members.front()];
          for (auto j : nd.members) ref = std::min(ref, dual.vertices()[j]);
        }
        for (auto j : nd.members) {
          Point diff(n);
          for (std::size_t k = 0; k < n; ++k) diff[k] = dual.vertices()[j][k] - ref[k];
          nd.exponents.push_back(coordinates(datum.basis, diff));
        }
        datum.normals.push_back(std::move(nd));
      }
      out.push_back(std::move(datum));
    }
  }
  return out;
}

QuotientPresentation quotient_presentation(const LatticePolytope& p) {
  QuotientPresentation qp;
  const IntMatrix mat = p.vertex_matrix();
  qp.torus_kernel_basis = kernel_basis(mat);
  qp.elementary_divisors = elementary_divisors(mat);

  const std::size_t q = p.vertices().size();
  if (q > 24)
    throw Error(ErrorKind::InvalidArgument, "irrelevant sets limited to 24 vertices");
  const auto facets = p.facet_masks();
  for (std::size_t size = 1; size <= q; ++size) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      const bool in_cone = std::any_of(facets.begin(), facets.end(),
                                       [&](std::uint64_t f) { return (mask & f) == mask; });
      if (in_cone) continue;
      const bool has_smaller =
          std::any_of(qp.irrelevant_sets.begin(), qp.irrelevant_sets.end(),
                      [&](std::uint64_t s) { return (mask & s) == s; });
      if (!has_smaller) qp.irrelevant_sets.push_back(mask);
    }
  }
  return qp;
}

}  // namespace arithmirror
