#include "arithmirror/polytope.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arithmirror/error.hpp"

namespace arithmirror {

std::int64_t pairing(const Point& v, const Point& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

namespace {

std::int64_t small_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][j] * small_det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

// Vector orthogonal to the n-1 rows of `d` (n columns), via cofactors.
Point orthogonal_vector(const std::vector<Point>& d, std::size_t n) {
  Point normal(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (const auto& row : d) {
      std::vector<std::int64_t> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(row[k]);
      minor.push_back(std::move(r));
    }
    const std::int64_t c = small_det(minor);
    normal[j] = (j % 2 == 0) ? c : -c;
  }
  std::int64_t g = 0;
  for (auto v : normal) g = std::gcd(g, v);
  if (g > 1)
    for (auto& v : normal) v /= g;
  return normal;
}

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::size_t rank_of(const std::vector<Point>& rows, std::size_t n) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, n));
}

}  // namespace

LatticePolytope LatticePolytope::from_points(const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "polytope needs points");
  const std::size_t n = points.front().size();
  if (n < 2 || n > 4)
    throw Error(ErrorKind::UnsupportedDimension,
                "polytope dimension must be 2, 3 or 4, got " + std::to_string(n));
  std::vector<Point> pts;
  std::set<Point> seen;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorKind::InvalidArgument, "mixed point dimensions");
    if (seen.insert(p).second) pts.push_back(p);
  }
  {
    std::vector<Point> diffs;
    for (const auto& p : pts) {
      Point d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = p[i] - pts[0][i];
      diffs.push_back(std::move(d));
    }
    if (rank_of(diffs, n) != n)
      throw Error(ErrorKind::InvalidArgument, "points are not full-dimensional");
  }

  std::map<Point, std::int64_t> hyperplanes;  // inner normal -> offset
  for_each_combination(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> d;
    for (std::size_t r = 1; r < n; ++r) {
      Point row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = pts[idx[r]][i] - pts[idx[0]][i];
      d.push_back(std::move(row));
    }
    Point normal = orthogonal_vector(d, n);
    if (std::all_of(normal.begin(), normal.end(), [](auto v) { return v == 0; })) return;
    const std::int64_t h = pairing(normal, pts[idx[0]]);
    bool above = true, below = true;
    for (const auto& p : pts) {
      const std::int64_t v = pairing(normal, p);
      if (v < h) above = false;
      if (v > h) below = false;
    }
    if (above) {
      hyperplanes.emplace(normal, h);
    } else if (below) {
      for (auto& v : normal) v = -v;
      hyperplanes.emplace(normal, -h);
    }
  });

  LatticePolytope poly;
  poly.dim_ = static_cast<int>(n);
  for (const auto& p : pts) {
    std::vector<Point> normals;
    for (const auto& [u, c] : hyperplanes)
      if (pairing(u, p) == c) normals.push_back(u);
    if (rank_of(normals, n) == n) poly.vertices_.push_back(p);
  }
  for (const auto& [u, c] : hyperplanes) {
    Facet f{u, c, {}};
    for (std::size_t i = 0; i < poly.vertices_.size(); ++i)
      if (pairing(u, poly.vertices_[i]) == c) f.vertices.push_back(i);
    poly.facets_.push_back(std::move(f));
  }
  poly.lattice_points_ = enumerate_lattice_points(poly);
  return poly;
}

bool LatticePolytope::contains(const Point& x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return pairing(f.normal, x) >= f.offset; });
}

bool LatticePolytope::origin_interior() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [](const Facet& f) { return f.offset < 0; });
}

std::vector<Point> LatticePolytope::boundary_points() const {
  std::vector<Point> out;
  for (const auto& x : lattice_points_)
    if (std::any_of(facets_.begin(), facets_.end(),
                    [&](const Facet& f) { return pairing(f.normal, x) == f.offset; }))
      out.push_back(x);
  return out;
}

std::optional<std::size_t> LatticePolytope::vertex_index(const Point& p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == p) return i;
  return std::nullopt;
}

std::vector<std::uint64_t> LatticePolytope::facet_masks() const {
  std::vector<std::uint64_t> masks;
  for (const auto& f : facets_) {
    std::uint64_t m = 0;
    for (auto i : f.vertices) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  return masks;
}

IntMatrix LatticePolytope::vertex_matrix() const {
  return IntMatrix::from_columns(vertices_, static_cast<std::size_t>(dim_));
}

std::uint64_t LatticePolytope::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(dim_);
  for (const auto& v : vertices_)
    for (auto c : v) mix(c);
  return h;
}

bool same_vertex_set(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<Point> va = a.vertices(), vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
  if (!p.origin_interior())
    throw Error(ErrorKind::OriginNotInterior, "origin is not interior to the polytope");
  std::vector<Point> dual;
  for (const auto& f : p.facets()) {
    const std::int64_t scale = -f.offset;
    Point w(f.normal.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (f.normal[i] % scale != 0)
        throw Error(ErrorKind::NonIntegralDual,
                    "dual vertex " + to_string(f.normal) + "/" + std::to_string(scale) +
                        " is not integral");
      w[i] = f.normal[i] / scale;
    }
    dual.push_back(std::move(w));
  }
  return LatticePolytope::from_points(dual);
}

bool is_reflexive(const LatticePolytope& p) {
  return p.origin_interior() &&
         std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.offset == -1; });
}

std::vector<Point> enumerate_lattice_points(const LatticePolytope& p) {
  const std::size_t n = static_cast<std::size_t>(p.dim());
  Point lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<Point> out;
  Point x = lo;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Faces

std::size_t FaceLattice::count(int dim) const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [&](const Face& f) { return f.dim == dim; }));
}

FaceLattice face_lattice(const LatticePolytope& p) {
  if (p.vertices().size() > 64)
    throw Error(ErrorKind::InvalidArgument, "face lattice limited to 64 vertices");
  const auto facets = p.facet_masks();
  const std::uint64_t full =
      p.vertices().size() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << p.vertices().size()) - 1;
  std::set<std::uint64_t> masks(facets.begin(), facets.end());
  std::vector<std::uint64_t> frontier(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto m : frontier)
      for (auto f : facets) {
        const std::uint64_t x = m & f;
        if (masks.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  masks.insert(0);
  masks.insert(full);

  const std::size_t n = static_cast<std::size_t>(p.dim());
  FaceLattice lattice;
  for (auto m : masks) {
    Face face{-1, m};
    if (m != 0) {
      std::vector<Point> diffs;
      const Point* base = nullptr;
      for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (!(m >> i & 1)) continue;
        if (!base) {
          base = &p.vertices()[i];
          continue;
        }
        Point d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = p.vertices()[i][k] - (*base)[k];
        diffs.push_back(std::move(d));
      }
      face.dim = static_cast<int>(rank_of(diffs, n));
    }
    lattice.faces.push_back(face);
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  for (std::size_t i = 0; i < lattice.faces.size(); ++i)
    for (std::size_t j = 0; j < lattice.faces.size(); ++j) {
      const auto& a = lattice.faces[i];
      const auto& b = lattice.faces[j];
      if (b.dim == a.dim + 1 && (a.vertices & b.vertices) == a.vertices)
        lattice.covers.emplace_back(i, j);
    }
  return lattice;
}

namespace {

struct IncidenceProfile {
  std::vector<std::size_t> degree;               // facets through each vertex
  std::vector<std::vector<std::size_t>> common;  // facets through both vertices
  std::vector<std::uint64_t> facets;             // sorted facet masks
};

IncidenceProfile profile(const LatticePolytope& p) {
  IncidenceProfile prof;
  prof.facets = p.facet_masks();
  std::sort(prof.facets.begin(), prof.facets.end());
  const std::size_t q = p.vertices().size();
  prof.degree.assign(q, 0);
  prof.common.assign(q, std::vector<std::size_t>(q, 0));
  for (auto m : prof.facets)
    for (std::size_t i = 0; i < q; ++i) {
      if (!(m >> i & 1)) continue;
      ++prof.degree[i];
      for (std::size_t j = 0; j < q; ++j)
        if (m >> j & 1) ++prof.common[i][j];
    }
  return prof;
}

std::uint64_t map_mask(std::uint64_t m, const VertexMap& image) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (m >> i & 1) out |= std::uint64_t{1} << image[i];
  return out;
}

}  // namespace

std::vector<VertexMap> combinatorially_equivalent(const LatticePolytope& a,
                                                  const LatticePolytope& b) {
  std::vector<VertexMap> result;
  const std::size_t q = a.vertices().size();
  if (a.dim() != b.dim() || q != b.vertices().size() ||
      a.facets().size() != b.facets().size() || q > 64)
    return result;
  const auto pa = profile(a);
  const auto pb = profile(b);
  {
    auto da = pa.degree, db = pb.degree;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return result;
  }

  VertexMap image(q);
  std::vector<bool> used(q, false);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == q) {
      std::vector<std::uint64_t> mapped;
      for (auto m : pa.facets) mapped.push_back(map_mask(m, image));
      std::sort(mapped.begin(), mapped.end());
      if (mapped == pb.facets) result.push_back(image);
      return;
    }
    for (std::size_t j = 0; j < q; ++j) {
      if (used[j] || pa.degree[i] != pb.degree[j]) continue;
      bool ok = pa.common[i][i] == pb.common[j][j];
      for (std::size_t k = 0; ok && k < i; ++k)
        ok = pa.common[i][k] == pb.common[j][image[k]];
      if (!ok) continue;
      used[j] = true;
      image[i] = j;
      extend(i + 1);
      used[j] = false;
    }
  };
  extend(0);
  return result;
}

std::optional<IntMatrix> lattice_equivalent(const LatticePolytope& a,
                                            const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size() ||
      a.facets().size() != b.facets().size() ||
      a.lattice_points().size() != b.lattice_points().size())
    return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(a.dim());

  // n linearly independent source vertices pin down G.
  std::vector<std::size_t> basis;
  std::vector<Point> chosen;
  for (std::size_t i = 0; i < a.vertices().size() && basis.size() < n; ++i) {
    chosen.push_back(a.vertices()[i]);
    if (rank_of(chosen, n) == chosen.size())
      basis.push_back(i);
    else
      chosen.pop_back();
  }

  // inverse of V (columns = chosen vertices) over Q
  std::vector<std::vector<BigRat>> aug(n, std::vector<BigRat>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = static_cast<long>(chosen[c][r]);
    aug[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const BigRat inv = 1 / aug[c][c];
    for (auto& v : aug[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const BigRat f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }

  std::set<Point> targets(b.vertices().begin(), b.vertices().end());
  for (const auto& image : combinatorially_equivalent(a, b)) {
    IntMatrix g(n, n);
    bool integral = true;
    for (std::size_t r = 0; r < n && integral; ++r)
      for (std::size_t c = 0; c < n && integral; ++c) {
        BigRat s = 0;
        for (std::size_t k = 0; k < n; ++k)
          s += static_cast<long>(b.vertices()[image[basis[k]]][r]) * aug[k][n + c];
        if (s.get_den() != 1)
          integral = false;
        else
          g(r, c) = s.get_num();
      }
    if (!integral) continue;
    const BigInt det = determinant(g);
    if (det != 1 && det != -1) continue;
    bool maps = true;
    for (std::size_t i = 0; i < a.vertices().size() && maps; ++i) {
      for (std::size_t r = 0; r < n && maps; ++r) {
        BigInt s = 0;
        for (std::size_t c = 0; c < n; ++c) s += g(r, c) * static_cast<long>(a.vertices()[i][c]);
        maps = s == static_cast<long>(b.vertices()[image[i]][r]);
      }
    }
    if (maps) return g;
  }
  return std::nullopt;
}

LatticePolytope transform(const IntMatrix& g, const LatticePolytope& p) {
  const std::size_t n = static_cast<std::size_t>(p.dim());
  std::vector<Point> out;
  for (const auto& v : p.vertices()) {
    Point w(n);
    for (std::size_t r = 0; r < n; ++r) {
      BigInt s = 0;
      for (std::size_t c = 0; c < n; ++c) s += g(r, c) * static_cast<long>(v[c]);
      w[r] = s.get_si();
    }
    out.push_back(std::move(w));
  }
  return LatticePolytope::from_points(out);
}

// ---------------------------------------------------------------------------
// Database files

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::optional<std::int64_t> parse_int(const std::string& tok) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

}  // namespace

std::vector<PolytopeRecord> parse_database(std::istream& in, const std::string& source) {
  std::vector<PolytopeRecord> records;
  std::vector<std::size_t> invalid;
  std::string line;
  std::size_t line_no = 0;

  auto parse_error = [&](const std::string& why) {
    return Error(ErrorKind::ParseError,
                 source + ":" + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) throw parse_error("expected header 'rows cols'");
    const auto r = parse_int(tokens[0]);
    const auto c = parse_int(tokens[1]);
    if (!r || !c || *r <= 0 || *c <= 0) throw parse_error("expected header 'rows cols'");
    std::string label;
    for (std::size_t i = 2; i < tokens.size(); ++i) label += (i > 2 ? " " : "") + tokens[i];

    std::vector<std::vector<std::int64_t>> rows;
    while (rows.size() < static_cast<std::size_t>(*r)) {
      if (!std::getline(in, line)) {
        ++line_no;
        throw parse_error("unexpected end of file inside a block");
      }
      ++line_no;
      auto row_tokens = split_tokens(line);
      if (row_tokens.empty()) continue;
      if (row_tokens.size() != static_cast<std::size_t>(*c))
        throw parse_error("expected " + std::to_string(*c) + " integers");
      std::vector<std::int64_t> row;
      for (const auto& t : row_tokens) {
        auto v = parse_int(t);
        if (!v) throw parse_error("not an integer: '" + t + "'");
        row.push_back(*v);
      }
      rows.push_back(std::move(row));
    }

    std::vector<Point> points;
    if (*r <= *c) {
      for (std::int64_t j = 0; j < *c; ++j) {
        Point p;
        for (std::int64_t i = 0; i < *r; ++i) p.push_back(rows[i][j]);
        points.push_back(std::move(p));
      }
    } else {
      points.assign(rows.begin(), rows.end());
    }

    const std::size_t id = records.size() + invalid.size();
    try {
      auto poly = LatticePolytope::from_points(points);
      if (!is_reflexive(poly)) {
        invalid.push_back(id);
        continue;
      }
      records.push_back(PolytopeRecord{id, std::move(poly), source, label});
    } catch (const Error&) {
      invalid.push_back(id);
    }
  }
  if (!invalid.empty()) {
    std::string list;
    for (auto i : invalid) list += (list.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorKind::ValidationError, source + ": non-reflexive blocks: " + list);
  }
  return records;
}

std::vector<PolytopeRecord> ingest_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return parse_database(in, path.filename().string());
}

std::string format_block(const LatticePolytope& p, const std::string& label) {
  std::ostringstream os;
  os << p.dim() << ' ' << p.vertices().size();
  if (!label.empty()) os << ' ' << label;
  os << '\n';
  for (int r = 0; r < p.dim(); ++r) {
    for (std::size_t c = 0; c < p.vertices().size(); ++c)
      os << (c ? " " : "") << p.vertices()[c][static_cast<std::size_t>(r)];
    os << '\n';
  }
  return os.str();
}

}  // namespace arithmirror
