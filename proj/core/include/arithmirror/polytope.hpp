#pragma once

// Lattice polytopes in Z^n (2 <= n <= 4): convex hulls, polar duality,
// lattice points, face structure and the two notions of equivalence used when
// searching for quotient-related mirror pairs.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arithmirror/exactmath.hpp"

namespace arithmirror {

/// A point of N = Z^n or M = Z^n; the pairing <v, w> is the dot product.
using Point = std::vector<std::int64_t>;

std::int64_t pairing(const Point& v, const Point& w);
std::string to_string(const Point& p);

/// Supporting hyperplane of a facet, written {x : <normal, x> = offset} with
/// the polytope on the side <normal, x> >= offset. `normal` is primitive.
struct Facet {
  Point normal;
  std::int64_t offset = 0;
  std::vector<std::size_t> vertices;  // indices into LatticePolytope::vertices()
};

class LatticePolytope {
 public:
  /// Convex hull of the given lattice points. Vertices keep the order in which
  /// they first appear in `points`. Throws InvalidArgument if the hull is not
  /// full-dimensional or the dimension is outside [2, 4].
  static LatticePolytope from_points(const std::vector<Point>& points);

  int dim() const noexcept { return dim_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  /// All lattice points, lexicographically sorted.
  const std::vector<Point>& lattice_points() const noexcept { return lattice_points_; }

  bool contains(const Point& x) const;
  bool origin_interior() const;
  bool is_simplex() const { return vertices_.size() == static_cast<std::size_t>(dim_) + 1; }
  /// Nonzero lattice points on the boundary, lexicographically sorted.
  std::vector<Point> boundary_points() const;
  /// Vertex index of `p`, if it is a vertex.
  std::optional<std::size_t> vertex_index(const Point& p) const;
  /// Vertex masks of the facets (bit i set when vertex i lies on the facet).
  std::vector<std::uint64_t> facet_masks() const;
  /// n x q matrix whose columns are the vertices in order.
  IntMatrix vertex_matrix() const;

  /// Stable 64-bit hash of the ordered vertex list.
  std::uint64_t hash() const;

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Point> lattice_points_;
};

bool same_vertex_set(const LatticePolytope& a, const LatticePolytope& b);

/// Polar dual {w : <v, w> >= -1 for all v}. Throws OriginNotInterior or
/// NonIntegralDual.
LatticePolytope polar_dual(const LatticePolytope& p);

/// Origin interior and every facet at lattice distance one.
bool is_reflexive(const LatticePolytope& p);

std::vector<Point> enumerate_lattice_points(const LatticePolytope& p);

struct Face {
  int dim = -1;
  std::uint64_t vertices = 0;  // bit mask into the polytope's vertex list
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dim, mask); faces.front() is the empty face
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)

  std::size_t count(int dim) const;
};

FaceLattice face_lattice(const LatticePolytope& p);

/// Vertex bijection: image[i] is the index in the target of source vertex i.
using VertexMap = std::vector<std::size_t>;

/// Every vertex bijection that induces a face-lattice isomorphism, in
/// lexicographic order of the image sequences. Empty when not equivalent.
std::vector<VertexMap> combinatorially_equivalent(const LatticePolytope& a,
                                                  const LatticePolytope& b);

/// G in GL(n, Z) with G * vertices(a) = vertices(b) as sets, if one exists.
std::optional<IntMatrix> lattice_equivalent(const LatticePolytope& a,
                                            const LatticePolytope& b);

/// Apply an integer matrix to every vertex.
LatticePolytope transform(const IntMatrix& g, const LatticePolytope& p);

struct PolytopeRecord {
  std::size_t id = 0;  // 0-based position in the source
  LatticePolytope polytope;
  std::string source;  // file name or "builtin"
  std::string label;   // free text after the header integers, if any
};

/// Parses the block format: a header whose first two tokens are integers r c
/// followed by r lines of c integers. Vertices are columns when r <= c and
/// rows when r > c. Every block must be reflexive.
std::vector<PolytopeRecord> parse_database(std::istream& in, const std::string& source);
std::vector<PolytopeRecord> ingest_database(const std::filesystem::path& path);

/// One block in the database format (vertices as columns).
std::string format_block(const LatticePolytope& p, const std::string& label = {});

}  // namespace arithmirror
