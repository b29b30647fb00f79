#pragma once

// Fans over the faces of a reflexive polytope, the deterministic maximal
// simplicial refinement, and the per-cone data that splits a toric
// hypersurface into torus orbits.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arithmirror/exactmath.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror {

struct Cone {
  std::vector<std::size_t> rays;  // sorted indices into Fan::rays()
  int dim = 0;
};

/// Insertion order for facet points that are not facet vertices.
enum class TriangulationOrder { Lex, RevLex };

class Fan {
 public:
  Fan(int dim, std::vector<Point> rays, std::vector<std::vector<Cone>> cones_by_dim);

  int dim() const noexcept { return dim_; }
  const std::vector<Point>& rays() const noexcept { return rays_; }
  /// Cones of dimension d, 0 <= d <= dim(). cones(0) holds the zero cone.
  const std::vector<Cone>& cones(int d) const { return cones_[static_cast<std::size_t>(d)]; }
  const std::vector<Cone>& maximal_cones() const { return cones(dim_); }
  std::size_t cone_count() const;
  std::vector<Point> generators(const Cone& c) const;
  bool is_simplicial() const;

  /// Hash of the ray coordinates and cone lists.
  std::uint64_t fingerprint() const;

 private:
  int dim_;
  std::vector<Point> rays_;
  std::vector<std::vector<Cone>> cones_;
};

bool operator==(const Cone& a, const Cone& b);

/// Cones over the faces of a reflexive polytope; rays are its vertices.
Fan face_fan(const LatticePolytope& p);

/// Simplicial refinement using every nonzero boundary lattice point as a ray.
/// Each facet is triangulated independently: a fan triangulation of the facet
/// vertices from the lexicographically smallest one, then the remaining facet
/// lattice points are inserted one at a time in the chosen order. Requires
/// dim <= 3 (UnsupportedDimension otherwise).
Fan maximal_refinement(const LatticePolytope& p,
                       TriangulationOrder order = TriangulationOrder::Lex);

/// Torus orbit O(sigma) with the monomials of the anticanonical pencil that
/// survive on it. `exponents[j]` are the coordinates of
/// survivors[j] - base_point in `basis`.
struct OrbitDatum {
  int cone_dim = 0;
  std::size_t cone_index = 0;  // position inside Fan::cones(cone_dim)
  int orbit_dim = 0;
  std::vector<std::size_t> survivors;  // indices into the dual's vertex list
  Point base_point;
  std::vector<IntVector> basis;  // canonical basis of the orthogonal sublattice
  std::vector<std::vector<std::int64_t>> exponents;
  /// For each ray k of the cone, the terms of dF/dz_k at points of the orbit:
  /// dual vertices x with <v_k, x> = 0 and <v_j, x> = -1 for the other rays,
  /// written in `basis` relative to a common reference. For a ray cone the
  /// reference is the origin and the pencil's t-term joins the sum.
  struct Normal {
    std::size_t ray = 0;
    std::vector<std::size_t> members;
    bool has_t = false;
    std::vector<std::vector<std::int64_t>> exponents;
  };
  std::vector<Normal> normals;
};

/// One datum per cone, zero cone first, then by cone dimension.
/// Throws EmptyDualFace if some cone has no surviving dual vertex.
std::vector<OrbitDatum> orbit_data(const Fan& fan, const LatticePolytope& dual);

struct QuotientPresentation {
  std::vector<IntVector> torus_kernel_basis;
  std::vector<BigInt> elementary_divisors;
  /// Minimal vertex subsets not contained in a single cone of the face fan,
  /// as masks into the vertex list.
  std::vector<std::uint64_t> irrelevant_sets;
};

QuotientPresentation quotient_presentation(const LatticePolytope& p);

}  // namespace arithmirror
