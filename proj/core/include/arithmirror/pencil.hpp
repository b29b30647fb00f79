#pragma once

// The anticanonical pencil
//   f_t = sum_{x in vertices(dual)} prod_k z_k^{<v_k, x> + 1} + t * prod_k z_k
// on the toric variety of the maximal refinement, and its point counts over
// finite fields.
//
// Counting is stratified: the toric variety is the disjoint union of its
// torus orbits O(sigma) ~ (F*)^{n - dim sigma}, and on O(sigma) the pencil
// restricts (up to a unit) to the Laurent polynomial made of the dual vertices
// x with <v, x> = -1 for every ray v of sigma. The t-term only survives on the
// open torus, but it enters the normal derivatives along ray orbits.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arithmirror/fan.hpp"
#include "arithmirror/galois.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror {

class PencilHypersurface {
 public:
  PencilHypersurface(LatticePolytope polytope, TriangulationOrder order);

  const LatticePolytope& polytope() const noexcept { return polytope_; }
  const LatticePolytope& dual() const noexcept { return dual_; }
  const Fan& fan() const noexcept { return fan_; }
  TriangulationOrder triangulation() const noexcept { return order_; }
  /// Monomials: the dual's vertices in order, then the origin (the t-term).
  const std::vector<Point>& monomials() const noexcept { return monomials_; }
  /// cox_exponents()[k][j] = <ray_k, monomial_j> + 1.
  const std::vector<std::vector<std::int64_t>>& cox_exponents() const noexcept {
    return cox_exponents_;
  }
  const std::vector<OrbitDatum>& orbits() const noexcept { return orbits_; }

  /// Total number of F_q points of the toric variety: sum over cones of (q-1)^orbit_dim.
  std::uint64_t ambient_points(std::uint32_t q) const;

  /// Human-readable Cox form, e.g. "z1^3 + z2^3 + z3^3 + t*z1*z2*z3".
  std::string cox_form() const;

 private:
  LatticePolytope polytope_;
  LatticePolytope dual_;
  TriangulationOrder order_;
  Fan fan_;
  std::vector<Point> monomials_;
  std::vector<std::vector<std::int64_t>> cox_exponents_;
  std::vector<OrbitDatum> orbits_;
};

/// Requires a reflexive polytope of dimension <= 3.
PencilHypersurface build_pencil(const LatticePolytope& polytope,
                                TriangulationOrder order = TriangulationOrder::Lex);

std::uint64_t count_points(const PencilHypersurface& pencil, const FiniteField& field,
                           FiniteField::Element t);

/// Jacobian criterion in Cox coordinates, checked orbit by orbit: a point of
/// O(sigma) is singular when g, its logarithmic derivatives and the normal
/// derivatives dF/dz_k (k a ray of sigma) all vanish there. Only F_q-points
/// are examined.
bool is_smooth_member(const PencilHypersurface& pencil, const FiniteField& field,
                      FiniteField::Element t);

/// Enumeration in Cox coordinates: #{z in F_q^r - Z(Sigma) : f_t(z) = 0}
/// divided by (q-1)^{r-n}. Requires torsion-free Mat (TorsionUnsupported).
std::uint64_t count_points_cox_oracle(const PencilHypersurface& pencil,
                                      const FiniteField& field, FiniteField::Element t);

struct CountRow {
  FiniteField::Element t = 0;
  std::uint64_t count = 0;
  bool smooth = false;
};

struct CountTable {
  std::string polytope_id;
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  std::uint64_t triangulation_hash = 0;
  std::uint64_t polytope_hash = 0;
  std::vector<CountRow> rows;  // one per t in encoded order 0..q-1
};

/// Counts and smoothness flags for every t in F_q in one pass over each
/// stratum. `workers` > 1 spreads strata over threads; the result does not
/// depend on it.
CountTable count_table(const PencilHypersurface& pencil, const FiniteField& field,
                       const std::string& polytope_id, unsigned workers = 1);

}  // namespace arithmirror
