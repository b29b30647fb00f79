#pragma once

// Point-count comparisons between pencils: congruence and equality tests,
// the classification of reflexive polygon pairs, and the database search for
// pairs whose vertex matrices share a kernel.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithmirror/pencil.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror {

struct MirrorRow {
  FiniteField::Element t = 0;
  std::uint64_t count_x = 0;
  std::uint64_t count_y = 0;
  bool smooth_x = false;
  bool smooth_y = false;
  bool both_smooth = false;
  bool congruent = false;  // count_x == count_y mod q
  bool equal = false;
};

struct MirrorReport {
  std::string id_x;
  std::string id_y;
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  std::uint32_t q = 0;
  std::vector<MirrorRow> rows;
  std::size_t smooth_rows = 0;
  /// Verdicts over the rows where both members are smooth.
  bool congruent = true;
  bool equal = true;
};

/// Row-by-row comparison of two count tables over the same field.
MirrorReport compare_tables(const CountTable& x, const CountTable& y);

/// Counts both pencils at every t in F_{p^s} and compares them.
MirrorReport congruence_test(const LatticePolytope& x, const LatticePolytope& y, std::uint32_t p,
                             std::uint32_t s = 1, const std::string& id_x = "X",
                             const std::string& id_y = "Y",
                             TriangulationOrder order = TriangulationOrder::Lex,
                             unsigned workers = 1);

enum class PolygonCondition { None, Triangles, SelfDual, P1xP1 };
enum class PolygonVerdict { Equal, NotEqual, Undetermined };

std::string to_string(PolygonCondition c);
std::string to_string(PolygonVerdict v);

struct Witness {
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  FiniteField::Element t = 0;
  std::uint64_t count_x = 0;
  std::uint64_t count_y = 0;
};

struct PolygonClassification {
  std::size_t polygon_id = 0;
  std::size_t dual_id = 0;
  PolygonCondition condition = PolygonCondition::None;
  PolygonVerdict verdict = PolygonVerdict::Undetermined;
  std::optional<Witness> witness;
  std::size_t smooth_values_tested = 0;  // (q, t) pairs with both members smooth
};

struct ClassifyOptions {
  /// Field orders as (p, s); every class is compared over all of them.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                                 {3, 2}, {11, 1}, {13, 1}};
  /// Further primes tried only for classes that satisfy no condition and
  /// have no witness yet.
  std::uint32_t witness_prime_bound = 100;
  unsigned workers = 1;
};

/// One entry per bundled polygon class, pairing it with its polar dual.
std::vector<PolygonClassification> classify_polygon_pairs(const ClassifyOptions& options = {});

/// First vertex bijection respecting the face lattices under which the
/// canonical kernel bases of the two vertex matrices coincide.
std::optional<VertexMap> lemma_pair_predicate(const LatticePolytope& a, const LatticePolytope& b);

struct PairSearchResult {
  std::vector<std::size_t> comb_equiv_to_dual;
  std::vector<std::size_t> self_dual;          // self-dual and satisfying the predicate
  std::vector<std::size_t> self_dual_simplex;  // subset of self_dual
  /// Unordered pairs {a, dual(a)} of records, a not self-dual, with the
  /// predicate; first < second. A dual missing from the records is reported
  /// with second == npos.
  std::vector<std::pair<std::size_t, std::size_t>> kernel_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> nonsimplex_pairs;
  /// Connected components of the predicate graph on the members of the
  /// non-simplex pairs, each sorted.
  std::vector<std::vector<std::size_t>> groups;
  /// Every group is a clique of the predicate graph.
  bool groups_transitive = true;
  std::size_t records = 0;
};

PairSearchResult search_pairs(const std::vector<PolytopeRecord>& records, unsigned workers = 1);

}  // namespace arithmirror
