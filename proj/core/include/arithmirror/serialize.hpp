#pragma once

// JSON and CSV forms of the library's values. Hashes are written as
// 16-digit lowercase hex strings, exact rationals as "p/q" strings.

#include <string>

#include <nlohmann/json.hpp>

#include "arithmirror/fan.hpp"
#include "arithmirror/mirror.hpp"
#include "arithmirror/pencil.hpp"
#include "arithmirror/pfode.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror {

using Json = nlohmann::json;

std::string hex64(std::uint64_t v);
std::uint64_t parse_hex64(const std::string& s);

Json to_json(const LatticePolytope& p, const std::string& id = {});
LatticePolytope polytope_from_json(const Json& j);
Json to_json(const Fan& f);

Json to_json(const CountTable& t);
CountTable count_table_from_json(const Json& j);
/// Header: polytope_id,p,s,t,count,count_mod_q,smooth,triangulation_hash
std::string to_csv(const CountTable& t);

Json to_json(const MirrorReport& r);
std::string to_csv(const MirrorReport& r);
Json to_json(const PolygonClassification& c);
Json to_json(const PairSearchResult& r);

Json to_json(const RationalPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const RationalSeries& s);
/// {"order", "prefactor", "coefficients": [[c_0 ascending], ...]}; the
/// operator is prefactor * sum_i c_i(t) d^i. Written with prefactor "1".
Json to_json(const DiffOperator& op, const BigRat& prefactor = BigRat(1));
/// Accepts integer or "p/q" string entries.
DiffOperator operator_from_json(const Json& j);

}  // namespace arithmirror
