#include "arithmirror/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "arithmirror/error.hpp"

namespace arithmirror {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
  try {
    return std::stoull(s, nullptr, 16);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad hex value '" + s + "'");
  }
}

Json to_json(const LatticePolytope& p, const std::string& id) {
  Json j;
  if (!id.empty()) j["id"] = id;
  j["dim"] = p.dim();
  j["vertices"] = p.vertices();
  return j;
}

LatticePolytope polytope_from_json(const Json& j) {
  try {
    return LatticePolytope::from_points(j.at("vertices").get<std::vector<Point>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("polytope JSON: ") + e.what());
  }
}

Json to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(c.rays);
  return Json{{"dim", f.dim()},
              {"rays", f.rays()},
              {"maximal_cones", cones},
              {"simplicial", f.is_simplicial()},
              {"fingerprint", hex64(f.fingerprint())}};
}

Json to_json(const CountTable& t) {
  const std::uint64_t q = t.rows.size();
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"t", r.t}, {"count", r.count}, {"count_mod_q", r.count % q}, {"smooth", r.smooth}});
  return Json{{"polytope_id", t.polytope_id},
              {"p", t.p},
              {"s", t.s},
              {"q", q},
              {"polytope_hash", hex64(t.polytope_hash)},
              {"triangulation_hash", hex64(t.triangulation_hash)},
              {"rows", rows}};
}

CountTable count_table_from_json(const Json& j) {
  try {
    CountTable t;
    t.polytope_id = j.at("polytope_id").get<std::string>();
    t.p = j.at("p").get<std::uint32_t>();
    t.s = j.at("s").get<std::uint32_t>();
    t.polytope_hash = parse_hex64(j.at("polytope_hash").get<std::string>());
    t.triangulation_hash = parse_hex64(j.at("triangulation_hash").get<std::string>());
    for (const auto& r : j.at("rows"))
      t.rows.push_back(CountRow{r.at("t").get<FiniteField::Element>(), r.at("count").get<std::uint64_t>(),
                                r.at("smooth").get<bool>()});
    return t;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("count table JSON: ") + e.what());
  }
}

std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  const std::uint64_t q = t.rows.size();
  os << "polytope_id,p,s,t,count,count_mod_q,smooth,triangulation_hash\n";
  for (const auto& r : t.rows)
    os << t.polytope_id << ',' << t.p << ',' << t.s << ',' << r.t << ',' << r.count << ','
       << r.count % q << ',' << (r.smooth ? "true" : "false") << ',' << hex64(t.triangulation_hash)
       << '\n';
  return os.str();
}

Json to_json(const MirrorReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"t", row.t},
                    {"count_x", row.count_x},
                    {"count_y", row.count_y},
                    {"smooth_x", row.smooth_x},
                    {"smooth_y", row.smooth_y},
                    {"both_smooth", row.both_smooth},
                    {"congruent", row.congruent},
                    {"equal", row.equal}});
  return Json{{"pair", {r.id_x, r.id_y}},
              {"field", {{"p", r.p}, {"s", r.s}, {"q", r.q}}},
              {"rows", rows},
              {"verdict",
               {{"smooth_rows", r.smooth_rows}, {"congruent", r.congruent}, {"equal", r.equal}}}};
}

std::string to_csv(const MirrorReport& r) {
  std::ostringstream os;
  os << "x,y,p,s,t,count_x,count_y,smooth_x,smooth_y,congruent,equal\n";
  for (const auto& row : r.rows)
    os << r.id_x << ',' << r.id_y << ',' << r.p << ',' << r.s << ',' << row.t << ',' << row.count_x
       << ',' << row.count_y << ',' << row.smooth_x << ',' << row.smooth_y << ',' << row.congruent
       << ',' << row.equal << '\n';
  return os.str();
}

Json to_json(const PolygonClassification& c) {
  Json j{{"polygon", c.polygon_id},
         {"dual", c.dual_id},
         {"condition", to_string(c.condition)},
         {"verdict", to_string(c.verdict)},
         {"smooth_values_tested", c.smooth_values_tested}};
  if (c.witness)
    j["witness"] = {{"p", c.witness->p},
                    {"s", c.witness->s},
                    {"t", c.witness->t},
                    {"count_x", c.witness->count_x},
                    {"count_y", c.witness->count_y}};
  else
    j["witness"] = nullptr;
  return j;
}

Json to_json(const PairSearchResult& r) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  auto pairs = [&](const auto& v) {
    Json a = Json::array();
    for (const auto& [x, y] : v) a.push_back({x, y == npos ? Json(nullptr) : Json(y)});
    return a;
  };
  return Json{{"records", r.records},
              {"comb_equiv_to_dual", r.comb_equiv_to_dual},
              {"self_dual", r.self_dual},
              {"self_dual_simplex", r.self_dual_simplex},
              {"kernel_pairs", pairs(r.kernel_pairs)},
              {"nonsimplex_pairs", pairs(r.nonsimplex_pairs)},
              {"groups", r.groups},
              {"groups_transitive", r.groups_transitive},
              {"statistics",
               {{"comb_equiv_to_dual", r.comb_equiv_to_dual.size()},
                {"self_dual", r.self_dual.size()},
                {"self_dual_simplices", r.self_dual_simplex.size()},
                {"kernel_pairs", r.kernel_pairs.size()},
                {"nonsimplex_pairs", r.nonsimplex_pairs.size()}}}};
}

Json to_json(const RationalPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const RationalFunction& f) {
  return Json{{"numerator", to_json(f.num())},
              {"denominator", to_json(f.den())},
              {"text", to_string(f)}};
}

Json to_json(const RationalSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs) a.push_back(to_string(c));
  return Json{{"variable", "w = 1/t"},
              {"prefactor_exponent", s.prefactor_exponent},
              {"truncation", s.truncation()},
              {"coefficients", a}};
}

namespace {

BigRat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRat(j.get<long>());
  if (j.is_string()) {
    BigRat r;
    if (r.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::ParseError, "bad rational '" + j.get<std::string>() + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return r;
  }
  throw Error(ErrorKind::ParseError, "expected integer or rational string, got " + j.dump());
}

}  // namespace

Json to_json(const DiffOperator& op, const BigRat& prefactor) {
  Json coeffs = Json::array();
  for (const auto& c : op.coeffs()) {
    Json a = Json::array();
    for (const auto& x : c.coeffs()) {
      if (x.get_den() == 1 && x.get_num().fits_slong_p())
        a.push_back(x.get_num().get_si());
      else
        a.push_back(to_string(x));
    }
    coeffs.push_back(a);
  }
  return Json{{"order", op.order()},
              {"prefactor", to_string(prefactor)},
              {"coefficients", coeffs},
              {"text", pretty(op, prefactor)}};
}

DiffOperator operator_from_json(const Json& j) {
  try {
    const BigRat pre = j.contains("prefactor") ? rat_from_json(j.at("prefactor")) : BigRat(1);
    std::vector<RationalPoly> c;
    for (const auto& poly : j.at("coefficients")) {
      std::vector<BigRat> v;
      for (const auto& x : poly) v.push_back(pre * rat_from_json(x));
      c.emplace_back(std::move(v));
    }
    DiffOperator op(std::move(c));
    if (j.contains("order") && j.at("order").get<long>() != op.order())
      throw Error(ErrorKind::ValidationError, "declared order " + j.at("order").dump() +
                                                  " differs from coefficient count");
    return op;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("operator JSON: ") + e.what());
  }
}

}  // namespace arithmirror
