#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <gmp.h>

#include "arithmirror/datasets.hpp"
#include "arithmirror/error.hpp"
#include "arithmirror/mirror.hpp"
#include "arithmirror/pfode.hpp"
#include "arithmirror/serialize.hpp"

#ifndef ARITHMIRROR_VERSION
#define ARITHMIRROR_VERSION "unknown"
#endif

namespace arithmirror::cli {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  for (auto p : primes)
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  for (auto s : degrees)
    if (s == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (K > 60) throw Error(ErrorKind::InvalidArgument, "K must be <= 60");
  if (workers < 1) throw Error(ErrorKind::InvalidArgument, "worker count must be >= 1");
}

fs::path default_out_dir() {
  if (const char* env = std::getenv("ARITHMIRROR_OUT"); env && *env) return env;
  return "arithmirror-out";
}

LatticePolytope load_polytope(const std::string& spec) {
  if (fs::is_regular_file(spec)) {
    if (fs::path(spec).extension() == ".json") {
      std::ifstream in(spec);
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, spec + ": " + e.what());
      }
      return polytope_from_json(j);
    }
    auto records = ingest_database(spec);
    if (records.empty()) throw Error(ErrorKind::ParseError, spec + ": no polytope blocks");
    return records.front().polytope;
  }
  if (auto p = builtin_polytope(spec)) return *p;
  throw Error(ErrorKind::InvalidArgument,
              "'" + spec + "' is neither a readable file nor a builtin polytope name");
}

namespace {

std::string format_name(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Pretty: return "pretty";
    case Format::Json: break;
  }
  return "json";
}

DiffOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return operator_from_json(j);
}

struct Session {
  RunConfig cfg;
  std::vector<std::string> args;
  std::ostream& out;
  Json inputs = Json::array();

  Json config_json() const {
    return Json{{"primes", cfg.primes},
                {"degrees", cfg.degrees},
                {"K", cfg.K},
                {"database", cfg.database ? cfg.database->string() : ""},
                {"out_dir", cfg.out_dir.string()},
                {"format", format_name(cfg.format)},
                {"triangulation", cfg.triangulation == TriangulationOrder::Lex ? "lex" : "revlex"},
                {"cache", cfg.cache},
                {"workers", cfg.workers}};
  }

  void note_pencil(const std::string& id, const PencilHypersurface& p) {
    inputs.push_back({{"id", id},
                      {"polytope_hash", hex64(p.polytope().hash())},
                      {"triangulation_hash", hex64(p.fan().fingerprint())},
                      {"vertices", p.polytope().vertices()}});
  }

  void write_manifest(const std::string& command) const {
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) return;  // the manifest is best effort; results already went to stdout
    const Json manifest{{"tool", "arithmirror"},
                        {"version", ARITHMIRROR_VERSION},
                        {"gmp_version", gmp_version},
                        {"command", command},
                        {"arguments", args},
                        {"config", config_json()},
                        {"inputs", inputs}};
    std::ofstream(cfg.out_dir / "manifest.json") << manifest.dump(2) << '\n';
  }

  CountTable counts(const PencilHypersurface& pencil, const std::string& id, std::uint32_t p,
                    std::uint32_t s) {
    const auto field = FiniteField::make(p, s);
    const fs::path path = cfg.out_dir / "cache" /
                          (hex64(pencil.polytope().hash()) + "_" + std::to_string(p) + "_" +
                           std::to_string(s) + "_" + hex64(pencil.fan().fingerprint()) + ".json");
    if (cfg.cache && fs::is_regular_file(path)) {
      try {
        std::ifstream in(path);
        Json j;
        in >> j;
        auto t = count_table_from_json(j);
        if (t.polytope_hash == pencil.polytope().hash() &&
            t.triangulation_hash == pencil.fan().fingerprint() && t.rows.size() == field.order()) {
          t.polytope_id = id;
          return t;
        }
      } catch (const std::exception&) {
        // unreadable cache entries are recomputed and overwritten
      }
    }
    auto table = count_table(pencil, field, id, cfg.workers);
    if (cfg.cache) {
      std::error_code ec;
      fs::create_directories(path.parent_path(), ec);
      if (!ec) std::ofstream(path) << to_json(table).dump() << '\n';
    }
    return table;
  }
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- subcommands -----------------------------------------------------------

void cmd_dual(Session& s, const std::string& spec) {
  const auto p = load_polytope(spec);
  const auto d = polar_dual(p);
  if (s.cfg.format == Format::Json) {
    emit(s.out, Json{{"input", to_json(p, spec)}, {"dual", to_json(d)}, {"reflexive", is_reflexive(p)}});
  } else {
    for (const auto& v : d.vertices()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        s.out << (i ? (s.cfg.format == Format::Csv ? "," : " ") : "") << v[i];
      s.out << '\n';
    }
  }
}

void cmd_count(Session& s, const std::string& spec, const std::string& t_arg) {
  const auto pencil = build_pencil(load_polytope(spec), s.cfg.triangulation);
  s.note_pencil(spec, pencil);
  std::optional<std::uint64_t> only_t;
  if (t_arg != "all") {
    try {
      only_t = std::stoull(t_arg);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--t expects 'all' or an element code");
    }
  }
  Json all = Json::array();
  bool header = true;
  for (auto p : s.cfg.primes)
    for (auto deg : s.cfg.degrees) {
      auto table = s.counts(pencil, spec, p, deg);
      if (only_t) {
        if (*only_t >= table.rows.size())
          throw Error(ErrorKind::InvalidArgument, "t outside the field");
        table.rows = {table.rows[*only_t]};
      }
      if (s.cfg.format == Format::Json) {
        all.push_back(to_json(table));
      } else if (s.cfg.format == Format::Csv) {
        auto csv = to_csv(table);
        if (!header) csv = csv.substr(csv.find('\n') + 1);
        s.out << csv;
        header = false;
      } else {
        s.out << spec << " over F_" << p << (deg > 1 ? "^" + std::to_string(deg) : "") << '\n';
        for (const auto& r : table.rows)
          s.out << "  t=" << std::setw(5) << r.t << "  #X=" << std::setw(8) << r.count
                << (r.smooth ? "" : "  (singular)") << '\n';
      }
    }
  if (s.cfg.format == Format::Json) emit(s.out, all.size() == 1 ? all.front() : all);
}

void cmd_mirror(Session& s, const std::string& a, const std::string& b) {
  const auto pa = build_pencil(load_polytope(a), s.cfg.triangulation);
  const auto pb = build_pencil(load_polytope(b), s.cfg.triangulation);
  s.note_pencil(a, pa);
  s.note_pencil(b, pb);
  Json all = Json::array();
  bool header = true;
  for (auto p : s.cfg.primes)
    for (auto deg : s.cfg.degrees) {
      const auto report = compare_tables(s.counts(pa, a, p, deg), s.counts(pb, b, p, deg));
      if (s.cfg.format == Format::Json) {
        all.push_back(to_json(report));
      } else if (s.cfg.format == Format::Csv) {
        auto csv = to_csv(report);
        if (!header) csv = csv.substr(csv.find('\n') + 1);
        s.out << csv;
        header = false;
      } else {
        s.out << a << " vs " << b << " over F_" << report.q << ": " << report.smooth_rows
              << " mutually smooth t, congruent: " << (report.congruent ? "true" : "false")
              << ", equal: " << (report.equal ? "true" : "false") << '\n';
        for (const auto& r : report.rows)
          s.out << "  t=" << std::setw(5) << r.t << "  " << std::setw(8) << r.count_x << "  "
                << std::setw(8) << r.count_y << (r.both_smooth ? "" : "  (singular)")
                << (r.congruent ? "" : "  NOT CONGRUENT") << '\n';
      }
    }
  if (s.cfg.format == Format::Json) emit(s.out, all.size() == 1 ? all.front() : all);
}

void cmd_polygons(Session& s) {
  ClassifyOptions opts;
  opts.workers = s.cfg.workers;
  const auto result = classify_polygon_pairs(opts);
  const auto polygons = reflexive_polygons();
  if (s.cfg.format == Format::Json) {
    Json a = Json::array();
    for (const auto& c : result) {
      auto j = to_json(c);
      j["vertices"] = polygons[c.polygon_id].polytope.vertices();
      a.push_back(j);
    }
    emit(s.out, a);
    return;
  }
  if (s.cfg.format == Format::Csv) s.out << "polygon,dual,condition,verdict,witness_q,witness_t,count_x,count_y\n";
  std::size_t equal = 0;
  for (const auto& c : result) {
    if (c.verdict == PolygonVerdict::Equal) ++equal;
    std::string wq, wt, cx, cy;
    if (c.witness) {
      wq = std::to_string(c.witness->p) + (c.witness->s > 1 ? "^" + std::to_string(c.witness->s) : "");
      wt = std::to_string(c.witness->t);
      cx = std::to_string(c.witness->count_x);
      cy = std::to_string(c.witness->count_y);
    }
    if (s.cfg.format == Format::Csv) {
      s.out << c.polygon_id << ',' << c.dual_id << ',' << to_string(c.condition) << ','
            << to_string(c.verdict) << ',' << wq << ',' << wt << ',' << cx << ',' << cy << '\n';
    } else {
      s.out << "polygon " << std::setw(2) << c.polygon_id << "  dual " << std::setw(2) << c.dual_id
            << "  " << std::setw(10) << to_string(c.condition) << "  " << std::setw(12)
            << to_string(c.verdict);
      if (c.witness) s.out << "  q=" << wq << " t=" << wt << " #X=" << cx << " #Y=" << cy;
      s.out << '\n';
    }
  }
  if (s.cfg.format == Format::Pretty)
    s.out << equal << " of " << result.size() << " classes EQUAL\n";
}

void cmd_search(Session& s) {
  const auto records = s.cfg.database ? ingest_database(*s.cfg.database) : group_polytopes();
  const auto result = search_pairs(records, s.cfg.workers);
  const auto paper = match_paper_ids(records);
  Json ids = Json::object();
  for (std::size_t i = 0; i < records.size(); ++i)
    if (paper[i]) ids[std::to_string(records[i].id)] = *paper[i];
  Json groups_by_paper = Json::array();
  for (const auto& g : result.groups) {
    Json a = Json::array();
    for (auto id : g) a.push_back(paper[id] ? Json(*paper[id]) : Json(nullptr));
    groups_by_paper.push_back(a);
  }
  Json j = to_json(result);
  j["source"] = s.cfg.database ? s.cfg.database->string() : "builtin:group_polytopes";
  j["paper_ids"] = ids;
  j["groups_by_paper_id"] = groups_by_paper;
  j["conventions"] = {{"self_dual", "lattice_equivalent(P, polar_dual(P))"},
                      {"pairs", "unordered {P, polar_dual(P)} counted once"}};
  if (s.cfg.format == Format::Json) {
    emit(s.out, j);
    return;
  }
  const auto& st = j["statistics"];
  s.out << "records:                      " << records.size() << '\n'
        << "comb. equivalent to dual:     " << st["comb_equiv_to_dual"] << '\n'
        << "self-dual with predicate:     " << st["self_dual"] << " (" << st["self_dual_simplices"]
        << " simplices)\n"
        << "non-self-dual pairs:          " << st["kernel_pairs"] << '\n'
        << "non-simplex pairs:            " << st["nonsimplex_pairs"] << '\n';
  for (std::size_t g = 0; g < result.groups.size(); ++g)
    s.out << "group " << g + 1 << ": " << groups_by_paper[g].dump() << '\n';
}

void emit_operator(Session& s, const DiffOperator& op, const Json& extra = {}) {
  if (s.cfg.format == Format::Pretty) {
    s.out << pretty(op) << " = 0\n";
    return;
  }
  Json j = to_json(op);
  for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it) j[it.key()] = it.value();
  emit(s.out, j);
}

void cmd_pf_derive(Session& s, const std::string& spec, long order, long deg) {
  const auto p = load_polytope(spec);
  const auto series = period_series(p, s.cfg.K, s.cfg.workers);
  const auto op = recover_operator(series, order, deg);
  if (!op) throw Error(ErrorKind::ValidationError, "no annihilating operator within the bounds");
  emit_operator(s, *op, {{"polytope", spec}, {"K", s.cfg.K}, {"series", to_json(series)}});
}

void cmd_pf_verify(Session& s, const std::string& spec, const std::string& table) {
  const auto p = load_polytope(spec);
  const auto series = period_series(p, s.cfg.K, s.cfg.workers);
  std::vector<std::pair<std::string, DiffOperator>> candidates;
  if (table == "builtin") {
    candidates = {{"order3_group1", table_order3(1)}, {"order3_group2", table_order3(2)}};
  } else {
    candidates = {{table, load_operator(table)}};
  }
  Json results = Json::array();
  bool any = false;
  for (const auto& [name, op] : candidates)
    for (bool negated : {false, true}) {
      const auto applied = apply_operator(negated ? op.negate_variable() : op, series);
      const bool zero = applied.is_zero();
      any = any || zero;
      results.push_back({{"operator", name},
                         {"convention", negated ? "t -> -t" : "t -> t"},
                         {"annihilates", zero},
                         {"valid_coefficients", applied.coeffs.size()}});
      if (s.cfg.format == Format::Pretty)
        s.out << name << " (" << (negated ? "t -> -t" : "t -> t") << "): "
              << (zero ? "annihilates" : "does not annihilate") << " through "
              << applied.coeffs.size() << " coefficients\n";
    }
  if (s.cfg.format != Format::Pretty)
    emit(s.out, Json{{"polytope", spec}, {"K", s.cfg.K}, {"results", results}, {"any_annihilates", any}});
}

void cmd_pf_unary(Session& s, const std::string& what, const std::string& path) {
  const auto op = load_operator(path);
  if (what == "symsq") {
    emit_operator(s, symmetric_square(op));
  } else if (what == "root") {
    const auto r = symmetric_square_root(op);
    if (!r) throw Error(ErrorKind::ValidationError, "operator is not a symmetric square");
    emit_operator(s, *r);
  } else {
    const auto pnf = projective_normal_form2(op);
    if (s.cfg.format == Format::Pretty) {
      s.out << "(" << to_string(pnf.potential) << ")R + R'' = 0\n";
      return;
    }
    emit(s.out, Json{{"potential", to_json(pnf.potential)}, {"operator", to_json(pnf.op)}});
  }
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s{RunConfig{}, args, out};
  s.cfg.out_dir = default_out_dir();

  CLI::App app{"Pencils of toric hypersurfaces: point counts, mirror tests, Picard-Fuchs operators",
               "arithmirror"};
  app.require_subcommand(1);
  std::string format = "json", tri = "lex";
  std::string out_dir = s.cfg.out_dir.string();
  bool no_cache = false;
  app.add_option("--format", format, "json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", out_dir, "output directory (default $ARITHMIRROR_OUT)");
  app.add_option("--triangulation", tri, "lex | revlex")->check(CLI::IsMember({"lex", "revlex"}));
  app.add_flag("--no-cache", no_cache, "do not read or write cached counts");
  app.add_option("--workers", s.cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--p", s.cfg.primes, "primes, comma separated")->delimiter(',');
    sub->add_option("--s", s.cfg.degrees, "extension degrees, comma separated")->delimiter(',');
  };

  std::string poly_a, poly_b, t_arg = "all", table = "builtin", op_path;
  long order = 3, deg = 4;

  auto* dual = app.add_subcommand("dual", "print the polar dual's vertices");
  dual->add_option("polytope", poly_a)->required();

  auto* count = app.add_subcommand("count", "point counts of the pencil for every t");
  count->add_option("polytope", poly_a)->required();
  add_fields(count);
  count->add_option("--t", t_arg, "'all' or one element code");

  auto* mirror = app.add_subcommand("mirror", "compare two pencils over finite fields");
  mirror->add_option("x", poly_a)->required();
  mirror->add_option("y", poly_b)->required();
  add_fields(mirror);

  auto* polygons = app.add_subcommand("polygons", "reflexive polygon experiments");
  auto* classify = polygons->add_subcommand("classify", "equality test for the 16 polygon pairs");
  polygons->require_subcommand(1);

  auto* search = app.add_subcommand("search", "kernel-pair search over a polytope database");
  std::string db;
  search->add_option("--db", db, "database file (default: bundled group polytopes)");

  auto* pf = app.add_subcommand("pf", "Picard-Fuchs pipeline");
  pf->require_subcommand(1);
  auto* derive = pf->add_subcommand("derive", "recover an operator from the period series");
  derive->add_option("polytope", poly_a)->required();
  derive->add_option("--order", order);
  derive->add_option("--deg", deg);
  derive->add_option("--K", s.cfg.K, "series truncation");
  auto* verify = pf->add_subcommand("verify", "apply operators to the period series");
  verify->add_option("polytope", poly_a)->required();
  verify->add_option("--table", table, "'builtin' or an operator JSON file");
  verify->add_option("--K", s.cfg.K, "series truncation");
  auto* symsq = pf->add_subcommand("symsq", "symmetric square of an order-2 operator");
  auto* root = pf->add_subcommand("root", "symmetric square root of an order-3 operator");
  auto* pnf = pf->add_subcommand("pnf", "projective normal form of an order-2 operator");
  for (auto* sub : {symsq, root, pnf}) sub->add_option("operator", op_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what());
    return 64;
  }

  s.cfg.format = format == "csv" ? Format::Csv : format == "pretty" ? Format::Pretty : Format::Json;
  s.cfg.triangulation = tri == "revlex" ? TriangulationOrder::RevLex : TriangulationOrder::Lex;
  s.cfg.cache = !no_cache;
  s.cfg.out_dir = out_dir;
  if (!db.empty()) s.cfg.database = db;

  std::string command;
  try {
    s.cfg.validate();
    if (*dual) {
      command = "dual";
      cmd_dual(s, poly_a);
    } else if (*count) {
      command = "count";
      cmd_count(s, poly_a, t_arg);
    } else if (*mirror) {
      command = "mirror";
      cmd_mirror(s, poly_a, poly_b);
    } else if (*classify) {
      command = "polygons classify";
      cmd_polygons(s);
    } else if (*search) {
      command = "search";
      cmd_search(s);
    } else if (*derive) {
      command = "pf derive";
      cmd_pf_derive(s, poly_a, order, deg);
    } else if (*verify) {
      command = "pf verify";
      cmd_pf_verify(s, poly_a, table);
    } else if (*symsq) {
      command = "pf symsq";
      cmd_pf_unary(s, "symsq", op_path);
    } else if (*root) {
      command = "pf root";
      cmd_pf_unary(s, "root", op_path);
    } else if (*pnf) {
      command = "pf pnf";
      cmd_pf_unary(s, "pnf", op_path);
    }
    s.write_manifest(command);
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return 2;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what());
    return 3;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace arithmirror::cli
