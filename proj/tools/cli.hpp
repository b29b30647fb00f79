#pragma once

// Command-line front end. Kept in a library so tests can drive it without
// spawning processes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arithmirror/fan.hpp"
#include "arithmirror/polytope.hpp"

namespace arithmirror::cli {

enum class Format { Json, Csv, Pretty };

struct RunConfig {
  std::vector<std::uint32_t> primes = {5};
  std::vector<std::uint32_t> degrees = {1};
  std::size_t K = 30;
  std::optional<std::filesystem::path> database;
  std::filesystem::path out_dir;
  Format format = Format::Json;
  TriangulationOrder triangulation = TriangulationOrder::Lex;
  bool cache = true;
  unsigned workers = 1;

  /// Throws InvalidArgument when an invariant fails.
  void validate() const;
};

/// ARITHMIRROR_OUT if set, else "arithmirror-out".
std::filesystem::path default_out_dir();

/// A database-format file, a polytope JSON file ({"vertices": ...}) or a
/// builtin name.
LatticePolytope load_polytope(const std::string& spec);

/// Runs one command line. Results go to `out`; on failure an error object
/// {"error": {"kind", "message"}} is written to `err` and the return value is
/// nonzero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace arithmirror::cli
