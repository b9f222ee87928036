#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anumber/graph.hpp"
#include "anumber/toric.hpp"

namespace anumber::cli {

enum class Command { invariants, betti, complex, hvector, table, verify };
enum class OutputFormat { human, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitResource = 3;

struct CliConfig {
  Command command = Command::invariants;
  std::optional<SimpleGraph> graph;
  std::optional<BettiMethod> method;
  std::string which = "full";
  GraphFamily family = GraphFamily::path;
  int max_n = 10;
  std::optional<int> sweep_up_to;
  int dp_cap = 20;
  int homology_cap = 7;
  OutputFormat output = OutputFormat::human;

  ToricOptions toric_options() const;
};

/// Parses argv (without the program name) into a config. Graph sources are
/// read here, so `--stdin` consumes `in`. Throws anumber::Error subclasses
/// on bad input; CLI11 errors are rethrown as MalformedInput.
CliConfig parse_args(const std::vector<std::string>& args, std::istream& in);

int run(const CliConfig& config, std::ostream& out);

/// parse_args + run with exit-code mapping; diagnostics go to `err`.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace anumber::cli
