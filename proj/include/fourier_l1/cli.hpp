#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fourier_l1 {

enum class OutputFormat { csv, json };

struct CommandSpec {
  std::string subcommand;  // identities, conditions, ek-norms, decompose, converge
  std::optional<std::string> family;
  std::optional<std::string> grid_file;
  std::vector<std::pair<int, int>> mn;
  std::vector<double> lambdas;
  std::optional<int> nx;
  std::optional<int> ny;
  double tol = 0.0;
  int max_n = 4096;
  int max_k = 512;
  std::optional<int> quadrature;
  std::vector<int> n_range;
  std::optional<int> truncation;
  bool decay = false;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output;
  bool check = false;
};

/// argv[0] is the program name. Throws Error(usage) naming the offending
/// flag; `--help` output is written to `help` and yields std::nullopt.
std::optional<CommandSpec> parse_command(const std::vector<std::string>& argv, std::ostream& help);

/// Runs a parsed command: 0 on success, 2 when a --check gate fails.
/// Library errors propagate.
int run_command(const CommandSpec& spec, std::ostream& out);

/// parse + run with every failure mapped to exit status 1 and a message on
/// `err`.
int cli_main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fourier_l1
