#ifndef TAILFRAC_CLI_HPP
#define TAILFRAC_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tailfrac/distributions.hpp"

namespace tailfrac::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kNumeric = 4 };

inline constexpr std::uint64_t kDefaultSeed = 20161;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table1Cmd {
  std::vector<double> nu;
};

struct ExpansionCmd {
  Family family;
};

/// Figure 1 is a grid curve (x_min, x_max, points); figures 2-4 are sample
/// based (n, fraction, seed).
struct FigureCmd {
  int id = 1;
  Family family;
  std::size_t n = 0;
  double fraction = 0.0;
  Seed seed{kDefaultSeed};
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t points = 0;
};

/// With x0: Monte Carlo exceedance report. Without: the raw draws, one per
/// line, in the format `analyze` reads.
struct SimulateCmd {
  Family family;
  std::optional<double> x0;
  std::size_t n = 0;
  Seed seed{kDefaultSeed};
};

struct AnalyzeCmd {
  std::string path;
  double mu = 0.0;
  std::optional<std::size_t> k;
};

struct FractionCmd {
  double p = 0.0;
};

struct Command {
  std::variant<Table1Cmd, ExpansionCmd, FigureCmd, SimulateCmd, AnalyzeCmd,
               FractionCmd>
      action;
  std::optional<std::string> out_path;
};

/// Parses argv (argv[0] is the program name). Throws UsageError naming the
/// offending flag; every numeric value is range checked here.
Command parse_args(std::span<const std::string> argv);

/// Executes a parsed command, writing to `out`. Library exceptions
/// propagate; see main_entry for the exit code mapping.
int run(const Command& cmd, std::ostream& out);

/// parse_args + run with errors mapped to exit codes: usage 2, data 3,
/// numeric non-convergence 4. Help output returns 0.
int main_entry(std::span<const std::string> argv, std::ostream& out,
               std::ostream& err);

/// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double v);

}  // namespace tailfrac::cli

#endif  // TAILFRAC_CLI_HPP
