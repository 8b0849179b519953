#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fhdet/exact.hpp"

namespace fhdet::cli {

enum class Command { eval, coeffs, det, asym, poly, reps, sweep, identities };
std::string_view to_string(Command c);
Command parse_command(std::string_view name);

/// Quantity compared by `sweep` for symbols without a variant.
enum class Quantity { det, chi_sq, phi0, hatphi0 };
std::string_view to_string(Quantity q);
Quantity parse_quantity(std::string_view name);

struct RunConfig {
  Command command = Command::det;
  std::string problem_path;
  std::optional<int> n;
  /// geometric grid a, 2a, ... <= b
  std::optional<std::pair<int, int>> grid;
  std::optional<TphVariant> variant;
  Quantity quantity = Quantity::det;
  double tol = 1e-13;
  std::uint64_t seed = 1;
  std::string out;
  bool check = false;
  std::optional<double> theta;
  std::optional<double> x;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// JSON form used by --dump-config and --config.
std::string dump_run_config(const RunConfig& config);
/// Throws ConfigError for malformed input or unknown keys.
RunConfig parse_run_config(std::string_view json_text);
/// Throws ConfigError when the combination of fields is invalid.
void validate(const RunConfig& config);

/// Executes a validated configuration, writing results to `out`.
void run(const RunConfig& config, std::ostream& out);

/// Full command line entry point: parses, dispatches and maps failures to
/// exit statuses with a JSON error object on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhdet::cli
