#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fhdet/hankel_weight.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

/// A symbol or a Hankel weight read from a JSON problem file.
///
/// Symbol:
///   {"kind": "symbol",
///    "V": [{"k": 1, "value": 0.3}, {"k": -1, "value": [0.3, 0.0]}],
///    "singularities": [{"theta": 0.0, "alpha": 0.5, "beta": [0.1, -0.2]},
///                      {"theta_over_pi": 1.0, "alpha": 0.0, "beta": -0.5}]}
/// Weight (V lists k >= 0 only, V_{-k} = V_k):
///   {"kind": "weight", "V": [{"k": 1, "value": 0.2}],
///    "alpha_plus": 0.25, "alpha_minus": 0.25,
///    "interior": [{"lambda": 0.3, "alpha": 0.0, "beta": 0.3}]}
/// Complex numbers are a number or [re, im]. An optional "name" string is
/// kept; any other key is rejected.
struct Problem {
  enum class Kind { symbol, weight };
  Kind kind = Kind::symbol;
  std::string name;
  FHSymbol symbol;
  HankelWeight weight;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Throws ConfigError for malformed JSON, unknown keys or invalid values.
Problem parse_problem(std::string_view json_text);
Problem load_problem(const std::filesystem::path& path);
/// Canonical JSON that parse_problem maps back to an identical Problem.
std::string dump_problem(const Problem& problem);

}  // namespace fhdet
