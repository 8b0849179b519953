#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fhdet/asymptotics.hpp"
#include "fhdet/exact.hpp"

namespace fhdet {

/// One exact-vs-predicted record. A failed row keeps n and the error message;
/// its quality is ill_conditioned and the numeric fields are NaN / zero.
struct ComparisonRow {
  int n = 0;
  LogComplex exact;
  LogComplex predicted;
  /// exact / predicted
  Complex ratio{};
  /// |ratio - 1|
  double ratio_error = 0.0;
  Quality quality = Quality::ok;
  std::string error;

  bool failed() const { return !error.empty(); }
};

ComparisonRow make_row(int n, const LogComplex& exact, const LogComplex& predicted,
                       Quality quality);

struct SweepOptions {
  double tol = 1e-13;
  /// 0 means FHDET_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
};

/// Number of worker threads for a request (see SweepOptions::threads).
unsigned worker_count(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// a, 2a, 4a, ... up to b inclusive.
std::vector<int> geometric_grid(int a, int b);

/// exact = toeplitz_det, predicted = basor_tracy_sum.
std::vector<ComparisonRow> sweep_toeplitz(const FHSymbol& f, std::span<const int> ns,
                                          const SweepOptions& options = {});
/// exact = hankel_det, predicted = hankel_asymptotic.
std::vector<ComparisonRow> sweep_hankel(const HankelWeight& w, std::span<const int> ns,
                                        const SweepOptions& options = {});
/// exact = tph_det, predicted = tph_asymptotic.
std::vector<ComparisonRow> sweep_tph(const FHSymbol& f, TphVariant variant,
                                     std::span<const int> ns, const SweepOptions& options = {});

struct PolySweep {
  std::vector<ComparisonRow> chi_sq;   // chi_{n-1}^2
  std::vector<ComparisonRow> phi0;     // phi_n(0) / chi_n
  std::vector<ComparisonRow> hatphi0;  // hat phi_n(0) / chi_n
};
PolySweep sweep_poly(const FHSymbol& f, std::span<const int> ns, const SweepOptions& options = {},
                     NuBranch branch = NuBranch::raw);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log(ratio_error) against log(n). Rows that failed,
/// are ill-conditioned or have a zero or non-finite error are skipped.
/// Throws InsufficientDataError with fewer than 4 usable rows.
RateFit fit_error_rate(std::span<const ComparisonRow> rows);

/// CSV with header
/// n,exact_logmag,exact_arg,pred_logmag,pred_arg,ratio_re,ratio_im,ratio_error,quality
/// and 17 significant digits.
void write_csv(std::ostream& os, std::span<const ComparisonRow> rows);
void write_csv(const std::filesystem::path& path, std::span<const ComparisonRow> rows);

struct NamedSymbol {
  std::string name;
  FHSymbol symbol;
};
struct NamedWeight {
  std::string name;
  HankelWeight weight;
};

/// f = -i on (0, pi), i on (pi, 2 pi): beta = (1/2, -1/2) at z = 1, -1.
FHSymbol basor_tracy_symbol();
/// f = |z - 1|^2, D_n = n + 1.
FHSymbol tridiagonal_symbol();

/// Six symbols with analytic V and one to three singularities.
std::vector<NamedSymbol> shift_identity_corpus();
/// w = 1, sqrt(1 - x^2) and a weight with one interior jump.
std::vector<NamedWeight> hankel_bridge_corpus();
/// f = 1 and two even Fisher-Hartwig symbols.
std::vector<NamedSymbol> tph_corpus();

struct IdentityConfig {
  std::uint64_t seed = 1;
  int random_cases = 12;
  double tol = 1e-13;
  unsigned threads = 0;
};

struct IdentityResidual {
  std::string identity;  // "shift", "hankel_toeplitz" or "tph_reduction"
  std::string case_name;
  int n = 0;
  /// ell for the shift identity, the variant name for reductions
  std::string parameter;
  bool randomized = false;
  double residual = 0.0;
  std::string error;
};

struct IdentityReport {
  std::vector<IdentityResidual> results;
  double max_fixed = 0.0;
  double max_random = 0.0;
  /// Counts of floor(log10 residual) over the randomized corpus, from
  /// -17 (and below) to -1 (and above).
  std::vector<std::size_t> histogram;
  std::size_t failures = 0;
};

/// Every identity check over the fixed corpora (shift identities for
/// n <= 16, the Hankel-Toeplitz relation for n <= 8, T+H reductions for
/// n <= 12) plus a seeded randomized corpus.
IdentityReport identity_suite(const IdentityConfig& config = {});

}  // namespace fhdet
