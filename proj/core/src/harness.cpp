#include "fhdet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "fhdet/errors.hpp"
#include "fhdet/specfun.hpp"

namespace fhdet {

using constants::pi;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ComparisonRow failed_row(int n, const std::string& message) {
  ComparisonRow row;
  row.n = n;
  row.exact = LogComplex(kNaN, 0.0);
  row.predicted = LogComplex(kNaN, 0.0);
  row.ratio = Complex(kNaN, kNaN);
  row.ratio_error = kNaN;
  row.quality = Quality::ill_conditioned;
  row.error = message.empty() ? "error" : message;
  return row;
}

int max_of(std::span<const int> ns) {
  if (ns.empty()) throw DomainError("sweep: empty n grid");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw DomainError("sweep: n must be at least 1");
    if (i > 0 && ns[i] <= ns[i - 1]) throw DomainError("sweep: n values must increase");
  }
  return ns.back();
}

template <class RowFn>
std::vector<ComparisonRow> run_rows(std::span<const int> ns, unsigned threads, RowFn&& fn) {
  std::vector<ComparisonRow> rows(ns.size());
  parallel_for(ns.size(), threads, [&](std::size_t i) {
    try {
      rows[i] = fn(ns[i]);
    } catch (const std::exception& e) {
      rows[i] = failed_row(ns[i], e.what());
    }
  });
  return rows;
}

Quality worse(Quality a, Quality b) {
  return a == Quality::ok && b == Quality::ok ? Quality::ok : Quality::ill_conditioned;
}

}  // namespace

ComparisonRow make_row(int n, const LogComplex& exact, const LogComplex& predicted,
                       Quality quality) {
  ComparisonRow row;
  row.n = n;
  row.exact = exact;
  row.predicted = predicted;
  row.quality = quality;
  if (exact.is_zero() && predicted.is_zero()) {
    row.ratio = 1.0;
    row.ratio_error = 0.0;
  } else {
    row.ratio = ratio(exact, predicted);
    row.ratio_error = std::abs(row.ratio - 1.0);
  }
  return row;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FHDET_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::vector<int> geometric_grid(int a, int b) {
  if (a < 1 || b < a) throw DomainError("geometric_grid: need 1 <= a <= b");
  std::vector<int> out;
  for (long long n = a; n <= b; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

// ---------------------------------------------------------------------- sweeps

std::vector<ComparisonRow> sweep_toeplitz(const FHSymbol& f, std::span<const int> ns,
                                          const SweepOptions& options) {
  const int top = max_of(ns);
  const auto coeffs = fourier_coefficients(f, -(top - 1), top - 1, {options.tol});
  return run_rows(ns, options.threads, [&](int n) {
    const DeterminantValue exact = toeplitz_det(coeffs, n);
    return make_row(n, exact.value, basor_tracy_sum(f, n).value, exact.quality);
  });
}

std::vector<ComparisonRow> sweep_hankel(const HankelWeight& w, std::span<const int> ns,
                                        const SweepOptions& options) {
  max_of(ns);
  return run_rows(ns, options.threads, [&](int n) {
    const DeterminantValue exact = hankel_det(w, n, {options.tol});
    return make_row(n, exact.value, hankel_asymptotic(w, n), exact.quality);
  });
}

std::vector<ComparisonRow> sweep_tph(const FHSymbol& f, TphVariant variant,
                                     std::span<const int> ns, const SweepOptions& options) {
  const int top = max_of(ns);
  const auto coeffs = fourier_coefficients(f, -(2 * top + 2), 2 * top + 2, {options.tol});
  return run_rows(ns, options.threads, [&](int n) {
    const DeterminantValue exact = tph_det(coeffs, n, variant);
    return make_row(n, exact.value, tph_asymptotic(f, n, variant), exact.quality);
  });
}

PolySweep sweep_poly(const FHSymbol& f, std::span<const int> ns, const SweepOptions& options,
                     NuBranch branch) {
  const int top = max_of(ns);
  const auto coeffs = fourier_coefficients(f, -top, top, {options.tol});
  PolySweep out;
  out.chi_sq.resize(ns.size());
  out.phi0.resize(ns.size());
  out.hatphi0.resize(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const int n = ns[i];
    try {
      const PolynomialAsymptotics pred = polynomial_asymptotics(f, n, branch);
      const OrthoData prev = orthogonal_polynomials(coeffs, n - 1);
      const OrthoData cur = orthogonal_polynomials(coeffs, n);
      out.chi_sq[i] = make_row(n, LogComplex::from_value(prev.chi_sq),
                               LogComplex::from_value(pred.chi_sq), prev.quality);
      out.phi0[i] = make_row(n, LogComplex::from_value(cur.monic.front()),
                             LogComplex::from_value(pred.phi0_over_chi), cur.quality);
      out.hatphi0[i] = make_row(n, LogComplex::from_value(cur.hat_monic.front()),
                                LogComplex::from_value(pred.hatphi0_over_chi),
                                worse(cur.quality, prev.quality));
    } catch (const std::exception& e) {
      out.chi_sq[i] = out.phi0[i] = out.hatphi0[i] = failed_row(n, e.what());
    }
  });
  return out;
}

// ---------------------------------------------------------------- rate fitting

RateFit fit_error_rate(std::span<const ComparisonRow> rows) {
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (row.failed() || row.quality != Quality::ok) continue;
    if (!(row.ratio_error > 0.0) || !std::isfinite(row.ratio_error)) continue;
    xs.push_back(std::log(static_cast<double>(row.n)));
    ys.push_back(std::log(row.ratio_error));
  }
  if (xs.size() < 4) {
    throw InsufficientDataError("fit_error_rate: need at least 4 usable rows, have " +
                                std::to_string(xs.size()));
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("fit_error_rate: all rows share one n");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  fit.points = xs.size();
  return fit;
}

// ------------------------------------------------------------------------- CSV

void write_csv(std::ostream& os, std::span<const ComparisonRow> rows) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "n,exact_logmag,exact_arg,pred_logmag,pred_arg,ratio_re,ratio_im,ratio_error,quality\n";
  os << std::setprecision(17);
  for (const auto& row : rows) {
    os << row.n << ',' << row.exact.log_mag() << ',' << row.exact.arg() << ','
       << row.predicted.log_mag() << ',' << row.predicted.arg() << ',' << row.ratio.real() << ','
       << row.ratio.imag() << ',' << row.ratio_error << ','
       << (row.failed() ? std::string("error") : std::string(to_string(row.quality))) << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

void write_csv(const std::filesystem::path& path, std::span<const ComparisonRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("write_csv: cannot open " + path.string());
  write_csv(out, rows);
  if (!out) throw DomainError("write_csv: write failed for " + path.string());
}

// --------------------------------------------------------------------- corpora

FHSymbol basor_tracy_symbol() {
  return FHSymbol({}, {{0.0, 0.0, 0.5}, {pi, 0.0, -0.5}});
}

FHSymbol tridiagonal_symbol() { return FHSymbol({}, {{0.0, 1.0, 0.0}}); }

namespace {

FourierSeries series(std::initializer_list<std::pair<int, Complex>> terms) {
  const std::vector<std::pair<int, Complex>> v(terms);
  return FourierSeries::from_terms(v);
}

FHSymbol even_pair_symbol(FourierSeries v, Complex alpha_plus, Complex alpha_minus,
                          std::vector<Singularity> upper) {
  std::vector<Singularity> pts;
  pts.push_back({0.0, alpha_plus, 0.0});
  pts.push_back({pi, alpha_minus, 0.0});
  for (const auto& s : upper) {
    pts.push_back(s);
    pts.push_back({2.0 * pi - s.theta, s.alpha, -s.beta});
  }
  return FHSymbol(std::move(v), std::move(pts));
}

}  // namespace

std::vector<NamedSymbol> shift_identity_corpus() {
  return {
      {"root_analytic", FHSymbol(series({{1, 0.3}, {-1, 0.3}}), {{1.0, 0.5, 0.0}})},
      {"jump_analytic",
       FHSymbol(series({{1, 0.2}, {-1, 0.1}, {2, Complex(0.0, 0.05)}}), {{2.0, 0.0, 0.3}})},
      {"two_points",
       FHSymbol(series({{1, 0.1}, {-1, 0.1}}), {{0.5, 0.25, 0.2}, {3.5, 0.4, -0.3}})},
      {"three_points", FHSymbol(series({{1, 0.15}, {-1, -0.05}}),
                                {{0.0, 0.3, 0.1}, {2.2, 0.2, -0.25}, {4.4, 0.6, 0.15}})},
      {"complex_parameters", FHSymbol(series({{1, 0.2}, {-1, -0.1}}),
                                      {{1.7, Complex(0.3, 0.2), Complex(0.1, -0.2)}})},
      {"tridiagonal_analytic", FHSymbol(series({{1, 0.25}, {-1, 0.25}}), {{0.0, 1.0, 0.0}})},
  };
}

std::vector<NamedWeight> hankel_bridge_corpus() {
  return {
      {"one", HankelWeight()},
      {"semicircle", HankelWeight({}, 0.25, 0.25, {})},
      {"interior_jump", HankelWeight(series({{0, 0.1}, {1, 0.2}, {-1, 0.2}}), 0.0, 0.0,
                                     {{0.3, 0.0, 0.3}})},
  };
}

std::vector<NamedSymbol> tph_corpus() {
  return {
      {"one", FHSymbol()},
      {"even_roots",
       even_pair_symbol(series({{1, 0.2}, {-1, 0.2}}), 0.0, 0.0, {{pi / 2, 0.4, 0.0}})},
      {"even_mixed", even_pair_symbol(series({{1, 0.1}, {-1, 0.1}, {2, -0.05}, {-2, -0.05}}),
                                      0.3, 0.35, {{1.2, 0.25, 0.2}})},
  };
}

// --------------------------------------------------------------- identity suite

namespace {

struct IdentityJob {
  std::string identity;
  std::string case_name;
  int n = 0;
  std::string parameter;
  bool randomized = false;
  std::function<double()> run;
};

FHSymbol random_symbol(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 3);
  const int m = count(rng);
  std::vector<Singularity> pts;
  for (int i = 0; i < m; ++i) {
    // separated angles keep the Toeplitz matrices well-conditioned
    const double theta = (i + 0.15 + 0.7 * unit(rng)) * 2.0 * pi / m;
    pts.push_back({theta, 0.8 * unit(rng) - 0.1, 0.7 * unit(rng) - 0.35});
  }
  FourierSeries v(1);
  v.set(1, 0.4 * unit(rng) - 0.2);
  v.set(-1, 0.4 * unit(rng) - 0.2);
  return FHSymbol(std::move(v), std::move(pts));
}

FHSymbol random_even_symbol(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = 0.5 + 2.0 * unit(rng);
  FourierSeries v(1);
  const double v1 = 0.3 * unit(rng) - 0.15;
  v.set(1, v1);
  v.set(-1, v1);
  return even_pair_symbol(std::move(v), 0.6 * unit(rng), 0.6 * unit(rng),
                          {{theta, 0.6 * unit(rng), 0.6 * unit(rng) - 0.3}});
}

HankelWeight random_weight(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FourierSeries v(1);
  const double v1 = 0.3 * unit(rng) - 0.15;
  v.set(1, v1);
  v.set(-1, v1);
  return HankelWeight(std::move(v), 0.5 * unit(rng), 0.5 * unit(rng),
                      {{1.2 * unit(rng) - 0.6, 0.5 * unit(rng), 0.6 * unit(rng) - 0.3}});
}

constexpr int kShiftMaxN = 16;
constexpr int kBridgeMaxN = 8;
constexpr int kTphMaxN = 12;

}  // namespace

IdentityReport identity_suite(const IdentityConfig& config) {
  const double tol = config.tol;
  std::vector<IdentityJob> jobs;
  const int ells[] = {1, 2, 3, -1};
  for (const auto& [name, f] : shift_identity_corpus()) {
    for (int ell : ells) {
      for (int n = 1; n <= kShiftMaxN; ++n) {
        jobs.push_back({"shift", name, n, std::to_string(ell), false,
                        [f, n, ell, tol] { return check_shift_identity(f, n, ell, tol); }});
      }
    }
  }
  for (const auto& [name, w] : hankel_bridge_corpus()) {
    for (int n = 1; n <= kBridgeMaxN; ++n) {
      jobs.push_back({"hankel_toeplitz", name, n, "", false,
                      [w, n, tol] { return check_hankel_toeplitz_relation(w, n, tol); }});
    }
  }
  const TphVariant variants[] = {TphVariant::plus_k, TphVariant::minus_k2, TphVariant::plus_k1,
                                 TphVariant::minus_k1};
  for (const auto& [name, f] : tph_corpus()) {
    for (auto variant : variants) {
      for (int n = 1; n <= kTphMaxN; ++n) {
        jobs.push_back({"tph_reduction", name, n, std::string(to_string(variant)), false,
                        [f, n, variant, tol] { return check_tph_reduction(f, n, variant, tol); }});
      }
    }
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_n(1, 10);
  std::uniform_int_distribution<int> pick_ell(0, 3);
  std::uniform_int_distribution<int> pick_variant(0, 3);
  for (int c = 0; c < config.random_cases; ++c) {
    const std::string name = "random_" + std::to_string(c);
    const FHSymbol f = random_symbol(rng);
    const int n = pick_n(rng);
    const int ell = ells[pick_ell(rng)];
    jobs.push_back({"shift", name, n, std::to_string(ell), true,
                    [f, n, ell, tol] { return check_shift_identity(f, n, ell, tol); }});
    const HankelWeight w = random_weight(rng);
    const int nh = 1 + pick_n(rng) % 6;
    jobs.push_back({"hankel_toeplitz", name, nh, "", true,
                    [w, nh, tol] { return check_hankel_toeplitz_relation(w, nh, tol); }});
    const FHSymbol fe = random_even_symbol(rng);
    const TphVariant variant = variants[pick_variant(rng)];
    const int nt = pick_n(rng);
    jobs.push_back({"tph_reduction", name, nt, std::string(to_string(variant)), true,
                    [fe, nt, variant, tol] { return check_tph_reduction(fe, nt, variant, tol); }});
  }

  IdentityReport report;
  report.results.resize(jobs.size());
  parallel_for(jobs.size(), config.threads, [&](std::size_t i) {
    const auto& job = jobs[i];
    IdentityResidual r{job.identity, job.case_name, job.n, job.parameter, job.randomized, 0.0, ""};
    try {
      r.residual = job.run();
    } catch (const std::exception& e) {
      r.residual = kNaN;
      r.error = e.what();
    }
    report.results[i] = std::move(r);
  });

  report.histogram.assign(17, 0);
  for (const auto& r : report.results) {
    if (!r.error.empty() || !std::isfinite(r.residual)) {
      ++report.failures;
      continue;
    }
    double& slot = r.randomized ? report.max_random : report.max_fixed;
    slot = std::max(slot, r.residual);
    if (r.randomized) {
      const double e = r.residual > 0.0 ? std::floor(std::log10(r.residual)) : -17.0;
      const int bin = std::clamp(static_cast<int>(e), -17, -1) + 17;
      ++report.histogram[static_cast<std::size_t>(bin)];
    }
  }
  return report;
}

}  // namespace fhdet
