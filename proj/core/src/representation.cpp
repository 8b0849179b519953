#include "fhdet/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fhdet/errors.hpp"

namespace fhdet {

namespace {
constexpr double kTieTol = 1e-9;
constexpr double kDegenerateTol = 1e-10;

bool is_negative_integer(Complex z) {
  if (std::abs(z.imag()) > kDegenerateTol) return false;
  const double r = std::round(z.real());
  return r <= -1.0 && std::abs(z.real() - r) <= kDegenerateTol;
}
}  // namespace

Representation::Representation(FHSymbol base)
    : base_(std::move(base)), shifts_(base_.size(), 0) {}

Representation::Representation(FHSymbol base, std::vector<int> shifts)
    : base_(std::move(base)), shifts_(std::move(shifts)) {
  if (shifts_.size() != base_.size()) {
    throw InvariantError("Representation: shift vector length " + std::to_string(shifts_.size()) +
                         " does not match " + std::to_string(base_.size()) + " points");
  }
  if (std::accumulate(shifts_.begin(), shifts_.end(), 0) != 0) {
    throw InvariantError("Representation: shifts must sum to zero");
  }
  for (std::size_t j = 0; j < shifts_.size(); ++j) {
    if (shifts_[j] != 0 && !base_[j].is_singular()) {
      throw InvariantError("Representation: shift at non-singular point " + std::to_string(j));
    }
  }
}

std::vector<Complex> Representation::effective_betas() const {
  std::vector<Complex> out;
  out.reserve(shifts_.size());
  for (std::size_t j = 0; j < shifts_.size(); ++j) {
    out.push_back(base_[j].beta + static_cast<double>(shifts_[j]));
  }
  return out;
}

namespace {

double seminorm_of(const FHSymbol& f, std::span<const Complex> betas) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t j : f.singular_indices()) {
    lo = std::min(lo, betas[j].real());
    hi = std::max(hi, betas[j].real());
  }
  return hi >= lo ? hi - lo : 0.0;
}

std::vector<Complex> betas_of(const FHSymbol& f) {
  std::vector<Complex> b;
  for (const auto& p : f.singularities()) b.push_back(p.beta);
  return b;
}

}  // namespace

double beta_seminorm(const FHSymbol& f) {
  const auto b = betas_of(f);
  return seminorm_of(f, b);
}

double beta_seminorm(const Representation& rep) {
  const auto b = rep.effective_betas();
  return seminorm_of(rep.base(), b);
}

double shifted_beta_norm(const Representation& rep) {
  double s = 0.0;
  const auto b = rep.effective_betas();
  for (std::size_t j : rep.base().singular_indices()) s += b[j].real() * b[j].real();
  return s;
}

std::vector<Representation> find_minimal_representations(const FHSymbol& f) {
  const auto singular = f.singular_indices();
  std::vector<int> shifts(f.size(), 0);
  if (singular.size() <= 1) return {Representation(f, shifts)};

  std::vector<double> b;
  for (std::size_t j : singular) b.push_back(f[j].beta.real());

  auto argmin = [&] { return std::min_element(b.begin(), b.end()) - b.begin(); };
  auto argmax = [&] { return std::max_element(b.begin(), b.end()) - b.begin(); };

  // Raise a minimal entry and lower a maximal one while the spread exceeds 1.
  // Each step lowers sum b^2 by 2 (b_max - b_min - 1) > 0, so this terminates.
  while (true) {
    const auto s = argmin();
    const auto t = argmax();
    if (b[t] - b[s] <= 1.0 + kTieTol) break;
    b[s] += 1.0;
    b[t] -= 1.0;
    ++shifts[singular[s]];
    --shifts[singular[t]];
  }

  const double lo = b[argmin()];
  const double hi = b[argmax()];
  if (hi - lo < 1.0 - kTieTol) return {Representation(f, shifts)};

  // Spread exactly 1: any equal number of minimal entries raised and
  // maximal entries lowered gives another minimizer.
  std::vector<std::size_t> lower;  // positions into `singular`
  std::vector<std::size_t> upper;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i] - lo) <= kTieTol) lower.push_back(i);
    if (std::abs(b[i] - hi) <= kTieTol) upper.push_back(i);
  }

  auto subsets_of_size = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) s.push_back(i);
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  };

  std::vector<Representation> result;
  const std::size_t max_k = std::min(lower.size(), upper.size());
  for (std::size_t k = 0; k <= max_k; ++k) {
    for (const auto& raise : subsets_of_size(lower.size(), k)) {
      for (const auto& drop : subsets_of_size(upper.size(), k)) {
        std::vector<int> n = shifts;
        for (std::size_t i : raise) ++n[singular[lower[i]]];
        for (std::size_t i : drop) --n[singular[upper[i]]];
        result.emplace_back(f, std::move(n));
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const Representation& a, const Representation& b2) {
    return a.shifts() < b2.shifts();
  });
  return result;
}

ShiftedSymbol apply_representation(const Representation& rep) {
  const auto betas = rep.effective_betas();
  double phase = 0.0;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    phase += rep.shifts()[j] * rep.base()[j].theta;
  }
  return {rep.base().with_betas(betas), Complex(0.0, phase)};
}

std::optional<Degeneracy> is_degenerate(const Representation& rep) {
  const auto betas = rep.effective_betas();
  for (std::size_t j = 0; j < betas.size(); ++j) {
    const Complex alpha = rep.base()[j].alpha;
    if (is_negative_integer(alpha + betas[j])) return Degeneracy{j, alpha + betas[j], true};
    if (is_negative_integer(alpha - betas[j])) return Degeneracy{j, alpha - betas[j], false};
  }
  return std::nullopt;
}

}  // namespace fhdet
