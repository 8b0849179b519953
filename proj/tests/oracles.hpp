#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fhdet/symbol.hpp"

namespace fhdet::oracle {

/// All shift vectors (over every point of f, zero at non-singular points)
/// minimizing sum (Re beta_j + n_j)^2, by exhaustive search over
/// |n_j| <= reach. Sorted lexicographically.
inline std::vector<std::vector<int>> minimal_shifts_brute_force(const FHSymbol& f, int reach = 5) {
  const auto idx = f.singular_indices();
  std::vector<std::vector<int>> best;
  double best_norm = 1e300;
  std::vector<int> shifts(f.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int partial) {
    if (pos + 1 == idx.size() || idx.empty()) {
      if (!idx.empty()) {
        const int last = -partial;
        if (std::abs(last) > reach) return;
        shifts[idx[pos]] = last;
      }
      double norm = 0.0;
      for (auto j : idx) {
        const double b = f[j].beta.real() + shifts[j];
        norm += b * b;
      }
      if (norm < best_norm - 1e-9) {
        best_norm = norm;
        best.clear();
      }
      if (std::abs(norm - best_norm) <= 1e-9) best.push_back(shifts);
      return;
    }
    for (int s = -reach; s <= reach; ++s) {
      shifts[idx[pos]] = s;
      rec(pos + 1, partial + s);
    }
  };
  rec(0, 0);
  std::sort(best.begin(), best.end());
  return best;
}

/// Determinant by Gaussian elimination in long double (small n only).
inline Complex naive_det(std::vector<std::vector<Complex>> a) {
  using LC = std::complex<long double>;
  const std::size_t n = a.size();
  std::vector<std::vector<LC>> m(n, std::vector<LC>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = LC(a[i][j].real(), a[i][j].imag());
  LC det = 1.0L;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (m[p][c] == LC{}) return {};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const LC factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return {static_cast<double>(det.real()), static_cast<double>(det.imag())};
}

/// log Gamma by the Stirling series at a point shifted past Re = 40, then
/// the recurrence back; the imaginary part is only meaningful modulo 2 pi.
inline Complex log_gamma_stirling(Complex z) {
  Complex shift_log{};
  while (z.real() < 40.0) {
    shift_log += std::log(z);
    z += 1.0;
  }
  const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  Complex series = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
  Complex zpow = z;
  for (int k = 1; k <= 6; ++k) {
    series += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) / zpow;
    zpow *= z * z;
  }
  return series - shift_log;
}

/// Difference of two logarithms modulo 2 pi i.
inline double log_distance(Complex a, Complex b) {
  const Complex d = a - b;
  return std::abs(Complex(d.real(), std::remainder(d.imag(), 2.0 * M_PI)));
}

}  // namespace fhdet::oracle
