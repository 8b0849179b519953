#include "fhdet/log_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fhdet/specfun.hpp"

namespace fhdet {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double normalize_angle(double a) {
  double r = std::remainder(a, constants::two_pi);
  if (r <= -constants::pi) r += constants::two_pi;
  return r;
}

LogComplex::LogComplex(double log_mag, double arg)
    : log_mag_(log_mag), arg_(std::isinf(log_mag) && log_mag < 0 ? 0.0 : normalize_angle(arg)) {}

LogComplex LogComplex::zero() { return {kNegInf, 0.0}; }

LogComplex LogComplex::from_value(Complex z) {
  if (z == Complex{}) return zero();
  // hypot-based log avoids overflow of |z|^2
  return {std::log(std::abs(z)), std::arg(z)};
}

LogComplex LogComplex::from_log(Complex w) { return {w.real(), w.imag()}; }

bool LogComplex::is_zero() const { return std::isinf(log_mag_) && log_mag_ < 0; }

Complex LogComplex::value() const {
  if (is_zero()) return {};
  return std::polar(std::exp(log_mag_), arg_);
}

LogComplex& LogComplex::operator*=(const LogComplex& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = zero();
  *this = LogComplex(log_mag_ + rhs.log_mag_, arg_ + rhs.arg_);
  return *this;
}

LogComplex& LogComplex::operator/=(const LogComplex& rhs) {
  if (rhs.is_zero()) {
    *this = LogComplex(std::numeric_limits<double>::infinity(), 0.0);
    return *this;
  }
  if (is_zero()) return *this;
  *this = LogComplex(log_mag_ - rhs.log_mag_, arg_ - rhs.arg_);
  return *this;
}

LogComplex LogComplex::pow(int k) const {
  if (k == 0) return one();
  if (is_zero()) return k > 0 ? zero() : LogComplex(std::numeric_limits<double>::infinity(), 0.0);
  return {k * log_mag_, k * arg_};
}

LogComplex sum(std::span<const LogComplex> terms) {
  double top = kNegInf;
  for (const auto& t : terms) top = std::max(top, t.log_mag());
  if (std::isinf(top) && top < 0) return LogComplex::zero();
  Complex acc{};
  double scale = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const Complex v = std::polar(std::exp(t.log_mag() - top), t.arg());
    acc += v;
    scale += std::abs(v);
  }
  // Cancellation down to rounding level is reported as an exact zero.
  if (std::abs(acc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    return LogComplex::zero();
  }
  LogComplex out = LogComplex::from_value(acc);
  return {out.log_mag() + top, out.arg()};
}

LogComplex operator+(const LogComplex& a, const LogComplex& b) {
  const LogComplex terms[] = {a, b};
  return sum(terms);
}

LogComplex operator-(const LogComplex& a, const LogComplex& b) {
  const LogComplex terms[] = {a, LogComplex(b.log_mag(), b.arg() + constants::pi)};
  return sum(terms);
}

Complex ratio(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() && !b.is_zero()) return {};
  if (b.is_zero()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  return std::polar(std::exp(a.log_mag() - b.log_mag()), a.arg() - b.arg());
}

double relative_difference(const LogComplex& a, const LogComplex& b, const LogComplex& scale) {
  const double top = std::max({a.log_mag(), b.log_mag(), scale.log_mag()});
  if (std::isinf(top) && top < 0) return 0.0;
  auto scaled = [top](const LogComplex& x) -> Complex {
    if (x.is_zero()) return {};
    return std::polar(std::exp(x.log_mag() - top), x.arg());
  };
  return std::abs(scaled(a) - scaled(b));
}

}  // namespace fhdet
