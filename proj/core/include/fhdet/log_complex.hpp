#pragma once

#include <complex>
#include <span>

namespace fhdet {

using Complex = std::complex<double>;

/// Complex number stored as (log|z|, arg z). Keeps determinants of any size
/// representable. Exact zero is log_mag == -inf.
class LogComplex {
 public:
  constexpr LogComplex() = default;
  LogComplex(double log_mag, double arg);

  static LogComplex zero();
  static LogComplex one() { return {}; }
  static LogComplex from_value(Complex z);
  /// exp(w) for a complex logarithm w.
  static LogComplex from_log(Complex w);

  double log_mag() const { return log_mag_; }
  /// Argument in (-pi, pi].
  double arg() const { return arg_; }
  bool is_zero() const;

  /// log_mag + i arg. Real part is -inf for zero.
  Complex log() const { return {log_mag_, arg_}; }
  /// Plain complex value; may overflow or underflow.
  Complex value() const;

  LogComplex& operator*=(const LogComplex& rhs);
  LogComplex& operator/=(const LogComplex& rhs);
  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }
  LogComplex pow(int k) const;
  LogComplex conj() const { return {log_mag_, -arg_}; }

  friend bool operator==(const LogComplex&, const LogComplex&) = default;

 private:
  double log_mag_ = 0.0;
  double arg_ = 0.0;
};

/// Sum of values in log form, scaled by the largest magnitude.
LogComplex sum(std::span<const LogComplex> terms);
LogComplex operator+(const LogComplex& a, const LogComplex& b);
LogComplex operator-(const LogComplex& a, const LogComplex& b);

/// a / b as an ordinary complex number (finite when the magnitudes are
/// comparable, even if a and b themselves are not representable).
Complex ratio(const LogComplex& a, const LogComplex& b);

/// |a - b| / max(|a|, |b|, |scale|); zero when all three vanish.
double relative_difference(const LogComplex& a, const LogComplex& b,
                           const LogComplex& scale = LogComplex::zero());

/// Map an angle to (-pi, pi].
double normalize_angle(double a);

}  // namespace fhdet
