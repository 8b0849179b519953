#pragma once

#include "fhdet/log_complex.hpp"

namespace fhdet {

/// True when z lies within tol of one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z, double tol = 1e-12);

/// Principal branch of log Gamma(z), i.e. the continuation of the real
/// log-Gamma off the negative real axis. Throws PoleError at 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z). Throws PoleError at the poles.
Complex gamma(Complex z);

/// 1 / Gamma(z); exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// log G(z) for Barnes' G-function, G(1) = 1, G(z + 1) = Gamma(z) G(z).
/// At z = 0, -1, -2, ... G vanishes and the real part is -infinity.
/// The imaginary part is only defined modulo 2 pi.
Complex log_barnes_g(Complex z);

namespace constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 6.283185307179586476925286766559005768;
inline constexpr double ln2 = 0.693147180559945309417232121458176568;
inline constexpr double ln_pi = 1.144729885849400174143427351353058712;
inline constexpr double ln_two_pi = 1.837877066409345483560659472811235280;

// zeta'(-1) = 1/12 - ln A with Glaisher's constant
// A = 1.28242712910062263687534256886979172776768892732500...
// ln A = 0.24875447703378426254725299357611398...
inline constexpr double zeta_prime_minus_one = -0.165421143700450929213919660242780642;

// log G(1/2) = (1/24) ln 2 - (1/4) ln pi + (3/2) zeta'(-1)
//            = 0.02888113252... - 0.28618247146... - 0.24813171555...
inline constexpr double log_barnes_g_half = -0.50543305448969538279768498980834495;

}  // namespace constants

}  // namespace fhdet
