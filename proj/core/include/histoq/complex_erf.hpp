#pragma once

#include <complex>

namespace histoq {

using cdouble = std::complex<double>;

/// Error function of a complex argument. Maclaurin series for |z| <= 3,
/// otherwise assembled from the Faddeeva function w computed with Weideman's
/// rational approximation (uniformly accurate on the closed upper half-plane).
/// Relative accuracy ~1e-12 for |z| <= 20 away from the complex zeros of erf
/// (near a zero the accuracy is absolute, ~1e-13). The odd and conjugation
/// symmetries hold exactly: inputs are reduced to the first quadrant.
/// For |z| beyond ~26 in the growth sectors the exp(-z^2) factor is clamped
/// at exponent 700, so the result saturates near 1e304 instead of overflowing.
std::complex<double> complex_erf(std::complex<double> z);

/// Complementary error function, 1 - erf(z). For Re(z) >= 0 computed directly
/// as exp(-z^2) w(iz), which stays accurate when erfc is tiny.
std::complex<double> complex_erfc(std::complex<double> z);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= -1e-15.
std::complex<double> faddeeva_w(std::complex<double> z);

}  // namespace histoq
