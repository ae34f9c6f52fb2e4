#include "histoq/complex_erf.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "histoq/errors.hpp"

namespace histoq {

namespace {

using cdouble = std::complex<double>;

constexpr int kWeidemanN = 48;
constexpr double kTwoOverSqrtPi = 1.1283791670955126;
constexpr double kOneOverSqrtPi = 0.5641895835477563;

// Chebyshev-like expansion coefficients of Weideman's rational approximation,
// computed once by a direct cosine transform of exp(-t^2)(L^2 + t^2) on the
// tangent-mapped grid.
const std::array<double, kWeidemanN>& weideman_coefficients() {
    static const std::array<double, kWeidemanN> coeffs = [] {
        std::array<double, kWeidemanN> a{};
        const int m = 2 * kWeidemanN;
        const int m2 = 2 * m;
        const double big_l = std::sqrt(kWeidemanN / std::sqrt(2.0));
        std::vector<double> f(static_cast<std::size_t>(2 * m - 1));
        std::vector<double> theta(f.size());
        for (int k = -m + 1; k <= m - 1; ++k) {
            const double th = k * M_PI / m;
            const double t = big_l * std::tan(0.5 * th);
            theta[static_cast<std::size_t>(k + m - 1)] = th;
            f[static_cast<std::size_t>(k + m - 1)] = std::exp(-t * t) * (big_l * big_l + t * t);
        }
        for (int n = 1; n <= kWeidemanN; ++n) {
            double sum = 0.0;
            for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * std::cos(n * theta[j]);
            a[static_cast<std::size_t>(n - 1)] = sum / m2;
        }
        return a;
    }();
    return coeffs;
}

double weideman_big_l() {
    static const double big_l = std::sqrt(kWeidemanN / std::sqrt(2.0));
    return big_l;
}

// exp with the real part of the exponent clamped so the growth sectors
// saturate instead of overflowing.
cdouble clamped_exp(cdouble exponent) {
    const double re = std::min(exponent.real(), 700.0);
    return std::polar(std::exp(re), exponent.imag());
}

cdouble erf_series(cdouble z) {
    const cdouble z2 = z * z;
    cdouble term = z;
    cdouble sum = z;
    for (int k = 1; k <= 64; ++k) {
        term *= -z2 / static_cast<double>(k);
        const cdouble contribution = term / static_cast<double>(2 * k + 1);
        sum += contribution;
        if (std::abs(contribution) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return kTwoOverSqrtPi * sum;
}

// erf on the closed first quadrant.
cdouble erf_first_quadrant(cdouble z) {
    if (std::abs(z) <= 3.0) return erf_series(z);
    const cdouble w = faddeeva_w(cdouble(0.0, 1.0) * z);  // iz is in the upper half-plane
    return 1.0 - clamped_exp(-z * z) * w;
}

}  // namespace

cdouble faddeeva_w(cdouble z) {
    if (z.imag() < -1e-15)
        throw InvalidInput("faddeeva_w: argument must be in the closed upper half-plane");
    const auto& a = weideman_coefficients();
    const double big_l = weideman_big_l();
    const cdouble iz(-z.imag(), z.real());
    const cdouble denom = big_l - iz;
    const cdouble big_z = (big_l + iz) / denom;
    cdouble poly = 0.0;
    for (int n = kWeidemanN - 1; n >= 0; --n) poly = poly * big_z + a[static_cast<std::size_t>(n)];
    return 2.0 * poly / (denom * denom) + kOneOverSqrtPi / denom;
}

cdouble complex_erf(cdouble z) {
    if (z.real() < 0.0) return -complex_erf(-z);
    if (z.imag() < 0.0) return std::conj(complex_erf(std::conj(z)));
    return erf_first_quadrant(z);
}

cdouble complex_erfc(cdouble z) {
    if (z.real() >= 0.0) {
        const bool flip = z.imag() < 0.0;
        const cdouble zz = flip ? std::conj(z) : z;
        const cdouble w = faddeeva_w(cdouble(0.0, 1.0) * zz);
        const cdouble result = clamped_exp(-zz * zz) * w;
        return flip ? std::conj(result) : result;
    }
    return 2.0 - complex_erfc(-z);
}

}  // namespace histoq
