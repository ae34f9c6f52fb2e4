#include "doctest.h"

#include <cmath>

#include "histoq/complex_erf.hpp"
#include "support/erf_oracle.hpp"

using namespace histoq;
using testing::erf_series_oracle;
using testing::erfc_asymptotic_oracle;
using testing::erfc_continued_fraction_oracle;

TEST_CASE("complex_erf: origin and real-axis saturation") {
    CHECK(std::abs(complex_erf(0.0)) == 0.0);
    CHECK(complex_erf(cdouble(30.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(complex_erf(cdouble(-30.0, 0.0)).real() == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("complex_erf matches std::erf on the real axis") {
    for (double x = -6.0; x <= 6.0; x += 0.37) {
        const cdouble v = complex_erf(cdouble(x, 0.0));
        CHECK(std::abs(v.imag()) < 1e-14);
        CHECK(v.real() == doctest::Approx(std::erf(x)).epsilon(1e-12));
    }
}

TEST_CASE("complex_erf against the extended-precision series, |z| <= 4") {
    for (double r = 0.2; r <= 4.01; r += 0.45) {
        for (double arg = 0.0; arg < 2.0 * M_PI; arg += 0.39) {
            const cdouble z = std::polar(r, arg);
            const cdouble expected = erf_series_oracle(z);
            const double scale = std::max(1.0, std::abs(expected));
            CHECK(std::abs(complex_erf(z) - expected) < 1e-12 * scale);
        }
    }
}

TEST_CASE("complex_erf: the reference point 1 + i") {
    const cdouble v = complex_erf(cdouble(1.0, 1.0));
    const cdouble expected = erf_series_oracle(cdouble(1.0, 1.0));
    CHECK(v.real() == doctest::Approx(expected.real()).epsilon(1e-13));
    CHECK(v.imag() == doctest::Approx(expected.imag()).epsilon(1e-13));
    // series oracle itself is stable here: 30 terms already agree
    const cdouble expected30 = erf_series_oracle(cdouble(1.0, 1.0), 30);
    CHECK(std::abs(expected - expected30) < 1e-15);
}

TEST_CASE("complex_erfc against the continued fraction, sector |arg| <= pi/4, 5 <= |z| <= 20") {
    for (double r : {5.0, 6.5, 8.0, 12.0, 20.0}) {
        for (double arg = -M_PI / 4.0; arg <= M_PI / 4.0 + 1e-9; arg += M_PI / 16.0) {
            const cdouble z = std::polar(r, arg);
            const cdouble mine = complex_erfc(z);
            const cdouble oracle = erfc_continued_fraction_oracle(z);
            CHECK(std::abs(mine - oracle) < 1e-12 * std::max(std::abs(oracle), 1e-30));
            // erf itself is ~1 here; 1e-12 relative accuracy means matching 1
            CHECK(std::abs(complex_erf(z) - (1.0 - oracle)) < 1e-12);
        }
    }
}

TEST_CASE("complex_erf against the asymptotic series near the imaginary axis, |z| >= 6") {
    // the rational-approximation branch must stay accurate where the continued
    // fraction converges poorly
    for (double r : {6.0, 9.0, 14.0, 20.0}) {
        for (double arg : {M_PI / 2.0 - 0.3, M_PI / 2.0 - 0.05, M_PI / 2.0}) {
            const cdouble z = std::polar(r, arg);
            const cdouble mine = 1.0 - complex_erf(z);
            const cdouble oracle = erfc_asymptotic_oracle(z);
            CHECK(std::abs(mine - oracle) < 1e-10 * std::abs(oracle));
        }
    }
}

TEST_CASE("complex_erf symmetries hold exactly") {
    for (double r : {0.3, 2.0, 7.0, 18.0}) {
        for (double arg = 0.05; arg < 2.0 * M_PI; arg += 0.61) {
            const cdouble z = std::polar(r, arg);
            const cdouble v = complex_erf(z);
            const cdouble reflected = complex_erf(-z);
            const cdouble conjugated = complex_erf(std::conj(z));
            CHECK(std::abs(reflected + v) < 1e-12 * std::max(1.0, std::abs(v)));
            CHECK(std::abs(conjugated - std::conj(v)) < 1e-12 * std::max(1.0, std::abs(v)));
        }
    }
}

TEST_CASE("complex_erfc: stable tail values and complement identity") {
    for (double x : {4.0, 8.0, 15.0}) {
        const cdouble v = complex_erfc(cdouble(x, 0.5));
        const cdouble oracle = erfc_continued_fraction_oracle(cdouble(x, 0.5));
        CHECK(std::abs(v - oracle) < 1e-12 * std::abs(oracle));
    }
    for (double r : {0.5, 2.5}) {
        const cdouble z = std::polar(r, 0.8);
        CHECK(std::abs(complex_erf(z) + complex_erfc(z) - 1.0) < 1e-12);
    }
}

TEST_CASE("faddeeva_w: reference values") {
    CHECK(std::abs(faddeeva_w(cdouble(0.0, 0.0)) - cdouble(1.0, 0.0)) < 1e-12);
    // w(i y) = exp(y^2) erfc(y)
    const double y = 1.0;
    const double expected = std::exp(y * y) * std::erfc(y);
    CHECK(faddeeva_w(cdouble(0.0, y)).real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(faddeeva_w(cdouble(0.0, y)).imag()) < 1e-13);
    // real axis: Re w(x) = exp(-x^2)
    for (double x : {0.5, 1.5, 3.0}) {
        CHECK(faddeeva_w(cdouble(x, 0.0)).real() ==
              doctest::Approx(std::exp(-x * x)).epsilon(1e-11));
    }
}

TEST_CASE("complex_erf on the interference diagonal stays bounded and oscillatory") {
    // arguments sqrt(pi)(1-i) u: |erf| stays near 1 with an O(1/u) ripple
    for (double u : {2.0, 5.0, 9.0}) {
        const cdouble z = std::sqrt(M_PI) * cdouble(1.0, -1.0) * u;
        const cdouble v = complex_erf(z);
        CHECK(std::abs(v - 1.0) < 1.0 / u);
        CHECK(std::abs(v - 1.0) > 1e-4 / u);
    }
}
