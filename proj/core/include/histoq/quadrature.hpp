#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "histoq/errors.hpp"

namespace histoq {

using cdouble = std::complex<double>;

/// Controls for the adaptive integrators.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_panels = 1 << 14;
    double truncation_radius = 10.0;  // per caller, in units of the model's width scale
};

template <typename T>
struct QuadResult {
    T value;
    double error;  // accumulated per-panel estimates
    bool converged;
    int panels;
};

/// Adaptive Gauss-Kronrod (G7, K15). `breakpoints` seeds the initial panel
/// edges (interior points of [a, b], ends optional); callers integrating
/// oscillatory kernels pass equal-phase edges so no panel hides whole cycles
/// from the error estimator.
QuadResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                             const QuadratureSpec& spec = {},
                             std::span<const double> breakpoints = {});

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureSpec& spec = {}, std::span<const double> breakpoints = {});

/// Edges at which a quadratic phase w * x^2 (plus anything slower) completes
/// half a cycle, covering [a, b]. Suitable as `breakpoints` for kernels like
/// cos(w (x - x0)^2 + ...): pass x-offsets relative to the stationary point.
std::vector<double> equal_phase_breakpoints(double a, double b, double stationary_point,
                                            double phase_coefficient, int max_edges = 1 << 15);

}  // namespace histoq
