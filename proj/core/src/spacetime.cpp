#include "histoq/spacetime.hpp"

#include <cmath>

namespace histoq {

double drifted_center(const GaussianPacket& p, double t) {
    return p.center + p.momentum * t / p.mass;
}

bool spacetime_regime_ok(const GaussianPacket& p, double t) {
    return p.center >= 3.0 * p.sigma && t <= 0.25 * spreading_time(p);
}

RestrictedAmplitude restricted_wavefunction(double x, double t, const GaussianPacket& p) {
    if (!(x > 0.0)) throw InvalidInput("restricted_wavefunction: defined for x > 0 only");
    const cdouble direct = frozen_shape_packet(x, t, p);
    const cdouble image = frozen_shape_packet(-x, t, p);
    return {direct - image, spacetime_regime_ok(p, t)};
}

namespace {

std::vector<double> half_period_edges(double upper, double momentum) {
    std::vector<double> edges;
    const double k = std::abs(momentum);
    if (k < 1e-12) return edges;
    const double step = M_PI / (2.0 * k);
    for (double x = step; x < upper; x += step) edges.push_back(x);
    return edges;
}

}  // namespace

RemainProbability spacetime_remain_probability(const GaussianPacket& p, double t,
                                               const QuadratureSpec& spec) {
    const double sigma = p.sigma;
    const double sigma2 = sigma * sigma;
    const double x_center = drifted_center(p, t);
    const double norm = 1.0 / std::sqrt(2.0 * M_PI * sigma2);

    auto f = [&](double x) {
        const double direct = std::exp(-(x - x_center) * (x - x_center) / (2.0 * sigma2));
        // exp(-(x-X)^2/2s^2) exp(-xX/s^2) combined, stable for X < 0 too
        const double overlap =
            std::exp(-(x * x + x_center * x_center) / (2.0 * sigma2)) * std::cos(2.0 * p.momentum * x);
        return norm * (direct - overlap);
    };

    const double upper = std::max(x_center, 0.0) + spec.truncation_radius * sigma + 2.0 * sigma;
    const auto r = integrate(f, 0.0, upper, spec, half_period_edges(upper, p.momentum));
    if (!r.converged) throw NumericalFailure("spacetime_remain_probability: quadrature stalled");
    return {r.value, 1.0 - r.value, spacetime_regime_ok(p, t)};
}

SpacetimeDecoherence spacetime_decoherence(const GaussianPacket& p, double t,
                                           const QuadratureSpec& spec) {
    const double sigma = p.sigma;
    const double sigma2 = sigma * sigma;
    const double x_center = drifted_center(p, t);
    const double norm = 1.0 / std::sqrt(2.0 * M_PI * sigma2);
    constexpr cdouble kI(0.0, 1.0);

    auto f = [&](double x) {
        const cdouble cross = std::exp(-(x * x + x_center * x_center) / (2.0 * sigma2)) *
                              std::exp(-2.0 * kI * p.momentum * x);
        const double mirrored = std::exp(-(x + x_center) * (x + x_center) / (2.0 * sigma2));
        return norm * (cross - mirrored);
    };

    const double upper = std::max(-x_center, 0.0) + spec.truncation_radius * sigma + 2.0 * sigma;
    const auto r = integrate_complex(f, 0.0, upper, spec, half_period_edges(upper, p.momentum));
    if (!r.converged) throw NumericalFailure("spacetime_decoherence: quadrature stalled");
    return {r.value, x_center >= -2.0 * sigma};
}

}  // namespace histoq
