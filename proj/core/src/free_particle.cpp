#include "histoq/free_particle.hpp"

#include <cmath>

#include "histoq/complex_erf.hpp"

namespace histoq {

namespace {

void check_packet(const GaussianPacket& p) {
    if (!(p.sigma > 0.0) || !(p.mass > 0.0))
        throw InvalidInput("GaussianPacket: sigma and mass must be positive");
}

constexpr cdouble kI(0.0, 1.0);

}  // namespace

double spreading_time(const GaussianPacket& p) {
    check_packet(p);
    return 2.0 * p.sigma * p.sigma * p.mass;
}

double oscillation_wavelength(double tau, double mass) {
    if (!(tau > 0.0) || !(mass > 0.0))
        throw InvalidInput("oscillation_wavelength: tau and mass must be positive");
    return std::sqrt(4.0 * M_PI * tau / mass);
}

cdouble evolved_packet(double x, double tau, const GaussianPacket& p) {
    check_packet(p);
    const double sigma2 = p.sigma * p.sigma;
    const cdouble spread = 1.0 + kI * (tau / (2.0 * sigma2 * p.mass));
    const double shifted = x - p.center - p.momentum * tau / p.mass;
    const cdouble phase = kI * (p.momentum * x - 0.5 * p.momentum * p.momentum * tau / p.mass);
    const double norm = std::pow(2.0 * M_PI * sigma2, -0.25);
    return norm / std::sqrt(spread) * std::exp(phase - shifted * shifted / (4.0 * sigma2 * spread));
}

cdouble frozen_shape_packet(double x, double tau, const GaussianPacket& p) {
    check_packet(p);
    const double sigma2 = p.sigma * p.sigma;
    const double shifted = x - p.center - p.momentum * tau / p.mass;
    const cdouble phase = kI * (p.momentum * x - 0.5 * p.momentum * p.momentum * tau / p.mass);
    const double norm = std::pow(2.0 * M_PI * sigma2, -0.25);
    return norm * std::exp(phase - shifted * shifted / (4.0 * sigma2));
}

cdouble free_propagator(double x2, double x1, double tau, double mass) {
    if (!(tau > 0.0)) throw InvalidInput("free_propagator: tau must be positive");
    const double dx = x2 - x1;
    // sqrt(M / (2 pi i tau)) with the principal branch: phase e^{-i pi/4}
    const double amp = std::sqrt(mass / (2.0 * M_PI * tau));
    const cdouble root = amp * std::polar(1.0, -M_PI / 4.0);
    return root * std::exp(kI * (mass * dx * dx / (2.0 * tau)));
}

JointProbability free_particle_joint_probability(double a1, double b1, double a2, double b2,
                                                 const GaussianPacket& p, double tau,
                                                 JointForm form, const QuadratureSpec& spec) {
    check_packet(p);
    if (!(a1 < b1) || !(a2 < b2))
        throw InvalidInput("free_particle_joint_probability: intervals must be nonempty");
    if (!(tau > 0.0)) throw InvalidInput("free_particle_joint_probability: tau must be positive");

    const double lambda = oscillation_wavelength(tau, p.mass);
    const double phase_coefficient = p.mass / (2.0 * tau);

    auto bra = [&](double x2) {
        return form == JointForm::Exact ? evolved_packet(x2, tau, p)
                                        : evolved_packet(x2, 0.0, p);
    };

    auto inner = [&](double x2) {
        auto f = [&](double x1) {
            return free_propagator(x2, x1, tau, p.mass) * evolved_packet(x1, 0.0, p);
        };
        const auto edges = equal_phase_breakpoints(a1, b1, x2, phase_coefficient);
        const auto r = integrate_complex(f, a1, b1, spec, edges);
        if (!r.converged)
            throw NumericalFailure("free_particle_joint_probability: inner quadrature stalled");
        return r.value;
    };

    // Outer panels no wider than lambda/8 keep the kernel oscillation visible.
    std::vector<double> outer_edges;
    const double step = std::max(lambda / 8.0, (b2 - a2) / 4096.0);
    for (double x = a2 + step; x < b2; x += step) outer_edges.push_back(x);

    auto outer_f = [&](double x2) { return std::conj(bra(x2)) * inner(x2); };
    const auto outer = integrate_complex(outer_f, a2, b2, spec, outer_edges);
    if (!outer.converged)
        throw NumericalFailure("free_particle_joint_probability: outer quadrature stalled");

    const bool warn = form == JointForm::ShortTime && tau * 10.0 > spreading_time(p);
    return {outer.value.real(), warn};
}

namespace {

// Oscillatory remainder of the localization integral, rotated onto the
// pi/4 ray where erfc decays like a Gaussian. Exact contour deformation:
// the integrand is entire and vanishes on the closing arc.
double localization_oscillatory_part(double delta, double sigma, double lambda,
                                     const QuadratureSpec& spec) {
    const double rho = std::sqrt(2.0 * M_PI) / lambda;           // c e^{i pi/4}, real
    const cdouble c = std::sqrt(M_PI) * cdouble(1.0, -1.0) / lambda;
    const cdouble ray = std::polar(1.0, M_PI / 4.0);
    const double two_sigma2 = 2.0 * sigma * sigma;

    auto from_zero = [&](double s) {
        const cdouble x = delta - ray * s;  // X = Delta - z on the rotated path
        return std::exp(-x * x / two_sigma2) * static_cast<cdouble>(std::erfc(rho * s));
    };
    auto from_delta = [&](double s) {
        const cdouble x = -ray * s;
        return std::exp(-x * x / two_sigma2) * complex_erfc(c * delta + rho * s);
    };

    const double s_max = 3.0 * lambda;
    const auto i0 = integrate_complex(from_zero, 0.0, s_max, spec);
    const auto id = integrate_complex(from_delta, 0.0, s_max, spec);
    if (!i0.converged || !id.converged)
        throw NumericalFailure("localization_probability: contour quadrature stalled");
    return (ray * (i0.value - id.value)).real();
}

}  // namespace

double localization_probability(double delta, const GaussianPacket& p, double lambda,
                                const QuadratureSpec& spec, LocalizationRoute route) {
    check_packet(p);
    if (delta < 0.0) throw InvalidInput("localization_probability: delta must be nonnegative");
    if (!(lambda > 0.0)) throw InvalidInput("localization_probability: lambda must be positive");
    if (delta == 0.0) return 0.0;

    const double sigma = p.sigma;
    const double prefactor = std::sqrt(2.0 / (M_PI * sigma * sigma));
    const cdouble c = std::sqrt(M_PI) * cdouble(1.0, -1.0) / lambda;

    if (route == LocalizationRoute::Auto)
        route = delta <= 40.0 * lambda ? LocalizationRoute::Direct : LocalizationRoute::Contour;

    if (route == LocalizationRoute::Direct) {
        auto f = [&](double z) {
            const double x = delta - z;
            const double j = complex_erf(c * z).real();
            return std::exp(-x * x / (2.0 * sigma * sigma)) * j;
        };
        const auto edges = equal_phase_breakpoints(0.0, delta, 0.0, 2.0 * M_PI / (lambda * lambda));
        const auto r = integrate(f, 0.0, delta, spec, edges);
        if (!r.converged) throw NumericalFailure("localization_probability: quadrature stalled");
        return prefactor * r.value;
    }

    // smooth part: J replaced by 1
    auto gaussian = [&](double x) { return std::exp(-x * x / (2.0 * sigma * sigma)); };
    const auto smooth = integrate(gaussian, 0.0, delta, spec);
    if (!smooth.converged) throw NumericalFailure("localization_probability: quadrature stalled");

    const double osc = localization_oscillatory_part(delta, sigma, lambda, spec);
    return prefactor * (smooth.value - osc);
}

cdouble localization_decoherence(double delta, const GaussianPacket& p, double tau,
                                 const QuadratureSpec& spec) {
    check_packet(p);
    if (delta < 0.0) throw InvalidInput("localization_decoherence: delta must be nonnegative");
    if (!(tau > 0.0)) throw InvalidInput("localization_decoherence: tau must be positive");
    if (delta == 0.0) return 0.0;

    const double phase_coefficient = p.mass / (2.0 * tau);

    // A(x): the inside part of the packet propagated to tau.
    auto inside_evolved = [&](double x) {
        auto f = [&](double x1) {
            return free_propagator(x, x1, tau, p.mass) * evolved_packet(x1, 0.0, p);
        };
        const auto edges = equal_phase_breakpoints(-delta, delta, x, phase_coefficient);
        const auto r = integrate_complex(f, -delta, delta, spec, edges);
        if (!r.converged) throw NumericalFailure("localization_decoherence: inner quadrature stalled");
        return r.value;
    };

    const double lambda = oscillation_wavelength(tau, p.mass);
    std::vector<double> outer_edges;
    const double step = std::max(lambda / 8.0, 2.0 * delta / 2048.0);
    for (double x = -delta + step; x < delta; x += step) outer_edges.push_back(x);

    auto f = [&](double x) {
        const cdouble a = inside_evolved(x);
        return std::conj(a) * (evolved_packet(x, tau, p) - a);
    };
    const auto r = integrate_complex(f, -delta, delta, spec, outer_edges);
    if (!r.converged) throw NumericalFailure("localization_decoherence: outer quadrature stalled");
    return r.value;
}

}  // namespace histoq
