#pragma once

#include "histoq/quadrature.hpp"

namespace histoq {

/// Gaussian wave packet of a free particle (hbar = 1 throughout).
struct GaussianPacket {
    double sigma;          // width
    double mass;
    double center = 0.0;   // X0
    double momentum = 0.0; // K0
};

/// Time over which the packet spreads appreciably: 2 sigma^2 M.
double spreading_time(const GaussianPacket& p);

/// Characteristic wavelength of the two-time interference oscillation:
/// sqrt(4 pi tau / M).
double oscillation_wavelength(double tau, double mass);

/// Exact free evolution of the packet.
cdouble evolved_packet(double x, double tau, const GaussianPacket& p);

/// Shape-frozen approximation: the envelope translates classically and only
/// the global phase advances. Valid for tau much less than the spreading time
/// and a packet well away from any boundary.
cdouble frozen_shape_packet(double x, double tau, const GaussianPacket& p);

/// Free-particle propagator <x2|exp(-iHt)|x1>.
cdouble free_propagator(double x2, double x1, double tau, double mass);

enum class JointForm {
    Exact,      // evolved bra state and full propagator kernel
    ShortTime,  // bra state frozen at t = 0 (the cosine-kernel form)
};

struct JointProbability {
    double value;
    bool regime_warning;  // short-time form used with tau within 10x of the spreading time
};

/// Candidate probability for the two-time history "in [a1,b1] at t=0, in
/// [a2,b2] at t=tau", by double adaptive quadrature with equal-phase panel
/// seeding of the quadratic propagator phase.
JointProbability free_particle_joint_probability(double a1, double b1, double a2, double b2,
                                                 const GaussianPacket& p, double tau,
                                                 JointForm form = JointForm::Exact,
                                                 const QuadratureSpec& spec = {});

enum class LocalizationRoute {
    Auto,     // direct when the oscillation count is small, contour otherwise
    Direct,   // equal-phase panels across the whole window
    Contour,  // oscillatory part rotated onto the ray where it decays like a Gaussian
};

/// Candidate probability that the packet sits in [-Delta, Delta] at both
/// times, in the lambda << sigma regime: the X integral of the Gaussian
/// envelope against J(Delta - X), with J(z) = Re erf(sqrt(pi)(1-i) z/lambda).
/// The integrand's oscillatory tail carries (Delta/lambda)^2 cycles, so for
/// small lambda the erfc remainder is integrated along the rotated ray where
/// it decays like exp(-2 pi s^2/lambda^2); the two routes agree to ~1e-9
/// where both are affordable.
double localization_probability(double delta, const GaussianPacket& p, double lambda,
                                const QuadratureSpec& spec = {},
                                LocalizationRoute route = LocalizationRoute::Auto);

/// Off-diagonal decoherence-functional entry between "stays in [-Delta,
/// Delta] at both times" and its complement, as an iterated kernel integral.
/// Near zero for Delta >> sigma, of order Delta/sigma for Delta << sigma.
cdouble localization_decoherence(double delta, const GaussianPacket& p, double tau,
                                 const QuadratureSpec& spec = {});

}  // namespace histoq
