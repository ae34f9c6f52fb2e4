#pragma once

#include "histoq/free_particle.hpp"

namespace histoq {

/// Packet center at time T under classical drift: X = X0 + K0 T / M.
double drifted_center(const GaussianPacket& p, double t);

/// True when the shape-frozen evolution is trustworthy: the packet starts
/// well inside x > 0 (X0 >= 3 sigma) and T is short against the spreading
/// time (T <= spreading_time / 4).
bool spacetime_regime_ok(const GaussianPacket& p, double t);

struct RestrictedAmplitude {
    cdouble value;
    bool in_regime;
};

/// Wavefunction at x > 0 and time T of the packet evolved with an infinite
/// barrier at x = 0, by the method of images on the shape-frozen free
/// evolution: Phi_R(x,T) = Phi_U(x,T) - Phi_U(-x,T). Vanishes as x -> 0+
/// (Dirichlet condition); reduces to the free packet far from the barrier.
RestrictedAmplitude restricted_wavefunction(double x, double t, const GaussianPacket& p);

struct RemainProbability {
    double p_remain;      // candidate probability of never crossing x = 0 in [0, T]
    double p_cross;       // 1 - p_remain
    bool in_regime;
};

/// Candidate probability that the particle stays at x > 0 for the whole
/// interval [0, T], by a single adaptive quadrature.
RemainProbability spacetime_remain_probability(const GaussianPacket& p, double t,
                                               const QuadratureSpec& spec = {});

struct SpacetimeDecoherence {
    cdouble d;                 // <Psi_R | Psi_Rbar> overlap
    bool approximation_valid;  // false once the drifted center passes X < -2 sigma
};

/// Off-diagonal decoherence-functional entry between the remain and cross
/// histories. Near zero when the packet never approaches the barrier; tends
/// to -1 when nearly all of it crosses.
SpacetimeDecoherence spacetime_decoherence(const GaussianPacket& p, double t,
                                           const QuadratureSpec& spec = {});

}  // namespace histoq
