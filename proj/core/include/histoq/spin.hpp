#pragma once

#include <array>

#include "histoq/class_operator.hpp"
#include "histoq/state.hpp"

namespace histoq {

/// Spin-1/2 state direction. theta is the polar angle from n2 (the z axis);
/// phi is the azimuth measured from the n1-n2 plane, so phi = 0 means the
/// state is coplanar with both measurement directions.
struct SpinState {
    double theta;  // [0, pi]
    double phi;    // [0, 2 pi)
};

/// Two-time geometry: the spin is asked about direction n1 first, then n2.
/// delta is the angle between them; the frame has n2 = z and n1 in the y-z
/// plane, n1 = (0, sin delta, cos delta).
struct SpinGeometry {
    double delta;  // [0, pi]
};

/// The two-component amplitudes of the state in the s_z eigenbasis.
StateVector spin_state_vector(const SpinState& s);

/// Projector onto spin orientation `up` (+/-) along direction n.
Projector spin_projector(double nx, double ny, double nz, bool up);

/// The four candidate probabilities (p++, p+-, p-+, p--) in closed form:
///   p(s2,s1) = (first-axis marginal term) + s2 s1 (1/4) cos(phi) sin(theta) sin(delta).
/// They sum to 1 and match the projector-chain matrix route to rounding.
std::array<double, 4> spin_candidate_probabilities(const SpinState& s, const SpinGeometry& g);

/// The same four values through the matrix route (explicit projector chain,
/// free Hamiltonian), for cross-checking the closed forms.
std::array<double, 4> spin_candidate_probabilities_matrix(const SpinState& s,
                                                          const SpinGeometry& g);

/// The two decoherence-functional off-diagonals that are not automatically
/// zero: <Psi_{++}|Psi_{+-}> and <Psi_{--}|Psi_{-+}>. Both vanish exactly only
/// for states (anti-)aligned with n1.
std::array<cdouble, 2> spin_md_offdiagonals(const SpinState& s, const SpinGeometry& g);

/// Matrix route for the off-diagonals.
std::array<cdouble, 2> spin_md_offdiagonals_matrix(const SpinState& s, const SpinGeometry& g);

/// The four-member two-time history set as a HistorySet, for classify_set.
HistorySet spin_history_set(const SpinGeometry& g);

struct PositivityRegionGrid {
    std::vector<double> theta_samples;
    std::vector<double> phi_samples;
    /// Row-major [theta index][phi index]: true iff all four candidate
    /// probabilities are >= -1e-14 (tiny negative rounding counts as
    /// positive: the boundary cells are exact analytic zeros).
    std::vector<bool> linearly_positive;

    bool at(std::size_t it, std::size_t ip) const {
        return linearly_positive[it * phi_samples.size() + ip];
    }
};

PositivityRegionGrid spin_positivity_region(double delta, std::span<const double> theta_grid,
                                            std::span<const double> phi_grid);

}  // namespace histoq
