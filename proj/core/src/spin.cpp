#include "histoq/spin.hpp"

#include <cmath>

namespace histoq {

namespace {

void check_ranges(const SpinState& s, const SpinGeometry& g) {
    if (s.theta < 0.0 || s.theta > M_PI) throw InvalidInput("SpinState: theta out of [0, pi]");
    if (s.phi < 0.0 || s.phi >= 2.0 * M_PI + 1e-12) throw InvalidInput("SpinState: phi out of [0, 2 pi)");
    if (g.delta < 0.0 || g.delta > M_PI) throw InvalidInput("SpinGeometry: delta out of [0, pi]");
}

}  // namespace

StateVector spin_state_vector(const SpinState& s) {
    // Azimuth measured from the +y axis; the half-angle phases below put the
    // spin direction at (sin theta sin phi, sin theta cos phi, cos theta).
    const double azimuth = s.phi - M_PI / 2.0;
    CVector v(2);
    v(0) = std::polar(std::cos(s.theta / 2.0), azimuth / 2.0);
    v(1) = std::polar(std::sin(s.theta / 2.0), -azimuth / 2.0);
    return StateVector::normalized(v);
}

Projector spin_projector(double nx, double ny, double nz, bool up) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (norm < 1e-12) throw InvalidInput("spin_projector: zero direction");
    nx /= norm;
    ny /= norm;
    nz /= norm;
    const double sign = up ? 1.0 : -1.0;
    CMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + sign * nz);
    m(0, 1) = 0.5 * sign * cdouble(nx, -ny);
    m(1, 0) = 0.5 * sign * cdouble(nx, ny);
    m(1, 1) = 0.5 * (1.0 - sign * nz);
    return Projector(std::move(m));
}

std::array<double, 4> spin_candidate_probabilities(const SpinState& s, const SpinGeometry& g) {
    check_ranges(s, g);
    const double c2t = std::cos(s.theta / 2.0) * std::cos(s.theta / 2.0);
    const double s2t = std::sin(s.theta / 2.0) * std::sin(s.theta / 2.0);
    const double c2d = std::cos(g.delta / 2.0) * std::cos(g.delta / 2.0);
    const double s2d = std::sin(g.delta / 2.0) * std::sin(g.delta / 2.0);
    const double cross = 0.25 * std::cos(s.phi) * std::sin(s.theta) * std::sin(g.delta);
    return {
        c2t * c2d + cross,  // p(+,+)
        c2t * s2d - cross,  // p(+,-)
        s2t * s2d + cross,  // p(-,+)
        s2t * c2d - cross,  // p(-,-)
    };
}

namespace {

struct SpinChainOps {
    CMatrix c_pp, c_pm, c_mp, c_mm;  // second-axis projector times first-axis projector
};

SpinChainOps spin_chain_operators(const SpinGeometry& g) {
    const Projector p1_plus = spin_projector(0.0, std::sin(g.delta), std::cos(g.delta), true);
    const Projector p1_minus = spin_projector(0.0, std::sin(g.delta), std::cos(g.delta), false);
    const Projector p2_plus = spin_projector(0.0, 0.0, 1.0, true);
    const Projector p2_minus = spin_projector(0.0, 0.0, 1.0, false);
    return {
        p2_plus.matrix() * p1_plus.matrix(),
        p2_plus.matrix() * p1_minus.matrix(),
        p2_minus.matrix() * p1_plus.matrix(),
        p2_minus.matrix() * p1_minus.matrix(),
    };
}

}  // namespace

std::array<double, 4> spin_candidate_probabilities_matrix(const SpinState& s,
                                                          const SpinGeometry& g) {
    check_ranges(s, g);
    const StateVector psi = spin_state_vector(s);
    const SpinChainOps ops = spin_chain_operators(g);
    const CVector& v = psi.amplitudes();
    return {
        v.dot(ops.c_pp * v).real(),
        v.dot(ops.c_pm * v).real(),
        v.dot(ops.c_mp * v).real(),
        v.dot(ops.c_mm * v).real(),
    };
}

std::array<cdouble, 2> spin_md_offdiagonals(const SpinState& s, const SpinGeometry& g) {
    check_ranges(s, g);
    const double sd = std::sin(g.delta);
    const double cd = std::cos(g.delta);
    const double st = std::sin(s.theta);
    const double ct = std::cos(s.theta);
    const cdouble inner(cd * std::cos(s.phi), -std::sin(s.phi));
    return {
        0.25 * sd * (ct * sd - st * inner),              // <Psi_{++}|Psi_{+-}>
        0.25 * sd * (-ct * sd + st * std::conj(inner)),  // <Psi_{--}|Psi_{-+}>
    };
}

std::array<cdouble, 2> spin_md_offdiagonals_matrix(const SpinState& s, const SpinGeometry& g) {
    check_ranges(s, g);
    const StateVector psi = spin_state_vector(s);
    const SpinChainOps ops = spin_chain_operators(g);
    const CVector& v = psi.amplitudes();
    const CVector b_pp = ops.c_pp * v;
    const CVector b_pm = ops.c_pm * v;
    const CVector b_mm = ops.c_mm * v;
    const CVector b_mp = ops.c_mp * v;
    return {b_pp.dot(b_pm), b_mm.dot(b_mp)};
}

HistorySet spin_history_set(const SpinGeometry& g) {
    const SpinChainOps ops = spin_chain_operators(g);
    std::vector<ClassOperator> members;
    members.emplace_back(ops.c_pp);
    members.emplace_back(ops.c_pm);
    members.emplace_back(ops.c_mp);
    members.emplace_back(ops.c_mm);
    return HistorySet(std::move(members), {"(+,+)", "(+,-)", "(-,+)", "(-,-)"});
}

PositivityRegionGrid spin_positivity_region(double delta, std::span<const double> theta_grid,
                                            std::span<const double> phi_grid) {
    if (theta_grid.empty() || phi_grid.empty())
        throw InvalidInput("spin_positivity_region: empty grid");
    PositivityRegionGrid grid;
    grid.theta_samples.assign(theta_grid.begin(), theta_grid.end());
    grid.phi_samples.assign(phi_grid.begin(), phi_grid.end());
    grid.linearly_positive.resize(theta_grid.size() * phi_grid.size());
    const SpinGeometry g{delta};
    for (std::size_t it = 0; it < theta_grid.size(); ++it) {
        for (std::size_t ip = 0; ip < phi_grid.size(); ++ip) {
            const auto p = spin_candidate_probabilities({theta_grid[it], phi_grid[ip]}, g);
            const double min_p = std::min(std::min(p[0], p[1]), std::min(p[2], p[3]));
            grid.linearly_positive[it * phi_grid.size() + ip] = min_p >= -1e-14;
        }
    }
    return grid;
}

}  // namespace histoq
