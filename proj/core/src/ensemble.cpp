#include "histoq/ensemble.hpp"

#include <cmath>

namespace histoq {

double ensemble_candidate_probability(const EnsembleSpec& spec) {
    if (spec.n_total < 0 || spec.n_c < 0 || spec.n_c > spec.n_total)
        throw InvalidInput("ensemble_candidate_probability: need 0 <= n_c <= N");
    const cdouble z = spec.z;
    const cdouble w = 1.0 - z;
    const int n = spec.n_c;
    const int m = spec.n_total - spec.n_c;

    const double az = std::abs(z);
    const double aw = std::abs(w);
    if (n > 0 && az == 0.0) return 0.0;
    if (m > 0 && aw == 0.0) return 0.0;

    double log_mag = 0.0;
    double phase = 0.0;
    if (n > 0) {
        log_mag += n * std::log(az);
        phase += n * std::arg(z);
    }
    if (m > 0) {
        log_mag += m * std::log(aw);
        phase += m * std::arg(w);
    }
    if (log_mag < -745.0) return 0.0;  // underflow: the value is beyond double range
    return std::exp(log_mag) * std::cos(phase);
}

PositivityHorizon ensemble_positivity_horizon(cdouble z, int n_max) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw InvalidInput("ensemble_positivity_horizon: |z| must be <= 1");
    constexpr double kNegative = -1e-15;
    for (int n_total = 1; n_total <= n_max; ++n_total) {
        for (int n_c = 0; n_c <= n_total; ++n_c) {
            const double p = ensemble_candidate_probability({z, n_total, n_c});
            if (p < kNegative) return {n_total, n_c, p};
        }
    }
    return {std::nullopt, 0, 0.0};
}

ProductHistoryResult product_history_probability(
    std::span<const std::pair<StateVector, ClassOperator>> per_subsystem) {
    if (per_subsystem.empty())
        throw InvalidInput("product_history_probability: empty subsystem list");
    cdouble joint_amplitude = 1.0;
    double product_of_re = 1.0;
    double md_joint = 1.0;
    for (const auto& [psi, c] : per_subsystem) {
        if (psi.dim() != c.dim())
            throw InvalidInput("product_history_probability: dimension mismatch");
        const cdouble amp = psi.amplitudes().dot(c.matrix() * psi.amplitudes());
        joint_amplitude *= amp;
        product_of_re *= amp.real();
        md_joint *= (c.matrix() * psi.amplitudes()).squaredNorm();
    }
    return {joint_amplitude.real(), product_of_re, md_joint};
}

}  // namespace histoq
