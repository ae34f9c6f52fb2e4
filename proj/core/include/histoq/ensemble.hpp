#pragma once

#include <optional>

#include "histoq/probability.hpp"

namespace histoq {

/// An ensemble of N identical subsystems, each with a two-member history set
/// {C1, I - C1}, described entirely by z = <Psi|C1|Psi> = A e^{i phi}.
struct EnsembleSpec {
    cdouble z;
    int n_total;  // ensemble size N
    int n_c;      // how many members follow the C1 history

    double amplitude() const { return std::abs(z); }
    double phase() const { return std::arg(z); }
};

/// Candidate probability Re[z^{n_c} (1 - z)^{N - n_c}] of one ensemble history
/// with n_c subsystems in C1. Evaluated in log-polar form so large N neither
/// overflows nor loses the phase.
double ensemble_candidate_probability(const EnsembleSpec& spec);

struct PositivityHorizon {
    std::optional<int> horizon;  // smallest failing N, or nullopt for "none"
    int witness_n_c = 0;
    double witness_value = 0.0;
};

/// Scans N = 1..n_max, n_c = 0..N for the first strictly negative candidate
/// probability (threshold p < -1e-15; exact zeros are boundary cases, not
/// failures). Sequential by contract: returns the smallest failing N.
PositivityHorizon ensemble_positivity_horizon(cdouble z, int n_max);

struct ProductHistoryResult {
    double lp_joint;                // Re of the product of the amplitudes
    double lp_product_of_marginals; // product of the Re's
    double md_joint;                // product of branch norms squared
};

/// Probability assignments for a product history of independent subsystems,
/// computed from per-subsystem scalars without materializing tensor products.
/// lp_joint differs from lp_product_of_marginals unless every factor is real —
/// the branch-norm rule keeps subsystems statistically independent, the
/// real-part rule does not.
ProductHistoryResult product_history_probability(
    std::span<const std::pair<StateVector, ClassOperator>> per_subsystem);

}  // namespace histoq
