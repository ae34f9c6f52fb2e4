#pragma once

#include "histoq/classify.hpp"

namespace histoq {

struct ConservationReport {
    /// max over (j', j) of |sum_beta p(j', beta, j) - delta_{j'j} p(j)|.
    /// Holds unconditionally; a sum-rule consequence of the orthogonality of
    /// conserved-quantity projectors at different times.
    double sum_rule_residual;
    /// max over j' != j, beta of |p(j', beta, j)|.
    double max_cross_term;
    Classification classification;  // of the full (j', beta, j) set
    /// True iff the set is linearly positive and every individual cross term
    /// vanishes within tolerance — the exact-conservation statement.
    bool exact_conservation_verified;
    HistorySet set;  // the assembled histories, for inspection
};

/// Builds histories P_{j'}(t2) C_beta P_j(t1) from a decomposition commuting
/// with H and intermediate decompositions at strictly increasing times in
/// (t1, t2), then checks the conservation sum rule and, when the set is LP,
/// the vanishing of every individual cross term.
ConservationReport check_conservation(const StateVector& psi, const Hamiltonian& h,
                                      const ProjectiveDecomposition& conserved,
                                      std::span<const TimedDecomposition> intermediate,
                                      double t1, double t2, double tol = 1e-10);

}  // namespace histoq
