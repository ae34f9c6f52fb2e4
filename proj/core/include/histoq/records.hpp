#pragma once

#include "histoq/classify.hpp"

namespace histoq {

/// Projective decomposition whose first `aligned_count` rows pair off with the
/// members of a history set; an optional trailing complement row restores
/// exhaustiveness when the branch projectors do not span the space.
struct RecordSet {
    ProjectiveDecomposition decomposition;
    std::size_t aligned_count;
};

/// Builds records from the normalized branch projectors of a history set.
/// Zero-norm branches (norm below `branch_floor`) get a rank-0 row; the
/// orthogonal complement of all branch projectors is appended as a final row
/// when it has nonzero rank. Only meaningful for (near-)medium-decoherent
/// sets; for others the returned projectors fail the decomposition invariants
/// and this throws.
RecordSet records_from_branches(const StateVector& psi, const HistorySet& set,
                                double branch_floor = 1e-12);

struct RecordReport {
    /// max over (record row b, history a) of |R_b C_a psi - delta_ba C_a psi|.
    double max_correlation_residual;
    bool pass;
    /// On pass: max |p(a) - Re<psi|R_a|psi>| — record probabilities equal the
    /// history probabilities, which pins every p(a) into [0,1].
    double probability_residual;
    bool probabilities_in_range;
};

/// Checks the strong record-correlation condition R_b C_a|psi> =
/// delta_ba C_a|psi>. Passing implies medium decoherence of the set.
RecordReport verify_records(const StateVector& psi, const HistorySet& set, const RecordSet& records,
                            double tol = 1e-10);

}  // namespace histoq
