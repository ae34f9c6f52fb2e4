#pragma once

#include "histoq/classify.hpp"

namespace histoq {

/// Partition of a history set's member indices into disjoint covering blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<std::string> block_labels;  // optional; defaults assigned when empty
};

/// Coarse graining: each block becomes one history whose class operator is the
/// sum over the block's members.
HistorySet coarse_grain(const HistorySet& set, const Partition& partition);

struct SumRuleReport {
    std::vector<double> residuals;  // |p(block) - sum of member p's| per block
    double max_residual;
    bool pass;
};

/// Verifies the probability sum rules between a set and its coarse graining.
/// These hold for every set, including ones with virtual probabilities.
SumRuleReport verify_sum_rules(const StateVector& psi, const HistorySet& set,
                               const Partition& partition, double tol = 1e-10);

}  // namespace histoq
