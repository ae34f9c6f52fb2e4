#pragma once

#include "histoq/probability.hpp"

namespace histoq {

/// p(joint)/p(cond). Virtual inputs are welcome, so the result may land
/// outside [0,1]. Conditioning on |p(cond)| below the floor is an error;
/// signed near-zero denominators are meaningless here.
double conditional_probability(const StateVector& psi, const ClassOperator& c_joint,
                               const ClassOperator& c_cond, double floor = 1e-12);

struct ChainFutureRow {
    std::string label;
    double direct;   // p(future | cond)
    double chained;  // sum over past of p(future | cond, past) p(past | cond)
};

/// Compares the direct conditional of each future alternative with the value
/// chained through an exhaustive set of past alternatives. The two agree even
/// when intermediate conditionals are virtual. Operator products are assembled
/// in canonical time order: future * cond * past.
std::vector<ChainFutureRow> chain_future_probability(const StateVector& psi,
                                                     const HistorySet& future,
                                                     const HistorySet& past,
                                                     const ClassOperator& cond,
                                                     double floor = 1e-12);

/// Conditional probability of a chain of future alternatives given a realized
/// chain: the realized branch is normalized and the future chain applied to
/// it. Always lands in [0,1].
double prediction_conditional(const StateVector& psi, std::span<const ChainStepSpec> realized,
                              std::span<const ChainStepSpec> future, const Hamiltonian& h);

}  // namespace histoq
