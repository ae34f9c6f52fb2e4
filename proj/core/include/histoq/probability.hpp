#pragma once

#include "histoq/class_operator.hpp"
#include "histoq/state.hpp"

namespace histoq {

/// Candidate probability Re<Psi|C|Psi>, defined for any class operator whether
/// or not the value lands in [0,1]. Cross-checked internally against the
/// equivalent Hermitian-part form (1/2)<Psi|(C + C^dagger)|Psi>.
double candidate_probability(const StateVector& psi, const ClassOperator& c);
double candidate_probability(const StateVector& psi, const Operator& c);

/// Im<Psi|C|Psi>; zero for real-linearly-positive sets.
double candidate_probability_imag(const StateVector& psi, const ClassOperator& c);

/// Branch state vector C|Psi> (not normalized; its squared norm is the
/// branch-norm probability).
CVector branch_state(const StateVector& psi, const ClassOperator& c);

/// Decoherence functional entry <Psi|C_a^dagger C_b|Psi>. The first slot is
/// conjugate-linear. Off-diagonal moduli measure interference between
/// histories; diagonal entries are branch norms squared.
cdouble decoherence_functional(const StateVector& psi, const ClassOperator& c_alpha,
                               const ClassOperator& c_beta);

/// Full Gram matrix of branch state vectors: D(a,b) = <Psi_a|Psi_b>.
CMatrix decoherence_matrix(const StateVector& psi, const HistorySet& set);

}  // namespace histoq
