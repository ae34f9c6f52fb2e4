#pragma once

#include "histoq/projector.hpp"
#include "histoq/state.hpp"

namespace histoq {

/// Entropy of a single-time set of alternatives, in nats:
/// S = -sum p log p + sum p log Tr[P], with p = |P psi|^2 and 0 log 0 := 0.
double entropy(const StateVector& psi, const ProjectiveDecomposition& decomposition);

}  // namespace histoq
