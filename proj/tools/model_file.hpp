#pragma once

#include <string>
#include <vector>

#include "histoq/class_operator.hpp"
#include "histoq/state.hpp"

namespace histoq::cli {

/// A classification problem loaded from JSON: a state, an optional
/// Hamiltonian (free when omitted), and timed projective decompositions.
/// Complex numbers are [re, im] pairs throughout.
struct ModelFile {
    StateVector psi;
    Hamiltonian h;
    std::vector<ProjectiveDecomposition> decompositions;
    std::vector<double> times;
    std::vector<std::string> decomposition_labels;

    HistorySet build_history_set() const;
};

/// Parses and validates a model file; throws InvalidInput with a field path
/// on semantic errors and with the parser's position on syntax errors.
ModelFile load_model_file(const std::string& path);

}  // namespace histoq::cli
