#pragma once

#include <stdexcept>
#include <string>

namespace histoq {

/// Malformed input: dimension mismatches, broken invariants, bad configuration.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed to reach its accuracy target.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace histoq
