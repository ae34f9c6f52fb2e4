#pragma once

#include <string>
#include <variant>
#include <vector>

#include "histoq/errors.hpp"
#include "histoq/hamiltonian.hpp"
#include "histoq/linalg.hpp"
#include "histoq/projector.hpp"

namespace histoq {

/// One event of a history: alternative `alternative` of decomposition
/// `decomposition` at time `time`. Decomposition indices refer to whatever
/// list the chain was built from.
struct ChainStep {
    int decomposition;
    int alternative;
    double time;
};

using ChainProvenance = std::vector<ChainStep>;  // times non-decreasing

struct SumProvenance {
    std::vector<ChainProvenance> chains;
};

struct OpaqueProvenance {};

using Provenance = std::variant<ChainProvenance, SumProvenance, OpaqueProvenance>;

/// Operator representing one coarse-grained history. The matrix itself is
/// unconstrained (class operators need not be projectors); the provenance
/// records how it was assembled.
class ClassOperator {
public:
    ClassOperator(Operator matrix, Provenance provenance);

    /// Opaque class operator from a bare matrix.
    explicit ClassOperator(Operator matrix);

    static ClassOperator identity(Eigen::Index dim);

    const Operator& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const Provenance& provenance() const { return provenance_; }
    bool is_chain() const { return std::holds_alternative<ChainProvenance>(provenance_); }

private:
    Operator matrix_;
    Provenance provenance_;
};

/// Exhaustive set of histories: class operators summing to the identity
/// within 1e-10.
class HistorySet {
public:
    HistorySet(std::vector<ClassOperator> members, std::vector<std::string> labels = {});

    std::size_t size() const { return members_.size(); }
    Eigen::Index dim() const { return members_.front().dim(); }
    const ClassOperator& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<ClassOperator>& members() const { return members_; }
    const std::vector<std::string>& labels() const { return labels_; }

    static constexpr double kExhaustivenessTol = 1e-10;

private:
    std::vector<ClassOperator> members_;
    std::vector<std::string> labels_;
};

/// One step of a chain under construction.
struct ChainStepSpec {
    const ProjectiveDecomposition* decomposition;
    int alternative;
    double time;
};

/// Time-ordered chain of Heisenberg projectors; later times act leftmost.
/// Times must be strictly increasing.
ClassOperator chain_class_operator(std::span<const ChainStepSpec> steps, const Hamiltonian& h);
ClassOperator chain_class_operator(std::initializer_list<ChainStepSpec> steps, const Hamiltonian& h);

/// A decomposition applied at one time, for building full chain sets.
struct TimedDecomposition {
    const ProjectiveDecomposition* decomposition;
    double time;
};

/// Cartesian product of alternatives over the given decompositions.
/// Labels are "(l_n,...,l_1)" with the latest alternative first, matching the
/// operator ordering. Throws if the product would exceed `max_members`.
HistorySet full_chain_set(std::span<const TimedDecomposition> decompositions, const Hamiltonian& h,
                          std::size_t max_members = 1000000);
HistorySet full_chain_set(std::initializer_list<TimedDecomposition> decompositions,
                          const Hamiltonian& h, std::size_t max_members = 1000000);

}  // namespace histoq
