#pragma once

#include <span>
#include <string>
#include <vector>

#include "histoq/errors.hpp"
#include "histoq/linalg.hpp"

namespace histoq {

/// Orthogonal projector. Hermitian and idempotent to 1e-12; rank = round(trace).
class Projector {
public:
    static constexpr double kTol = 1e-12;

    explicit Projector(CMatrix matrix);

    /// Rank-0 projector (zero matrix). Used for record rows of zero branches.
    static Projector zero(Eigen::Index dim);
    static Projector identity(Eigen::Index dim);

    const CMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    int rank() const { return rank_; }

private:
    CMatrix matrix_;
    int rank_ = 0;
};

/// Orthogonal projector onto the span of the given vectors.
/// Re-orthonormalizes with modified Gram-Schmidt, twice, so the result passes
/// the Projector invariants even for ill-conditioned input.
Projector make_projector(std::span<const CVector> basis_vectors);
Projector make_projector(std::initializer_list<CVector> basis_vectors);

/// Exhaustive set of exclusive alternatives at one time:
/// sum of projectors = identity, mutually orthogonal (both to 1e-12).
class ProjectiveDecomposition {
public:
    /// Labels default to "0", "1", ...
    explicit ProjectiveDecomposition(std::vector<Projector> projectors,
                                     std::vector<std::string> labels = {});

    /// The trivial one-member decomposition {I}.
    static ProjectiveDecomposition identity(Eigen::Index dim);

    /// Rank-1 decomposition from an orthonormal basis given as matrix columns.
    static ProjectiveDecomposition from_orthonormal_basis(const CMatrix& basis,
                                                          std::vector<std::string> labels = {});

    std::size_t size() const { return projectors_.size(); }
    Eigen::Index dim() const { return projectors_.front().dim(); }
    const Projector& operator[](std::size_t i) const { return projectors_[i]; }
    const std::vector<Projector>& projectors() const { return projectors_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<Projector> projectors_;
    std::vector<std::string> labels_;
};

}  // namespace histoq
