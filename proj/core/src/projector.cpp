#include "histoq/projector.hpp"

#include <cmath>

namespace histoq {

Projector::Projector(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
        throw InvalidInput("Projector: matrix must be square");
    if (!is_hermitian(matrix_, kTol))
        throw InvalidInput("Projector: matrix is not Hermitian within 1e-12");
    if (max_abs(CMatrix(matrix_ * matrix_ - matrix_)) > kTol)
        throw InvalidInput("Projector: matrix is not idempotent within 1e-12");
    const double tr = matrix_.trace().real();
    rank_ = static_cast<int>(std::llround(tr));
    if (std::abs(tr - rank_) > 1e-9)
        throw InvalidInput("Projector: trace is not close to an integer");
}

Projector Projector::zero(Eigen::Index dim) {
    return Projector(CMatrix::Zero(dim, dim));
}

Projector Projector::identity(Eigen::Index dim) {
    return Projector(CMatrix::Identity(dim, dim));
}

namespace {

// Modified Gram-Schmidt, one sweep. Throws on rank deficiency.
std::vector<CVector> mgs_sweep(const std::vector<CVector>& in) {
    std::vector<CVector> out;
    out.reserve(in.size());
    for (const CVector& raw : in) {
        CVector v = raw;
        for (const CVector& u : out) v -= u.dot(v) * u;
        const double norm = v.norm();
        if (norm < 1e-10)
            throw InvalidInput("make_projector: input vectors are linearly dependent beyond 1e-10");
        out.push_back(v / norm);
    }
    return out;
}

}  // namespace

Projector make_projector(std::span<const CVector> basis_vectors) {
    if (basis_vectors.empty()) throw InvalidInput("make_projector: no vectors given");
    const Eigen::Index dim = basis_vectors.front().size();
    for (const CVector& v : basis_vectors)
        if (v.size() != dim) throw InvalidInput("make_projector: vectors differ in dimension");

    std::vector<CVector> vs(basis_vectors.begin(), basis_vectors.end());
    vs = mgs_sweep(mgs_sweep(vs));

    CMatrix p = CMatrix::Zero(dim, dim);
    for (const CVector& u : vs) p += u * u.adjoint();
    p = 0.5 * (p + p.adjoint().eval());
    return Projector(std::move(p));
}

Projector make_projector(std::initializer_list<CVector> basis_vectors) {
    std::vector<CVector> vs(basis_vectors);
    return make_projector(std::span<const CVector>(vs));
}

ProjectiveDecomposition::ProjectiveDecomposition(std::vector<Projector> projectors,
                                                 std::vector<std::string> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (projectors_.empty()) throw InvalidInput("ProjectiveDecomposition: empty");
    if (labels_.empty())
        for (std::size_t i = 0; i < projectors_.size(); ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != projectors_.size())
        throw InvalidInput("ProjectiveDecomposition: label count mismatch");
    const Eigen::Index d = projectors_.front().dim();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const Projector& p : projectors_) {
        if (p.dim() != d) throw InvalidInput("ProjectiveDecomposition: mixed dimensions");
        sum += p.matrix();
    }
    if (max_abs(CMatrix(sum - CMatrix::Identity(d, d))) > 1e-12)
        throw InvalidInput("ProjectiveDecomposition: projectors do not sum to identity within 1e-12");
    for (std::size_t a = 0; a < projectors_.size(); ++a)
        for (std::size_t b = a + 1; b < projectors_.size(); ++b)
            if (max_abs(CMatrix(projectors_[a].matrix() * projectors_[b].matrix())) > 1e-12)
                throw InvalidInput("ProjectiveDecomposition: projectors are not mutually orthogonal");
}

ProjectiveDecomposition ProjectiveDecomposition::identity(Eigen::Index dim) {
    return ProjectiveDecomposition({Projector::identity(dim)}, {"I"});
}

ProjectiveDecomposition ProjectiveDecomposition::from_orthonormal_basis(const CMatrix& basis,
                                                                        std::vector<std::string> labels) {
    std::vector<Projector> ps;
    ps.reserve(static_cast<std::size_t>(basis.cols()));
    for (Eigen::Index k = 0; k < basis.cols(); ++k)
        ps.push_back(make_projector({CVector(basis.col(k))}));
    return ProjectiveDecomposition(std::move(ps), std::move(labels));
}

}  // namespace histoq
