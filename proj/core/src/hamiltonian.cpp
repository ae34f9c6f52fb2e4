#include "histoq/hamiltonian.hpp"

namespace histoq {

Hamiltonian::Hamiltonian(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
        throw InvalidInput("Hamiltonian: matrix must be square");
    if (!is_hermitian(matrix_, 1e-12))
        throw InvalidInput("Hamiltonian: matrix is not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("Hamiltonian: eigendecomposition failed");
    eigvecs_ = solver.eigenvectors();
    eigvals_ = solver.eigenvalues();
}

Hamiltonian Hamiltonian::free(Eigen::Index dim) {
    return Hamiltonian(CMatrix::Zero(dim, dim));
}

CMatrix Hamiltonian::propagator(double t) const {
    CVector phases(eigvals_.size());
    for (Eigen::Index k = 0; k < eigvals_.size(); ++k)
        phases(k) = std::exp(cdouble(0.0, -eigvals_(k) * t));
    return eigvecs_ * phases.asDiagonal() * eigvecs_.adjoint();
}

CMatrix Hamiltonian::evolve_heisenberg(const CMatrix& op, double t) const {
    if (op.rows() != dim() || op.cols() != dim())
        throw InvalidInput("evolve_heisenberg: operator dimension mismatch");
    if (t == 0.0) return op;
    const CMatrix u = propagator(t);
    return u.adjoint() * op * u;
}

double Hamiltonian::commutator_norm(const CMatrix& op) const {
    return max_abs(CMatrix(op * matrix_ - matrix_ * op));
}

Projector heisenberg_projector(const Projector& p, const Hamiltonian& h, double t) {
    if (p.dim() != h.dim())
        throw InvalidInput("heisenberg_projector: dimension mismatch");
    CMatrix m = h.evolve_heisenberg(p.matrix(), t);
    m = 0.5 * (m + m.adjoint().eval());  // scrub rounding before invariant checks
    return Projector(std::move(m));
}

}  // namespace histoq
