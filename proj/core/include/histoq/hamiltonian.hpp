#pragma once

#include <Eigen/Eigenvalues>

#include "histoq/errors.hpp"
#include "histoq/linalg.hpp"
#include "histoq/projector.hpp"

namespace histoq {

/// Hermitian generator of the dynamics (energy units, hbar = 1).
/// The eigendecomposition is computed once at construction and reused for every
/// evolution time, which keeps e^{iHt} unitary to rounding.
class Hamiltonian {
public:
    explicit Hamiltonian(CMatrix matrix);

    /// Free evolution (H = 0).
    static Hamiltonian free(Eigen::Index dim);

    const CMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    CMatrix propagator(double t) const;             // e^{-iHt}
    CMatrix evolve_heisenberg(const CMatrix& op, double t) const;  // e^{iHt} op e^{-iHt}

    /// Max-norm of the commutator [op, H]; zero for conserved quantities.
    double commutator_norm(const CMatrix& op) const;

private:
    CMatrix matrix_;
    CMatrix eigvecs_;
    Eigen::VectorXd eigvals_;
};

/// Heisenberg-picture projector e^{iHt} P e^{-iHt}.
Projector heisenberg_projector(const Projector& p, const Hamiltonian& h, double t);

}  // namespace histoq
