#include "histoq/probability.hpp"

namespace histoq {

namespace {

void check_dims(const StateVector& psi, Eigen::Index op_dim, const char* where) {
    if (psi.dim() != op_dim) throw InvalidInput(std::string(where) + ": dimension mismatch");
}

}  // namespace

double candidate_probability(const StateVector& psi, const Operator& c) {
    check_dims(psi, c.rows(), "candidate_probability");
    const CVector& v = psi.amplitudes();
    const cdouble bra_c_ket = v.dot(c * v);
    // Hermitian-part route; agreement is a structural self-check.
    const double hermitian_form = 0.5 * v.dot((c * v)).real() + 0.5 * v.dot(c.adjoint() * v).real();
    const double re = bra_c_ket.real();
    if (std::abs(re - hermitian_form) > 1e-12 * std::max(1.0, std::abs(re)))
        throw NumericalFailure("candidate_probability: the two defining formulas disagree");
    return re;
}

double candidate_probability(const StateVector& psi, const ClassOperator& c) {
    return candidate_probability(psi, c.matrix());
}

double candidate_probability_imag(const StateVector& psi, const ClassOperator& c) {
    check_dims(psi, c.dim(), "candidate_probability_imag");
    const CVector& v = psi.amplitudes();
    return v.dot(c.matrix() * v).imag();
}

CVector branch_state(const StateVector& psi, const ClassOperator& c) {
    check_dims(psi, c.dim(), "branch_state");
    return c.matrix() * psi.amplitudes();
}

cdouble decoherence_functional(const StateVector& psi, const ClassOperator& c_alpha,
                               const ClassOperator& c_beta) {
    check_dims(psi, c_alpha.dim(), "decoherence_functional");
    if (c_alpha.dim() != c_beta.dim())
        throw InvalidInput("decoherence_functional: operator dimension mismatch");
    const CVector a = c_alpha.matrix() * psi.amplitudes();
    const CVector b = c_beta.matrix() * psi.amplitudes();
    return a.dot(b);  // Eigen dot is conjugate-linear in the first argument
}

CMatrix decoherence_matrix(const StateVector& psi, const HistorySet& set) {
    check_dims(psi, set.dim(), "decoherence_matrix");
    const std::size_t n = set.size();
    CMatrix branches(psi.dim(), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        branches.col(static_cast<Eigen::Index>(i)) = set[i].matrix() * psi.amplitudes();
    return branches.adjoint() * branches;
}

}  // namespace histoq
