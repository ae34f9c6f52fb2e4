#include "histoq/classify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace histoq {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::MediumDecoherent: return "MD";
        case Verdict::RealLinearPositive: return "RLP";
        case Verdict::LinearPositive: return "LP";
        case Verdict::ExtendedOnly: return "EP_ONLY";
    }
    return "?";
}

Classification classify_set(const StateVector& psi, const HistorySet& set,
                            const ToleranceSpec& tol) {
    const std::size_t n = set.size();
    Classification out;
    out.tolerances = tol;

    const CMatrix d = decoherence_matrix(psi, set);

    out.probabilities.resize(n);
    out.imag_parts.resize(n);
    out.branch_norm_probabilities.resize(n);
    double sum_p = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        const cdouble amp = psi.amplitudes().dot(set[a].matrix() * psi.amplitudes());
        out.probabilities[a] = amp.real();
        out.imag_parts[a] = amp.imag();
        out.branch_norm_probabilities[a] = d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real();
        sum_p += amp.real();
    }
    out.sum_residual = std::abs(1.0 - sum_p);

    out.md_residual = 0.0;
    out.md_witness.reset();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const double mod = std::abs(d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
            if (!out.md_witness || mod > out.md_residual) {
                out.md_residual = mod;
                out.md_witness = std::pair<int, int>(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }

    out.rlp_residual = 0.0;
    out.lp_violation = out.probabilities[0];
    out.rlp_witness = 0;
    out.lp_witness = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (std::abs(out.imag_parts[a]) > out.rlp_residual) {
            out.rlp_residual = std::abs(out.imag_parts[a]);
            out.rlp_witness = static_cast<int>(a);
        }
        if (out.probabilities[a] < out.lp_violation) {
            out.lp_violation = out.probabilities[a];
            out.lp_witness = static_cast<int>(a);
        }
    }

    const bool lp_holds = out.lp_violation >= -tol.lp;
    if (out.md_residual <= tol.md)
        out.verdict = Verdict::MediumDecoherent;
    else if (lp_holds && out.rlp_residual <= tol.rlp)
        out.verdict = Verdict::RealLinearPositive;
    else if (lp_holds)
        out.verdict = Verdict::LinearPositive;
    else
        out.verdict = Verdict::ExtendedOnly;
    return out;
}

std::vector<double> hermitian_product_eigenvalues(const Projector& pa, const Projector& pb) {
    if (pa.dim() != pb.dim())
        throw InvalidInput("hermitian_product_eigenvalues: dimension mismatch");
    const CMatrix g = pa.matrix() * pb.matrix() + pb.matrix() * pa.matrix();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("hermitian_product_eigenvalues: eigensolver failed");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace histoq
