#include "histoq/records.hpp"

namespace histoq {

RecordSet records_from_branches(const StateVector& psi, const HistorySet& set,
                                double branch_floor) {
    const Eigen::Index d = set.dim();
    std::vector<Projector> rows;
    std::vector<std::string> labels;
    CMatrix covered = CMatrix::Zero(d, d);
    for (std::size_t a = 0; a < set.size(); ++a) {
        const CVector branch = set[a].matrix() * psi.amplitudes();
        const double norm = branch.norm();
        if (norm > branch_floor) {
            const CVector unit = branch / norm;
            CMatrix p = unit * unit.adjoint();
            p = 0.5 * (p + p.adjoint().eval());
            covered += p;
            rows.emplace_back(std::move(p));
        } else {
            rows.push_back(Projector::zero(d));
        }
        labels.push_back(set.labels()[a]);
    }
    CMatrix complement = CMatrix::Identity(d, d) - covered;
    complement = 0.5 * (complement + complement.adjoint().eval());
    const std::size_t aligned = rows.size();
    if (complement.trace().real() > 0.5) {
        rows.emplace_back(std::move(complement));  // throws if branches were not orthogonal
        labels.push_back("complement");
    }
    return RecordSet{ProjectiveDecomposition(std::move(rows), std::move(labels)), aligned};
}

RecordReport verify_records(const StateVector& psi, const HistorySet& set, const RecordSet& records,
                            double tol) {
    if (records.aligned_count != set.size())
        throw InvalidInput("verify_records: record/history cardinality mismatch");
    if (records.decomposition.dim() != set.dim())
        throw InvalidInput("verify_records: dimension mismatch");

    RecordReport report{0.0, false, 0.0, false};
    for (std::size_t b = 0; b < records.decomposition.size(); ++b) {
        for (std::size_t a = 0; a < set.size(); ++a) {
            const CVector branch = set[a].matrix() * psi.amplitudes();
            CVector expected = (b == a) ? branch : CVector(CVector::Zero(set.dim()));
            const double res =
                (records.decomposition[b].matrix() * branch - expected).norm();
            report.max_correlation_residual = std::max(report.max_correlation_residual, res);
        }
    }
    report.pass = report.max_correlation_residual < tol;
    if (report.pass) {
        report.probabilities_in_range = true;
        for (std::size_t a = 0; a < set.size(); ++a) {
            const double p = candidate_probability(psi, set[a]);
            const double record_p = psi.amplitudes()
                                        .dot(records.decomposition[a].matrix() * psi.amplitudes())
                                        .real();
            report.probability_residual =
                std::max(report.probability_residual, std::abs(p - record_p));
            if (p < -tol || p > 1.0 + tol) report.probabilities_in_range = false;
        }
    }
    return report;
}

}  // namespace histoq
