#include "histoq/conservation.hpp"

namespace histoq {

ConservationReport check_conservation(const StateVector& psi, const Hamiltonian& h,
                                      const ProjectiveDecomposition& conserved,
                                      std::span<const TimedDecomposition> intermediate,
                                      double t1, double t2, double tol) {
    if (conserved.dim() != h.dim())
        throw InvalidInput("check_conservation: dimension mismatch");
    for (const Projector& p : conserved.projectors())
        if (h.commutator_norm(p.matrix()) > tol)
            throw InvalidInput("check_conservation: decomposition does not commute with H");
    for (const TimedDecomposition& td : intermediate)
        if (td.time <= t1 || td.time >= t2)
            throw InvalidInput("check_conservation: intermediate times must lie in (t1, t2)");

    std::vector<TimedDecomposition> all;
    all.push_back({&conserved, t1});
    all.insert(all.end(), intermediate.begin(), intermediate.end());
    all.push_back({&conserved, t2});
    HistorySet set = full_chain_set(std::span<const TimedDecomposition>(all), h);

    const std::size_t m = conserved.size();
    std::size_t beta_count = 1;
    for (const TimedDecomposition& td : intermediate) beta_count *= td.decomposition->size();

    // Member n corresponds to indices (j, beta, j') with j fastest (odometer
    // order of full_chain_set: earliest decomposition fastest).
    std::vector<double> p(set.size());
    for (std::size_t n = 0; n < set.size(); ++n) p[n] = candidate_probability(psi, set[n]);

    std::vector<double> p_j(m);
    for (std::size_t j = 0; j < m; ++j) {
        const CVector v = conserved[j].matrix() * psi.amplitudes();
        p_j[j] = v.squaredNorm();
    }

    ConservationReport report{0.0, 0.0, classify_set(psi, set), false, std::move(set)};
    for (std::size_t jp = 0; jp < m; ++jp) {
        for (std::size_t j = 0; j < m; ++j) {
            double sum_beta = 0.0;
            for (std::size_t b = 0; b < beta_count; ++b) {
                const std::size_t n = j + m * (b + beta_count * jp);
                sum_beta += p[n];
                if (jp != j)
                    report.max_cross_term = std::max(report.max_cross_term, std::abs(p[n]));
            }
            const double expected = (jp == j) ? p_j[j] : 0.0;
            report.sum_rule_residual =
                std::max(report.sum_rule_residual, std::abs(sum_beta - expected));
        }
    }
    report.exact_conservation_verified =
        report.classification.is_lp() && report.max_cross_term <= tol;
    return report;
}

}  // namespace histoq
