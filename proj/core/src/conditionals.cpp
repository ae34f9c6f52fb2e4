#include "histoq/conditionals.hpp"

namespace histoq {

double conditional_probability(const StateVector& psi, const ClassOperator& c_joint,
                               const ClassOperator& c_cond, double floor) {
    const double p_cond = candidate_probability(psi, c_cond);
    if (std::abs(p_cond) <= floor)
        throw InvalidInput("conditional_probability: conditioning probability is (near-)zero");
    return candidate_probability(psi, c_joint) / p_cond;
}

std::vector<ChainFutureRow> chain_future_probability(const StateVector& psi,
                                                     const HistorySet& future,
                                                     const HistorySet& past,
                                                     const ClassOperator& cond, double floor) {
    if (future.dim() != past.dim() || future.dim() != cond.dim())
        throw InvalidInput("chain_future_probability: dimension mismatch");
    const double p_cond = candidate_probability(psi, cond);
    if (std::abs(p_cond) <= floor)
        throw InvalidInput("chain_future_probability: conditioning probability is (near-)zero");

    std::vector<ChainFutureRow> rows;
    rows.reserve(future.size());
    for (std::size_t g = 0; g < future.size(); ++g) {
        const CMatrix future_cond = future[g].matrix() * cond.matrix();
        const double direct = candidate_probability(psi, Operator(future_cond)) / p_cond;

        double chained = 0.0;
        for (std::size_t b = 0; b < past.size(); ++b) {
            const CMatrix cond_past = cond.matrix() * past[b].matrix();
            const double p_cond_past = candidate_probability(psi, Operator(cond_past));
            if (std::abs(p_cond_past) <= floor)
                throw InvalidInput(
                    "chain_future_probability: intermediate conditioning probability is (near-)zero");
            const double p_triple =
                candidate_probability(psi, Operator(future[g].matrix() * cond_past));
            chained += (p_triple / p_cond_past) * (p_cond_past / p_cond);
        }
        rows.push_back({future.labels()[g], direct, chained});
    }
    return rows;
}

double prediction_conditional(const StateVector& psi, std::span<const ChainStepSpec> realized,
                              std::span<const ChainStepSpec> future, const Hamiltonian& h) {
    if (realized.empty()) throw InvalidInput("prediction_conditional: empty realized chain");
    const ClassOperator realized_chain = chain_class_operator(realized, h);
    CVector branch = realized_chain.matrix() * psi.amplitudes();
    const double norm = branch.norm();
    if (norm < 1e-12) throw InvalidInput("prediction_conditional: realized branch has zero norm");
    branch /= norm;
    if (future.empty()) return 1.0;
    const ClassOperator future_chain = chain_class_operator(future, h);
    return (future_chain.matrix() * branch).squaredNorm();
}

}  // namespace histoq
