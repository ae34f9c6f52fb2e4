#include "histoq/class_operator.hpp"

namespace histoq {

namespace {

void check_chain_times(const ChainProvenance& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (chain[i].time < chain[i - 1].time)
            throw InvalidInput("ClassOperator: chain provenance times must be non-decreasing");
}

}  // namespace

ClassOperator::ClassOperator(Operator matrix, Provenance provenance)
    : matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
    if (matrix_.rows() != matrix_.cols())
        throw InvalidInput("ClassOperator: matrix must be square");
    if (const auto* chain = std::get_if<ChainProvenance>(&provenance_)) {
        check_chain_times(*chain);
    } else if (const auto* sum = std::get_if<SumProvenance>(&provenance_)) {
        for (const ChainProvenance& c : sum->chains) check_chain_times(c);
    }
}

ClassOperator::ClassOperator(Operator matrix)
    : ClassOperator(std::move(matrix), OpaqueProvenance{}) {}

ClassOperator ClassOperator::identity(Eigen::Index dim) {
    return ClassOperator(CMatrix::Identity(dim, dim), ChainProvenance{});
}

HistorySet::HistorySet(std::vector<ClassOperator> members, std::vector<std::string> labels)
    : members_(std::move(members)), labels_(std::move(labels)) {
    if (members_.empty()) throw InvalidInput("HistorySet: empty");
    if (labels_.empty())
        for (std::size_t i = 0; i < members_.size(); ++i) labels_.push_back(std::to_string(i));
    if (labels_.size() != members_.size())
        throw InvalidInput("HistorySet: label count mismatch");
    const Eigen::Index d = members_.front().dim();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const ClassOperator& c : members_) {
        if (c.dim() != d) throw InvalidInput("HistorySet: mixed dimensions");
        sum += c.matrix();
    }
    if (max_abs(CMatrix(sum - CMatrix::Identity(d, d))) > kExhaustivenessTol)
        throw InvalidInput("HistorySet: class operators do not sum to identity within 1e-10");
}

ClassOperator chain_class_operator(std::span<const ChainStepSpec> steps, const Hamiltonian& h) {
    if (steps.empty()) throw InvalidInput("chain_class_operator: empty chain");
    const Eigen::Index d = h.dim();
    CMatrix product = CMatrix::Identity(d, d);
    ChainProvenance chain;
    double prev_time = 0.0;
    bool first = true;
    int step_index = 0;
    for (const ChainStepSpec& step : steps) {
        const ProjectiveDecomposition& dec = *step.decomposition;
        if (dec.dim() != d) throw InvalidInput("chain_class_operator: dimension mismatch");
        if (step.alternative < 0 || static_cast<std::size_t>(step.alternative) >= dec.size())
            throw InvalidInput("chain_class_operator: alternative index out of range");
        if (!first && step.time <= prev_time)
            throw InvalidInput("chain_class_operator: times must be strictly increasing");
        prev_time = step.time;
        first = false;
        const CMatrix p_t = h.evolve_heisenberg(dec[step.alternative].matrix(), step.time);
        product = p_t * product;  // later times leftmost
        chain.push_back({step_index++, step.alternative, step.time});
    }
    return ClassOperator(std::move(product), std::move(chain));
}

ClassOperator chain_class_operator(std::initializer_list<ChainStepSpec> steps, const Hamiltonian& h) {
    std::vector<ChainStepSpec> v(steps);
    return chain_class_operator(std::span<const ChainStepSpec>(v), h);
}

HistorySet full_chain_set(std::span<const TimedDecomposition> decompositions, const Hamiltonian& h,
                          std::size_t max_members) {
    if (decompositions.empty()) throw InvalidInput("full_chain_set: no decompositions");
    const Eigen::Index d = h.dim();

    std::size_t count = 1;
    double prev_time = 0.0;
    bool first = true;
    for (const TimedDecomposition& td : decompositions) {
        if (td.decomposition->dim() != d) throw InvalidInput("full_chain_set: dimension mismatch");
        if (!first && td.time <= prev_time)
            throw InvalidInput("full_chain_set: times must be strictly increasing");
        prev_time = td.time;
        first = false;
        if (count > max_members / td.decomposition->size())
            throw InvalidInput("full_chain_set: product size exceeds the configured cap");
        count *= td.decomposition->size();
    }

    // Heisenberg projectors, evolved once per (decomposition, alternative).
    std::vector<std::vector<CMatrix>> evolved(decompositions.size());
    for (std::size_t k = 0; k < decompositions.size(); ++k) {
        const ProjectiveDecomposition& dec = *decompositions[k].decomposition;
        evolved[k].reserve(dec.size());
        for (std::size_t a = 0; a < dec.size(); ++a)
            evolved[k].push_back(h.evolve_heisenberg(dec[a].matrix(), decompositions[k].time));
    }

    std::vector<ClassOperator> members;
    std::vector<std::string> labels;
    members.reserve(count);
    labels.reserve(count);

    std::vector<std::size_t> idx(decompositions.size(), 0);
    for (std::size_t n = 0; n < count; ++n) {
        CMatrix product = CMatrix::Identity(d, d);
        ChainProvenance chain;
        std::string label = "(";
        for (std::size_t k = 0; k < decompositions.size(); ++k) {
            product = evolved[k][idx[k]] * product;
            chain.push_back({static_cast<int>(k), static_cast<int>(idx[k]), decompositions[k].time});
        }
        for (std::size_t k = decompositions.size(); k-- > 0;) {
            label += decompositions[k].decomposition->labels()[idx[k]];
            if (k != 0) label += ",";
        }
        label += ")";
        members.emplace_back(std::move(product), std::move(chain));
        labels.push_back(std::move(label));

        // odometer increment, earliest decomposition fastest
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (++idx[k] < decompositions[k].decomposition->size()) break;
            idx[k] = 0;
        }
    }
    return HistorySet(std::move(members), std::move(labels));
}

HistorySet full_chain_set(std::initializer_list<TimedDecomposition> decompositions,
                          const Hamiltonian& h, std::size_t max_members) {
    std::vector<TimedDecomposition> v(decompositions);
    return full_chain_set(std::span<const TimedDecomposition>(v), h, max_members);
}

}  // namespace histoq
