#include "histoq/partition.hpp"

#include <algorithm>

namespace histoq {

namespace {

void check_partition(const Partition& partition, std::size_t n) {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    if (partition.blocks.empty()) throw InvalidInput("Partition: no blocks");
    for (const auto& block : partition.blocks) {
        if (block.empty()) throw InvalidInput("Partition: empty block");
        for (int i : block) {
            if (i < 0 || static_cast<std::size_t>(i) >= n)
                throw InvalidInput("Partition: index out of range");
            if (seen[static_cast<std::size_t>(i)]) throw InvalidInput("Partition: blocks overlap");
            seen[static_cast<std::size_t>(i)] = 1;
            ++covered;
        }
    }
    if (covered != n) throw InvalidInput("Partition: blocks do not cover all members");
}

}  // namespace

HistorySet coarse_grain(const HistorySet& set, const Partition& partition) {
    check_partition(partition, set.size());
    std::vector<ClassOperator> members;
    std::vector<std::string> labels;
    members.reserve(partition.blocks.size());
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        const auto& block = partition.blocks[b];
        CMatrix sum = CMatrix::Zero(set.dim(), set.dim());
        SumProvenance prov;
        bool all_chains = true;
        for (int i : block) {
            const ClassOperator& c = set[static_cast<std::size_t>(i)];
            sum += c.matrix();
            if (const auto* chain = std::get_if<ChainProvenance>(&c.provenance()))
                prov.chains.push_back(*chain);
            else if (const auto* s = std::get_if<SumProvenance>(&c.provenance()))
                prov.chains.insert(prov.chains.end(), s->chains.begin(), s->chains.end());
            else
                all_chains = false;
        }
        if (all_chains)
            members.emplace_back(std::move(sum), std::move(prov));
        else
            members.emplace_back(std::move(sum), OpaqueProvenance{});

        if (b < partition.block_labels.size()) {
            labels.push_back(partition.block_labels[b]);
        } else {
            std::string label;
            for (std::size_t k = 0; k < block.size(); ++k) {
                label += set.labels()[static_cast<std::size_t>(block[k])];
                if (k + 1 < block.size()) label += "+";
            }
            labels.push_back(std::move(label));
        }
    }
    return HistorySet(std::move(members), std::move(labels));
}

SumRuleReport verify_sum_rules(const StateVector& psi, const HistorySet& set,
                               const Partition& partition, double tol) {
    const HistorySet coarse = coarse_grain(set, partition);
    SumRuleReport report;
    report.residuals.reserve(partition.blocks.size());
    report.max_residual = 0.0;
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        double fine_sum = 0.0;
        for (int i : partition.blocks[b])
            fine_sum += candidate_probability(psi, set[static_cast<std::size_t>(i)]);
        const double coarse_p = candidate_probability(psi, coarse[b]);
        const double res = std::abs(coarse_p - fine_sum);
        report.residuals.push_back(res);
        report.max_residual = std::max(report.max_residual, res);
    }
    report.pass = report.max_residual < tol;
    return report;
}

}  // namespace histoq
