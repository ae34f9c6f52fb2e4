#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "histoq/probability.hpp"

namespace histoq {

/// Absolute thresholds for the decoherence-condition lattice.
struct ToleranceSpec {
    double md = 1e-8;    // max off-diagonal |D(a,b)|
    double rlp = 1e-8;   // max |Im<Psi|C|Psi>|
    double lp = 1e-10;   // -min p(a)
};

enum class Verdict {
    MediumDecoherent,     // MD
    RealLinearPositive,   // RLP
    LinearPositive,       // LP
    ExtendedOnly,         // EP_ONLY: candidate probabilities only
};

std::string verdict_name(Verdict v);

/// Verdict plus the residuals that produced it. Residuals and witnesses are
/// reported even on success so near-threshold sets are visible.
struct Classification {
    Verdict verdict;
    double md_residual;    // max |D(a,b)|, a != b (0 for singleton sets)
    double rlp_residual;   // max |Im<Psi|C_a|Psi>|
    double lp_violation;   // min over a of p(a)
    double sum_residual;   // |1 - sum p(a)|
    ToleranceSpec tolerances;
    std::optional<std::pair<int, int>> md_witness;  // argmax pair
    int rlp_witness = 0;                            // argmax index
    int lp_witness = 0;                             // argmin index
    std::vector<double> probabilities;
    std::vector<double> imag_parts;
    std::vector<double> branch_norm_probabilities;  // |C_a Psi|^2

    bool is_lp() const { return verdict != Verdict::ExtendedOnly; }
};

/// Classifies a history set against the condition lattice:
/// MD if every off-diagonal |D| <= tol.md; else RLP if LP holds and every
/// |Im| <= tol.rlp; else LP if min p >= -tol.lp; else extended-only.
Classification classify_set(const StateVector& psi, const HistorySet& set,
                            const ToleranceSpec& tol = {});

/// Ascending eigenvalues of the Hermitian product G = Pa Pb + Pb Pa.
/// For non-commuting projectors the smallest is strictly negative; for a
/// rank-1 pair with overlap c the nonzero eigenvalues are c^2 - c and c^2 + c.
std::vector<double> hermitian_product_eigenvalues(const Projector& pa, const Projector& pb);

}  // namespace histoq
