#include "histoq/entropy.hpp"

#include <cmath>

namespace histoq {

double entropy(const StateVector& psi, const ProjectiveDecomposition& decomposition) {
    if (psi.dim() != decomposition.dim()) throw InvalidInput("entropy: dimension mismatch");
    double s = 0.0;
    for (const Projector& p : decomposition.projectors()) {
        const double weight = (p.matrix() * psi.amplitudes()).squaredNorm();
        if (weight <= 0.0) continue;  // 0 log 0 = 0
        s += -weight * std::log(weight) + weight * std::log(static_cast<double>(p.rank()));
    }
    return s;
}

}  // namespace histoq
