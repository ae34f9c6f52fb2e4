#pragma once

#include "histoq/errors.hpp"
#include "histoq/linalg.hpp"

namespace histoq {

/// Pure state of the closed system. Unit norm to 1e-12, fixed once constructed.
class StateVector {
public:
    explicit StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() < 1) throw InvalidInput("StateVector: dimension must be >= 1");
        const double norm = amplitudes_.norm();
        if (std::abs(norm - 1.0) > 1e-12)
            throw InvalidInput("StateVector: norm deviates from 1 by more than 1e-12");
    }

    /// Normalizes the input first; rejects (near-)zero vectors.
    static StateVector normalized(const CVector& v) {
        const double norm = v.norm();
        if (norm < 1e-14) throw InvalidInput("StateVector: cannot normalize a zero vector");
        return StateVector(CVector(v / norm));
    }

    const CVector& amplitudes() const { return amplitudes_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

private:
    CVector amplitudes_;
};

}  // namespace histoq
