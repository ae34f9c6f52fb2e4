#pragma once

#include <Eigen/Dense>
#include <complex>

namespace histoq {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Any square complex matrix acting on the Hilbert space.
using Operator = CMatrix;

inline double max_abs(const CMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const CVector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& m, double tol) {
    return max_abs(CMatrix(m - m.adjoint())) <= tol;
}

}  // namespace histoq
