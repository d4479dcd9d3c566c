#pragma once

#include <Eigen/Dense>
#include <complex>

namespace numrad {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Conjugate transpose, evaluated eagerly. adjoint(adjoint(T)) == T exactly.
inline CMatrix adjoint(const CMatrix& T) { return T.adjoint(); }

bool all_finite(const CMatrix& M);

/// Throws DomainError naming `what` if any entry is NaN or infinite.
void ensure_finite(const CMatrix& M, const char* what);

void ensure_square(const CMatrix& M, const char* what);

}  // namespace numrad
