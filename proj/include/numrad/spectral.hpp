#pragma once

#include <functional>

#include "numrad/types.hpp"

namespace numrad {

/// Hermitian eigendecomposition, eigenvalues ascending, eigenvectors unitary.
/// Satisfies || V diag(lambda) V^* - H ||_F <= 1e-12 (1 + ||H||_F) and
/// || V^* V - I ||_F <= 1e-12 n.
struct HermEig {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// Tolerance for accepting a matrix as Hermitian: ||H - H^*||_F <= tol (1 + ||H||_F).
inline constexpr double kHermTol = 1e-10;

/// Relative eigenvalue threshold below which negative eigenvalues of a nominally
/// PSD matrix are treated as roundoff and clamped to zero.
inline constexpr double kPsdClampTol = 1e-10;

/// Factorizes (H + H^*)/2. Throws NotHermitian when the symmetrization residual
/// exceeds kHermTol, NumericalFailure when the solver does not converge.
HermEig herm_eig(const CMatrix& H);

/// Eigendecomposition of a Hermitian PSD matrix with roundoff negatives clamped
/// to zero. Throws IndefiniteInput when lambda_min < -kPsdClampTol * lambda_max.
HermEig psd_eig(const CMatrix& H);

/// Eigendecomposition of X^* X (clamped PSD); carries |X| = V diag(sqrt(lambda)) V^*.
HermEig gram_eig(const CMatrix& X);

/// V diag(f(lambda)) V^* from a precomputed decomposition. Throws DomainError
/// if any f(lambda_i) is non-finite.
CMatrix apply_spectral_fn(const HermEig& eig, const std::function<double(double)>& f);
CMatrix apply_spectral_fn(const CMatrix& H, const std::function<double(double)>& f);

/// V diag(lambda^q) V^* for a clamped PSD decomposition.
CMatrix psd_power(const HermEig& psd, double q);

/// Principal PSD square root. ||S^2 - H||_F <= 1e-10 (1 + ||H||_F).
CMatrix sqrt_psd(const CMatrix& H);

/// |X| = (X^* X)^{1/2} for square X.
CMatrix abs_value(const CMatrix& X);

/// Largest singular value.
double op_norm(const CMatrix& T);

/// Smallest singular value.
double smallest_singular(const CMatrix& T);

}  // namespace numrad
