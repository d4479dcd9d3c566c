#include "numrad/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "numrad/errors.hpp"
#include "numrad/lambda_core.hpp"

namespace numrad {

bool all_finite(const CMatrix& M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      const cplx& z = M(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

void ensure_finite(const CMatrix& M, const char* what) {
  if (!all_finite(M)) throw DomainError(std::string(what) + ": non-finite entry");
}

void ensure_square(const CMatrix& M, const char* what) {
  if (M.rows() != M.cols())
    throw DimensionMismatch(std::string(what) + ": matrix must be square, got " +
                            std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

HermEig herm_eig(const CMatrix& H) {
  ensure_square(H, "herm_eig");
  ensure_finite(H, "herm_eig");
  const double frob = H.norm();
  const double herm_res = (H - H.adjoint()).norm();
  if (herm_res > kHermTol * (1.0 + frob))
    throw NotHermitian("herm_eig: ||H - H^*||_F = " + std::to_string(herm_res));
  CMatrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) throw NumericalFailure("herm_eig: solver did not converge");
  return HermEig{es.eigenvalues(), es.eigenvectors()};
}

HermEig psd_eig(const CMatrix& H) {
  HermEig eig = herm_eig(H);
  const int n = static_cast<int>(eig.eigenvalues.size());
  const double lmax = n > 0 ? std::max(0.0, eig.eigenvalues(n - 1)) : 0.0;
  const double cut = kPsdClampTol * lmax;
  for (int i = 0; i < n; ++i) {
    double& l = eig.eigenvalues(i);
    if (l < -cut)
      throw IndefiniteInput("psd input has eigenvalue " + std::to_string(l) +
                            " below -" + std::to_string(cut));
    if (l < 0.0) l = 0.0;
  }
  return eig;
}

HermEig gram_eig(const CMatrix& X) {
  ensure_square(X, "gram_eig");
  return psd_eig(X.adjoint() * X);
}

CMatrix apply_spectral_fn(const HermEig& eig, const std::function<double(double)>& f) {
  const int n = static_cast<int>(eig.eigenvalues.size());
  RVector fl(n);
  for (int i = 0; i < n; ++i) {
    fl(i) = f(eig.eigenvalues(i));
    if (!std::isfinite(fl(i)))
      throw DomainError("apply_spectral_fn: f(" + std::to_string(eig.eigenvalues(i)) +
                        ") is not finite");
  }
  return eig.eigenvectors * fl.asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix apply_spectral_fn(const CMatrix& H, const std::function<double(double)>& f) {
  return apply_spectral_fn(psd_eig(H), f);
}

CMatrix psd_power(const HermEig& psd, double q) {
  const int n = static_cast<int>(psd.eigenvalues.size());
  RVector fl(n);
  for (int i = 0; i < n; ++i) {
    const double l = std::max(0.0, psd.eigenvalues(i));
    fl(i) = (l == 0.0 && q == 0.0) ? 1.0 : std::pow(l, q);
  }
  return psd.eigenvectors * fl.asDiagonal() * psd.eigenvectors.adjoint();
}

CMatrix sqrt_psd(const CMatrix& H) { return psd_power(psd_eig(H), 0.5); }

CMatrix abs_value(const CMatrix& X) { return psd_power(gram_eig(X), 0.5); }

double op_norm(const CMatrix& T) {
  ensure_finite(T, "op_norm");
  if (T.rows() == 0 || T.cols() == 0) return 0.0;
  detail::HermLambda work;
  work.set(T.adjoint() * T);
  return std::sqrt(std::max(0.0, work.lambda_extremes().second));
}

double smallest_singular(const CMatrix& T) {
  ensure_finite(T, "smallest_singular");
  if (T.rows() == 0 || T.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(T);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace numrad
