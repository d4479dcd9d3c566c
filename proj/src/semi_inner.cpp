#include "numrad/semi_inner.hpp"

#include <cmath>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {

CMatrix Weight::congruence(const CMatrix& T) const {
  require_dim(T, "congruence");
  CMatrix M = sqrtA * T * inv_sqrtA;
  if (strictly_pd) return M;
  return compressor * M * compressor.adjoint();
}

void Weight::require_pd(const char* who) const {
  if (!strictly_pd)
    throw SingularWeight(std::string(who) + ": weight must be strictly positive definite");
}

void Weight::require_dim(const CMatrix& T, const char* who) const {
  ensure_square(T, who);
  if (T.rows() != dim)
    throw DimensionMismatch(std::string(who) + ": operator is " + std::to_string(T.rows()) +
                            "x" + std::to_string(T.cols()) + ", weight dimension is " +
                            std::to_string(dim));
}

Weight make_weight(const CMatrix& A) {
  HermEig eig = herm_eig(A);  // throws NotHermitian on asymmetric input
  const int n = static_cast<int>(eig.eigenvalues.size());
  Weight W;
  W.dim = n;
  W.A = 0.5 * (A + A.adjoint());
  const double lmax = n > 0 ? std::max(0.0, eig.eigenvalues(n - 1)) : 0.0;
  W.rank_cut = 1e-10 * lmax;
  if (n > 0 && eig.eigenvalues(0) < -W.rank_cut)
    throw NegativeWeight("make_weight: lambda_min = " + std::to_string(eig.eigenvalues(0)) +
                         " below -" + std::to_string(W.rank_cut));
  W.strictly_pd = n > 0 && eig.eigenvalues(0) > W.rank_cut;

  RVector sq(n), isq(n);
  std::vector<int> retained;
  for (int i = 0; i < n; ++i) {
    const double l = std::max(0.0, eig.eigenvalues(i));
    sq(i) = std::sqrt(l);
    if (eig.eigenvalues(i) > W.rank_cut) {
      isq(i) = 1.0 / sq(i);
      retained.push_back(i);
    } else {
      isq(i) = 0.0;
    }
  }
  W.rank = static_cast<int>(retained.size());
  const CMatrix& V = eig.eigenvectors;
  W.sqrtA = V * sq.asDiagonal() * V.adjoint();
  W.inv_sqrtA = V * isq.asDiagonal() * V.adjoint();
  if (W.strictly_pd) {
    W.compressor = CMatrix::Identity(n, n);
  } else {
    W.compressor.resize(W.rank, n);
    for (int r = 0; r < W.rank; ++r) W.compressor.row(r) = V.col(retained[r]).adjoint();
  }
  return W;
}

CMatrix a_adjoint(const Weight& W, const CMatrix& T) {
  W.require_pd("a_adjoint");
  W.require_dim(T, "a_adjoint");
  const CMatrix inv_A = W.inv_sqrtA * W.inv_sqrtA;
  return inv_A * T.adjoint() * W.A;
}

double a_norm(const Weight& W, const CMatrix& T) {
  const CMatrix M = W.congruence(T);
  return M.rows() == 0 ? 0.0 : op_norm(M);
}

double a_min_norm(const Weight& W, const CMatrix& T) {
  const CMatrix M = W.congruence(T);
  return M.rows() == 0 ? 0.0 : smallest_singular(M);
}

double a_numerical_radius(const Weight& W, const CMatrix& T, const ThetaSweepConfig& cfg) {
  const CMatrix M = W.congruence(T);
  return M.rows() == 0 ? 0.0 : numerical_radius(M, cfg);
}

double a_crawford(const Weight& W, const CMatrix& T, const ThetaSweepConfig& cfg) {
  const CMatrix M = W.congruence(T);
  return M.rows() == 0 ? 0.0 : crawford(M, cfg);
}

RadiusCrawford a_radius_and_crawford(const Weight& W, const CMatrix& T,
                                     const ThetaSweepConfig& cfg) {
  const CMatrix M = W.congruence(T);
  return M.rows() == 0 ? RadiusCrawford{} : radius_and_crawford(M, cfg);
}

double a_numerical_radius_theta(const Weight& W, const CMatrix& T, const ThetaSweepConfig& cfg) {
  W.require_pd("a_numerical_radius_theta");
  W.require_dim(T, "a_numerical_radius_theta");
  const CMatrix R = re_a(W, T);
  const CMatrix J = im_a(W, T);
  // Re_A(e^{i theta} T) = cos(theta) Re_A(T) - sin(theta) Im_A(T)
  auto f = [&](double th) { return a_norm(W, std::cos(th) * R - std::sin(th) * J); };
  return maximize_theta(f, cfg).value;
}

CMatrix re_a(const Weight& W, const CMatrix& T) {
  return 0.5 * (T + a_adjoint(W, T));
}

CMatrix im_a(const Weight& W, const CMatrix& T) {
  return cplx(0, -0.5) * (T - a_adjoint(W, T));
}

cplx a_inner(const Weight& W, const CVector& x, const CVector& y) {
  if (x.size() != W.dim || y.size() != W.dim)
    throw DimensionMismatch("a_inner: vector length does not match weight dimension");
  return (y.adjoint() * (W.A * x))(0, 0);
}

double a_vec_norm(const Weight& W, const CVector& x) {
  return std::sqrt(std::max(0.0, std::real(a_inner(W, x, x))));
}

double a_unitary_residual(const Weight& W, const CMatrix& U) {
  W.require_dim(U, "a_unitary_residual");
  const double scale = std::max(1.0, W.A.norm());
  const double r1 = (U.adjoint() * W.A * U - W.A).norm();
  const CMatrix Us = a_adjoint(W, U);
  const double r2 = (Us.adjoint() * W.A * Us - W.A).norm();
  return std::max(r1, r2) / scale;
}

bool is_a_unitary(const Weight& W, const CMatrix& U, double tol) {
  return a_unitary_residual(W, U) <= tol;
}

CMatrix BlockWeight::dense() const {
  const int d = base.dim;
  CMatrix B = CMatrix::Zero(static_cast<Eigen::Index>(copies) * d,
                            static_cast<Eigen::Index>(copies) * d);
  for (int b = 0; b < copies; ++b) B.block(b * d, b * d, d, d) = base.A;
  return B;
}

Weight BlockWeight::materialize() const { return make_weight(dense()); }

}  // namespace numrad
