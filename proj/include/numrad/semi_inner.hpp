#pragma once

#include "numrad/numerical_range.hpp"
#include "numrad/types.hpp"

namespace numrad {

/// Validated positive (semi-)definite weight with cached square-root factors.
/// For semidefinite weights every quantity is computed on the compression onto
/// the eigenspaces above rank_cut (the closure of the range of A).
struct Weight {
  CMatrix A;           // symmetrized input
  CMatrix sqrtA;       // A^{1/2}
  CMatrix inv_sqrtA;   // A^{-1/2} on the retained eigenspace, 0 elsewhere
  CMatrix compressor;  // rank x dim map onto the retained eigenspace
  double rank_cut = 0.0;
  bool strictly_pd = false;
  int dim = 0;
  int rank = 0;

  /// sqrtA * T * inv_sqrtA, compressed when semidefinite.
  CMatrix congruence(const CMatrix& T) const;

  void require_pd(const char* who) const;
  void require_dim(const CMatrix& T, const char* who) const;
};

/// Builds a Weight. Throws NotHermitian, or NegativeWeight when
/// lambda_min(A) < -rank_cut with rank_cut = 1e-10 * lambda_max(A).
Weight make_weight(const CMatrix& A);

/// T^sharp = A^{-1} T^* A (strictly positive definite weights only).
CMatrix a_adjoint(const Weight& W, const CMatrix& T);

/// ||T||_A: largest singular value of the congruence.
double a_norm(const Weight& W, const CMatrix& T);

/// c_A(T): smallest singular value of the (compressed) congruence.
double a_min_norm(const Weight& W, const CMatrix& T);

double a_numerical_radius(const Weight& W, const CMatrix& T, const ThetaSweepConfig& cfg = {});
double a_crawford(const Weight& W, const CMatrix& T, const ThetaSweepConfig& cfg = {});
RadiusCrawford a_radius_and_crawford(const Weight& W, const CMatrix& T,
                                     const ThetaSweepConfig& cfg = {});

/// w_A by the theta-supremum formula sup_theta ||Re_A(e^{i theta} T)||_A,
/// evaluated through a_adjoint and SVD-based norms; serves as the independent
/// cross-check of the congruence route.
double a_numerical_radius_theta(const Weight& W, const CMatrix& T,
                                const ThetaSweepConfig& cfg = {});

/// Re_A(T) = (T + T^sharp)/2 and Im_A(T) = (T - T^sharp)/(2i); both are
/// A-self-adjoint and Re_A(T) + i Im_A(T) = T.
CMatrix re_a(const Weight& W, const CMatrix& T);
CMatrix im_a(const Weight& W, const CMatrix& T);

/// <x, y>_A = <A x, y> (linear in the first argument).
cplx a_inner(const Weight& W, const CVector& x, const CVector& y);
double a_vec_norm(const Weight& W, const CVector& x);

/// max of the two isometry residuals ||U^* A U - A||_F and
/// ||(U^sharp)^* A U^sharp - A||_F, relative to max(1, ||A||_F).
double a_unitary_residual(const Weight& W, const CMatrix& U);
bool is_a_unitary(const Weight& W, const CMatrix& U, double tol = 1e-9);

/// B = diag(A, ..., A) with n copies.
struct BlockWeight {
  Weight base;
  int copies = 1;

  CMatrix dense() const;
  Weight materialize() const;
};

}  // namespace numrad
