#include "numrad/block_ops.hpp"

#include <cmath>

#include "numrad/errors.hpp"
#include "numrad/lambda_core.hpp"
#include "numrad/spectral.hpp"

namespace numrad {

namespace {

void validate(const BlockMatrix& T, const char* who) {
  if (T.n < 1) throw DimensionMismatch(std::string(who) + ": block order must be >= 1");
  if (T.block_dim < 1) throw DimensionMismatch(std::string(who) + ": block dimension must be >= 1");
  if (T.blocks.size() != static_cast<size_t>(T.n) * T.n)
    throw DimensionMismatch(std::string(who) + ": expected n*n blocks");
  for (const CMatrix& b : T.blocks)
    if (b.rows() != T.block_dim || b.cols() != T.block_dim)
      throw DimensionMismatch(std::string(who) + ": all blocks must be " +
                              std::to_string(T.block_dim) + "x" + std::to_string(T.block_dim));
}

}  // namespace

BlockMatrix make_blocks(int n, int block_dim) {
  BlockMatrix T;
  T.n = n;
  T.block_dim = block_dim;
  T.blocks.assign(static_cast<size_t>(n) * n, CMatrix::Zero(block_dim, block_dim));
  validate(T, "make_blocks");
  return T;
}

CMatrix flatten(const BlockMatrix& T) {
  validate(T, "flatten");
  const int d = T.block_dim;
  CMatrix M(static_cast<Eigen::Index>(T.n) * d, static_cast<Eigen::Index>(T.n) * d);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) M.block(i * d, j * d, d, d) = T.at(i, j);
  return M;
}

BlockMatrix assemble(const CMatrix& M, int n) {
  ensure_square(M, "assemble");
  if (n < 1 || M.rows() % n != 0)
    throw DimensionMismatch("assemble: matrix order " + std::to_string(M.rows()) +
                            " is not divisible into " + std::to_string(n) + " blocks");
  const int d = static_cast<int>(M.rows()) / n;
  BlockMatrix T = make_blocks(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T.at(i, j) = M.block(i * d, j * d, d, d);
  return T;
}

BlockMatrix offdiag2(const CMatrix& X, const CMatrix& Y) {
  ensure_square(X, "offdiag2");
  ensure_square(Y, "offdiag2");
  if (X.rows() != Y.rows())
    throw DimensionMismatch("offdiag2: blocks must share one dimension, got " +
                            std::to_string(X.rows()) + " and " + std::to_string(Y.rows()));
  BlockMatrix T = make_blocks(2, static_cast<int>(X.rows()));
  T.at(0, 1) = X;
  T.at(1, 0) = Y;
  return T;
}

RMatrix scalarize_fg(const BlockMatrix& T, double s, bool diagonal_mode) {
  validate(T, "scalarize_fg");
  if (!(s > 0.0 && s < 1.0)) throw DomainError("scalarize_fg: exponent s must lie in (0,1)");
  RMatrix out(T.n, T.n);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) {
      const CMatrix& B = T.at(i, j);
      const HermEig g1 = gram_eig(B);            // |T_ij|^2 spectrum
      const HermEig g2 = gram_eig(B.adjoint());  // |T_ij^*|^2 spectrum
      if (diagonal_mode && i == j) {
        out(i, j) = 0.5 * op_norm(psd_power(g1, s) + psd_power(g2, 1.0 - s));
      } else {
        const double l1 = g1.eigenvalues.size() ? g1.eigenvalues.tail(1)(0) : 0.0;
        const double l2 = g2.eigenvalues.size() ? g2.eigenvalues.tail(1)(0) : 0.0;
        // ||f^2(|B|)||^{1/2} ||g^2(|B^*|)||^{1/2} = lmax(B^*B)^{s/2} lmax(BB^*)^{(1-s)/2}
        out(i, j) = std::pow(std::max(0.0, l1), 0.5 * s) *
                    std::pow(std::max(0.0, l2), 0.5 * (1.0 - s));
      }
    }
  return out;
}

RMatrix scalarize_weighted(const BlockMatrix& T, const Weight& W, const ThetaSweepConfig& cfg,
                           WeightedScalarization mode) {
  validate(T, "scalarize_weighted");
  if (T.block_dim != W.dim)
    throw DimensionMismatch("scalarize_weighted: weight dimension does not match block dimension");
  RMatrix out(T.n, T.n);
  for (int i = 0; i < T.n; ++i) out(i, i) = a_numerical_radius(W, T.at(i, i), cfg);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) {
      if (i == j) continue;
      if (mode == WeightedScalarization::NormOffdiag) {
        out(i, j) = a_norm(W, T.at(i, j));
      } else if (j > i) {
        // w_C is symmetric under swapping the pair; fill both triangles at once
        const double v = wb_offdiag_theta(T.at(i, j), T.at(j, i), W, cfg);
        out(i, j) = v;
        out(j, i) = v;
      }
    }
  return out;
}

double w_nonneg(const CMatrix& M) {
  ensure_square(M, "w_nonneg");
  ensure_finite(M, "w_nonneg");
  const int n = static_cast<int>(M.rows());
  RMatrix R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx z = M(i, j);
      if (std::abs(z.imag()) > 1e-12 || z.real() < -1e-12)
        throw NegativeEntry("w_nonneg: entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a nonnegative real");
      R(i, j) = std::max(0.0, z.real());
    }
  return w_nonneg(R);
}

double w_nonneg(const RMatrix& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("w_nonneg: matrix must be square");
  const int n = static_cast<int>(M.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (M(i, j) < -1e-12)
        throw NegativeEntry("w_nonneg: negative entry " + std::to_string(M(i, j)));
  const RMatrix C = M.cwiseMax(0.0);
  const RMatrix S = C + C.transpose();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(S, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("w_nonneg: eigensolver failed");
  const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(n - 1);
  return 0.5 * std::max(std::abs(lo), std::abs(hi));
}

namespace {

// (1/2) sup_t || e^{i t} C + e^{-i t} D || through the Hermitian pencil of
// (e^{i t} C + e^{-i t} D)^* (e^{i t} C + e^{-i t} D).
double half_sup_phase_sum(const CMatrix& C, const CMatrix& D, const ThetaSweepConfig& cfg) {
  const CMatrix Z = D.adjoint() * C;
  const CMatrix K0 = C.adjoint() * C + D.adjoint() * D;
  const CMatrix P1 = Z + Z.adjoint();
  const CMatrix P2 = cplx(0, 1) * (Z - Z.adjoint());
  const auto res = detail::sweep_pencil(&K0, P1, P2, cfg, /*want_min=*/false);
  return 0.5 * std::sqrt(std::max(0.0, res.max_point.value));
}

}  // namespace

double w_offdiag_pair(const CMatrix& X, const CMatrix& Y, const ThetaSweepConfig& cfg) {
  ensure_square(X, "w_offdiag_pair");
  ensure_square(Y, "w_offdiag_pair");
  if (X.rows() != Y.rows()) throw DimensionMismatch("w_offdiag_pair: blocks differ in dimension");
  return half_sup_phase_sum(X, Y.adjoint(), cfg);
}

double wb_offdiag_theta(const CMatrix& T12, const CMatrix& T21, const Weight& W,
                        const ThetaSweepConfig& cfg) {
  W.require_dim(T12, "wb_offdiag_theta");
  W.require_dim(T21, "wb_offdiag_theta");
  const CMatrix T21s = a_adjoint(W, T21);
  return half_sup_phase_sum(W.congruence(T12), W.congruence(T21s), cfg);
}

}  // namespace numrad
