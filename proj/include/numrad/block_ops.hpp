#pragma once

#include <vector>

#include "numrad/semi_inner.hpp"
#include "numrad/types.hpp"

namespace numrad {

/// n x n grid of equally sized square blocks.
struct BlockMatrix {
  int n = 0;
  int block_dim = 0;
  std::vector<CMatrix> blocks;  // row-major n*n

  CMatrix& at(int i, int j) { return blocks[static_cast<size_t>(i) * n + j]; }
  const CMatrix& at(int i, int j) const { return blocks[static_cast<size_t>(i) * n + j]; }
};

/// All-zero block matrix.
BlockMatrix make_blocks(int n, int block_dim);

/// Dense (n*d) x (n*d) matrix with block (i, j) at offset (i*d, j*d).
CMatrix flatten(const BlockMatrix& T);

/// Splits a dense matrix into an n x n block grid; rows must be divisible by n.
BlockMatrix assemble(const CMatrix& M, int n);

/// 2x2 block matrix with zero diagonal, X at (1,2) and Y at (2,1).
BlockMatrix offdiag2(const CMatrix& X, const CMatrix& Y);

/// Scalarization with the power pair f(t) = t^s, g(t) = t^{1-s}:
/// entries ||f^2(|T_ij|)||^{1/2} ||g^2(|T_ij^*|)||^{1/2}; with diagonal_mode the
/// diagonal switches to (1/2) ||f^2(|T_ii|) + g^2(|T_ii^*|)||.
RMatrix scalarize_fg(const BlockMatrix& T, double s, bool diagonal_mode);

enum class WeightedScalarization {
  NormOffdiag,  // w_A on the diagonal, ||T_ij||_A off it
  WbOffdiag,    // w_A on the diagonal, w_C of the off-diagonal pair off it
};

RMatrix scalarize_weighted(const BlockMatrix& T, const Weight& W, const ThetaSweepConfig& cfg,
                           WeightedScalarization mode);

/// Numerical radius of an entrywise-nonnegative real matrix:
/// (1/2) r(M + M^t). Entries below -1e-12 (or with imaginary part beyond
/// 1e-12) raise NegativeEntry; small negatives are clamped.
double w_nonneg(const CMatrix& M);
double w_nonneg(const RMatrix& M);

/// w of [[O, X], [Y, O]] via the classical theta-supremum
/// (1/2) sup_theta || e^{i theta} X + e^{-i theta} Y^* ||; agrees with
/// numerical_radius of the flattened block matrix.
double w_offdiag_pair(const CMatrix& X, const CMatrix& Y, const ThetaSweepConfig& cfg = {});

/// w_B of [[O, T12], [T21, O]] under B = diag(A, A) via the theta-supremum
/// (1/2) sup_theta || e^{i theta} T12 + e^{-i theta} T21^sharp ||_A.
double wb_offdiag_theta(const CMatrix& T12, const CMatrix& T21, const Weight& W,
                        const ThetaSweepConfig& cfg = {});

}  // namespace numrad
