#pragma once

#include <vector>

#include "numrad/block_ops.hpp"
#include "numrad/power_pair.hpp"
#include "numrad/report.hpp"
#include "numrad/semi_inner.hpp"
#include "numrad/theta_sweep.hpp"
#include "numrad/types.hpp"

namespace numrad {

/// Five scalar/vector lemmas: Power-Young, McCarthy (on the weight matrix),
/// Kittaneh's product bound (needs |X| Y = Y^* |X|), the 2x2 off-diagonal
/// w^2 bound, and Buzano's inequality.
std::vector<BoundReport> check_lemmas(const CMatrix& X, const CMatrix& Y, const CVector& x,
                                      const CVector& y, const Weight& W, const PowerPair& pp,
                                      const ThetaSweepConfig& cfg = {});

/// Product bounds under the intertwining hypothesis: the two chained RHS forms
/// of the w^p(XY) theorem, their monotonicity, and the two corollaries.
std::vector<BoundReport> check_product_s2(const CMatrix& X, const CMatrix& Y, const PowerPair& pp,
                                          const ThetaSweepConfig& cfg = {});

/// Product bounds under commutation (Buzano route): the w^{2p}(XY) chain, its
/// corollaries, and the norm-sum dominance remark at T = X and T = Y.
std::vector<BoundReport> check_product_buzano_s2(const CMatrix& X, const CMatrix& Y,
                                                 const PowerPair& pp,
                                                 const ThetaSweepConfig& cfg = {});

/// Operator-matrix scalarizations: w(T) vs w(T'), w(T''), and the s = 1/2
/// norm-matrix specialization.
std::vector<BoundReport> check_opmatrix_s3(const BlockMatrix& T, double s,
                                           const ThetaSweepConfig& cfg = {});

/// Fixed fixture reproducing the refutation of the flawed block bound:
/// w of the 4x4 matrix equals 2 while the refuted bound evaluates to 3/2, and
/// the rank-one inner-product pair gives (1/2, 1/4).
BoundReport check_alomari_counterexample(const ThetaSweepConfig& cfg = {});

/// Off-diagonal 2x2 results: two-route w_B agreement, the sum/difference
/// sandwich, the fourth-root bounds, the square-root corollaries, and the
/// Crawford-number lower bounds.
std::vector<BoundReport> check_offdiag_s4(const CMatrix& T12, const CMatrix& T21, const Weight& W,
                                          const ThetaSweepConfig& cfg = {});

/// Full n x n results: w_B vs both weighted scalarizations, the 2x2 closed
/// forms with their nonnegative-matrix cross-checks, and the block norm bound.
std::vector<BoundReport> check_full_s4(const BlockMatrix& T, const Weight& W,
                                       const ThetaSweepConfig& cfg = {});

/// w_A(Y^sharp X) <= (1/4) ||X X^sharp + Y Y^sharp||_A + (1/2) w_A(X Y^sharp).
BoundReport check_wa_product(const CMatrix& X, const CMatrix& Y, const Weight& W,
                             const ThetaSweepConfig& cfg = {});

}  // namespace numrad
