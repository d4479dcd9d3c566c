#pragma once

#include <utility>
#include <vector>

#include "numrad/types.hpp"

namespace numrad::detail {

/// Values-only extremal eigenvalues of dense complex Hermitian matrices:
/// Householder tridiagonalization followed by Sturm-count bisection.
/// Keeps all scratch storage between calls; one instance per thread.
class HermLambda {
 public:
  void resize(int n);

  /// Loads M (assumed Hermitian up to roundoff; symmetrized on load).
  void set(const CMatrix& M);

  /// Loads K0 + c*P1 + s*P2 without forming a temporary. K0 may be null.
  void set_pencil(const CMatrix* K0, const CMatrix& P1, const CMatrix& P2, double c, double s);

  /// Largest eigenvalue of the loaded matrix. Destroys the loaded matrix.
  double lambda_max();

  /// (lambda_min, lambda_max) of the loaded matrix. Destroys the loaded matrix.
  std::pair<double, double> lambda_extremes();

 private:
  int n_ = 0;
  std::vector<cplx> a_;  // column-major n x n working copy
  std::vector<cplx> v_, w_;
  std::vector<double> d_, e_;

  void tridiagonalize();
  void ql_values();
};

}  // namespace numrad::detail
