#pragma once

#include <functional>

#include "numrad/types.hpp"

namespace numrad {

struct ThetaSweepConfig {
  int grid_points = 1024;
  double refine_tol = 1e-12;  // radians
  int max_refine_iters = 200;

  void validate() const;
};

struct ThetaOpt {
  double value = 0.0;
  double theta = 0.0;
};

/// Maximizes a continuous 2*pi-periodic function: evaluates the uniform grid,
/// then golden-section refines around the best 3 local maxima. The returned
/// value is the maximum over every point evaluated, so it never exceeds the
/// true supremum.
ThetaOpt maximize_theta(const std::function<double(double)>& f, const ThetaSweepConfig& cfg);

namespace detail {

struct PencilSweepResult {
  ThetaOpt max_point;
  ThetaOpt min_point;  // only meaningful when requested
};

/// Grid-plus-refinement extremes of g(theta) = lambda_max(K0 + cos(theta) P1 +
/// sin(theta) P2) for Hermitian K0 (optional), P1, P2. Grid cells whose
/// Lipschitz upper bound cannot reach the running optimum are skipped; this is
/// value-equivalent to evaluating the full grid.
PencilSweepResult sweep_pencil(const CMatrix* K0, const CMatrix& P1, const CMatrix& P2,
                               const ThetaSweepConfig& cfg, bool want_min);

}  // namespace detail

}  // namespace numrad
