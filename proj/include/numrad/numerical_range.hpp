#pragma once

#include <vector>

#include "numrad/theta_sweep.hpp"
#include "numrad/types.hpp"

namespace numrad {

/// Inscribed boundary polygon of W(T): support points at k equally spaced angles.
struct RangeBoundary {
  std::vector<double> thetas;
  std::vector<cplx> points;
};

/// (e^{i theta} T + e^{-i theta} T^*) / 2, Hermitian by construction.
CMatrix real_part_rotated(const CMatrix& T, double theta);

/// w(T) = max_theta lambda_max(real_part_rotated(T, theta)).
double numerical_radius(const CMatrix& T, const ThetaSweepConfig& cfg = {});

/// Distance from 0 to W(T) (0 when 0 lies inside), via support functions:
/// max(0, max_theta lambda_min(real_part_rotated(T, theta))).
double crawford(const CMatrix& T, const ThetaSweepConfig& cfg = {});

struct RadiusCrawford {
  double radius = 0.0;
  double crawford = 0.0;
};

/// Both quantities from one shared sweep.
RadiusCrawford radius_and_crawford(const CMatrix& T, const ThetaSweepConfig& cfg = {});

/// max |lambda_i| over the (generally complex) spectrum.
double spectral_radius(const CMatrix& T);

/// Support points <T x_theta, x_theta> for k >= 3 equally spaced angles, where
/// x_theta is a top eigenvector of real_part_rotated(T, theta).
RangeBoundary range_boundary(const CMatrix& T, int k);

}  // namespace numrad
