#include "numrad/numerical_range.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "numrad/errors.hpp"

namespace numrad {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_operator(const CMatrix& T, const char* who) {
  ensure_square(T, who);
  ensure_finite(T, who);
  if (T.rows() == 0) throw DimensionMismatch(std::string(who) + ": empty matrix");
}
}  // namespace

CMatrix real_part_rotated(const CMatrix& T, double theta) {
  check_operator(T, "real_part_rotated");
  const cplx phase(std::cos(theta), std::sin(theta));
  return 0.5 * (phase * T + std::conj(phase) * T.adjoint());
}

RadiusCrawford radius_and_crawford(const CMatrix& T, const ThetaSweepConfig& cfg) {
  check_operator(T, "radius_and_crawford");
  const int n = static_cast<int>(T.rows());
  if (n == 1) {
    const double v = std::abs(T(0, 0));
    return {v, v};
  }
  const CMatrix H1 = 0.5 * (T + T.adjoint());
  const CMatrix H2 = cplx(0, 0.5) * (T - T.adjoint());
  const auto res = detail::sweep_pencil(nullptr, H1, H2, cfg, /*want_min=*/true);
  // lambda_min(Re(e^{i th} T)) = -lambda_max(Re(e^{i (th+pi)} T)), so the
  // Crawford support value is -min over theta of the same branch function.
  return {res.max_point.value, std::max(0.0, -res.min_point.value)};
}

double numerical_radius(const CMatrix& T, const ThetaSweepConfig& cfg) {
  check_operator(T, "numerical_radius");
  const int n = static_cast<int>(T.rows());
  if (n == 1) return std::abs(T(0, 0));
  const CMatrix H1 = 0.5 * (T + T.adjoint());
  const CMatrix H2 = cplx(0, 0.5) * (T - T.adjoint());
  return detail::sweep_pencil(nullptr, H1, H2, cfg, /*want_min=*/false).max_point.value;
}

double crawford(const CMatrix& T, const ThetaSweepConfig& cfg) {
  return radius_and_crawford(T, cfg).crawford;
}

double spectral_radius(const CMatrix& T) {
  check_operator(T, "spectral_radius");
  if (T.rows() == 1) return std::abs(T(0, 0));
  Eigen::ComplexEigenSolver<CMatrix> es(T, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("spectral_radius: eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

RangeBoundary range_boundary(const CMatrix& T, int k) {
  check_operator(T, "range_boundary");
  if (k < 3) throw DomainError("range_boundary: need k >= 3 support angles");
  RangeBoundary rb;
  rb.thetas.reserve(k);
  rb.points.reserve(k);
  Eigen::SelfAdjointEigenSolver<CMatrix> es;
  for (int j = 0; j < k; ++j) {
    const double theta = kTwoPi * j / k;
    es.compute(real_part_rotated(T, theta));
    if (es.info() != Eigen::Success)
      throw NumericalFailure("range_boundary: eigensolver did not converge");
    const CVector x = es.eigenvectors().col(T.rows() - 1);
    rb.thetas.push_back(theta);
    rb.points.push_back((x.adjoint() * (T * x))(0, 0));
  }
  return rb;
}

}  // namespace numrad
