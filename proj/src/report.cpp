#include "numrad/report.hpp"

#include <algorithm>
#include <cmath>

namespace numrad {

BoundReport make_report(std::string bound_id, double lhs, double rhs, double hypothesis_residual) {
  BoundReport r;
  r.bound_id = std::move(bound_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.hypothesis_residual = hypothesis_residual;
  r.scale = std::max({1.0, lhs, rhs});
  r.holds = r.margin >= -kMarginRelTol * r.scale;
  r.valid = hypothesis_residual <= kResidualRelTol;
  return r;
}

BoundReport make_equality_report(std::string bound_id, double a, double b,
                                 double hypothesis_residual) {
  const double denom = std::max({1.0, std::abs(a), std::abs(b)});
  return make_report(std::move(bound_id), std::abs(a - b) / denom, 0.0, hypothesis_residual);
}

}  // namespace numrad
