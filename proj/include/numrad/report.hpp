#pragma once

#include <string>
#include <vector>

namespace numrad {

/// Margin acceptance: holds iff margin >= -kMarginRelTol * scale.
inline constexpr double kMarginRelTol = 1e-8;
/// An instance is counted tight when margin < kTightRelTol * scale.
inline constexpr double kTightRelTol = 1e-6;
/// Hypothesis residuals are relative to the instance magnitude; beyond this
/// the report is flagged invalid instead of counting as a violation.
inline constexpr double kResidualRelTol = 1e-8;

/// One inequality evaluation. margin = rhs - lhs; scale = max(1, lhs, rhs).
struct BoundReport {
  std::string bound_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double hypothesis_residual = 0.0;  // relative to the instance magnitude
  double scale = 1.0;
  bool holds = true;
  bool valid = true;  // false = INVALID_INSTANCE, excluded from violation counts
};

BoundReport make_report(std::string bound_id, double lhs, double rhs,
                        double hypothesis_residual = 0.0);

/// Two-sided agreement |a - b| <= kMarginRelTol * max(1, |a|, |b|), encoded as
/// lhs = relative difference, rhs = 0.
BoundReport make_equality_report(std::string bound_id, double a, double b,
                                 double hypothesis_residual = 0.0);

struct BoundStats {
  std::string bound_id;
  long count = 0;       // reports seen
  long valid = 0;       // hypothesis satisfied
  long violations = 0;  // valid with holds == false
  long invalid = 0;
  long tight = 0;
  double min_margin = 0.0;
  double mean_margin = 0.0;
  double tight_fraction = 0.0;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  int grid_points = 0;
  long violations = 0;
  long invalid = 0;
  double min_margin = 0.0;
  double mean_margin = 0.0;
  double tight_fraction = 0.0;
  std::vector<BoundStats> per_bound;
  std::vector<std::vector<BoundReport>> trial_reports;  // indexed by trial
};

}  // namespace numrad
