#include "numrad/theta_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "numrad/errors.hpp"
#include "numrad/lambda_core.hpp"

namespace numrad {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kGolden = 0.61803398874989484820;  // (sqrt(5)-1)/2

struct BestTracker {
  double value = -std::numeric_limits<double>::infinity();
  double theta = 0.0;
  void feed(double th, double v) {
    if (v > value) {
      value = v;
      theta = th;
    }
  }
};

// Golden-section maximization on [a, b]; every evaluation feeds the tracker.
void golden_refine(const std::function<double(double)>& f, double a, double b, double tol,
                   int max_iters, BestTracker& best) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  best.feed(x1, f1);
  best.feed(x2, f2);
  for (int it = 0; it < max_iters && (b - a) > tol; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
      best.feed(x2, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
      best.feed(x1, f1);
    }
  }
}

// How far above `value` any branch can rise within angular distance `dist`,
// when every branch is c + a cos(theta - phi) with 0 <= a <= amplitude and
// c >= 0 (or c = 0). Both terms are rigorous; the minimum is used.
double rise_bound(double value, double dist, double amplitude) {
  const double c = std::cos(std::min(dist, 1.5));
  const double quad = amplitude * (1.0 - c);
  const double local = std::max(value, 0.0) * (1.0 / c - 1.0);
  return std::min(quad, local);
}

// Shared grid search. `amplitude` bounds the sinusoidal oscillation of every
// branch of f (f = max_x [c(x) + a(x) cos(theta - phi(x))], a(x) <= amplitude,
// offsets c(x) >= 0 or identically 0); negative disables cell pruning.
void sweep_core(const std::function<double(double)>& f, const ThetaSweepConfig& cfg,
                double amplitude, bool want_min, ThetaOpt* out_max, ThetaOpt* out_min) {
  cfg.validate();
  const int m = cfg.grid_points;
  const double h = kTwoPi / m;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> vals(m, nan);

  auto eval_idx = [&](int k) -> double {
    if (std::isnan(vals[k])) vals[k] = f(h * k);
    return vals[k];
  };

  int stride0 = 1;
  if (amplitude >= 0.0) {
    while (m % (stride0 * 2) == 0 && m / (stride0 * 2) >= 64) stride0 *= 2;
  }

  double cmax = -std::numeric_limits<double>::infinity();
  double cmin = std::numeric_limits<double>::infinity();
  auto feed = [&](double v) {
    cmax = std::max(cmax, v);
    cmin = std::min(cmin, v);
  };

  if (stride0 == 1) {
    for (int k = 0; k < m; ++k) feed(eval_idx(k));
  } else {
    // halving refinement: a cell survives only while its branch bound can
    // still reach the running optimum, so skipped fine points provably cannot
    // improve on the evaluated ones
    std::vector<int> active;  // left endpoints of surviving cells
    for (int j = 0; j * stride0 < m; ++j) {
      feed(eval_idx(j * stride0));
      active.push_back(j * stride0);
    }
    for (int stride = stride0; stride > 1; stride /= 2) {
      const int half = stride / 2;
      for (int a : active) feed(eval_idx(a + half));
      const double width = half * h;
      const double reach_min = 0.5 * amplitude * width;  // kinks make minima only Lipschitz
      const double slack = 16.0 * std::numeric_limits<double>::epsilon() *
                           (std::abs(cmax) + std::abs(cmin) + amplitude + 1.0);
      std::vector<int> next;
      next.reserve(active.size());
      for (int a : active)
        for (int c : {a, a + half}) {
          const double fl = vals[c];
          const double fr = vals[(c + half) % m];
          const double top = std::max(fl, fr);
          const bool keep_max = top + rise_bound(top, 0.5 * width, amplitude) >= cmax - slack;
          const bool keep_min = want_min && std::min(fl, fr) - reach_min <= cmin + slack;
          if (keep_max || keep_min) next.push_back(c);
        }
      active.swap(next);
    }
  }

  auto neighbor = [&](int k, int dir) -> double {
    const int idx = ((k + dir) % m + m) % m;
    return vals[idx];  // NaN when not evaluated
  };

  // Candidate local maxima / minima among evaluated grid points. An
  // unevaluated neighbor never disqualifies a candidate (its cell was proven
  // uncompetitive, not its value known).
  std::vector<int> cand_max, cand_min;
  for (int k = 0; k < m; ++k) {
    if (std::isnan(vals[k])) continue;
    const double l = neighbor(k, -1), r = neighbor(k, +1);
    const bool ge_l = std::isnan(l) || vals[k] >= l;
    const bool ge_r = std::isnan(r) || vals[k] >= r;
    if (ge_l && ge_r) cand_max.push_back(k);
    if (want_min) {
      const bool le_l = std::isnan(l) || vals[k] <= l;
      const bool le_r = std::isnan(r) || vals[k] <= r;
      if (le_l && le_r) cand_min.push_back(k);
    }
  }

  auto top3 = [&](std::vector<int>& cand, bool descending) {
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
      return descending ? vals[a] > vals[b] : vals[a] < vals[b];
    });
    if (cand.size() > 3) cand.resize(3);
  };

  if (out_max) {
    top3(cand_max, true);
    BestTracker best;
    for (int k = 0; k < m; ++k)
      if (!std::isnan(vals[k])) best.feed(h * k, vals[k]);
    for (int k : cand_max) {
      // a basin whose ceiling cannot pass the running best needs no refinement
      if (amplitude >= 0.0 && vals[k] + rise_bound(vals[k], h, amplitude) <= best.value) continue;
      golden_refine(f, h * k - h, h * k + h, cfg.refine_tol, cfg.max_refine_iters, best);
    }
    out_max->value = best.value;
    out_max->theta = std::fmod(best.theta + kTwoPi, kTwoPi);
  }
  if (out_min) {
    top3(cand_min, false);
    BestTracker best;  // tracks max of -f
    auto nf = [&](double th) { return -f(th); };
    for (int k = 0; k < m; ++k)
      if (!std::isnan(vals[k])) best.feed(h * k, -vals[k]);
    for (int k : cand_min) {
      if (amplitude >= 0.0 && -(vals[k] - amplitude * h) <= best.value) continue;
      golden_refine(nf, h * k - h, h * k + h, cfg.refine_tol, cfg.max_refine_iters, best);
    }
    out_min->value = -best.value;
    out_min->theta = std::fmod(best.theta + kTwoPi, kTwoPi);
  }
}

}  // namespace

void ThetaSweepConfig::validate() const {
  if (grid_points < 16) throw DomainError("ThetaSweepConfig: grid_points must be >= 16");
  if (!(refine_tol > 0.0)) throw DomainError("ThetaSweepConfig: refine_tol must be > 0");
  if (max_refine_iters < 1) throw DomainError("ThetaSweepConfig: max_refine_iters must be >= 1");
}

ThetaOpt maximize_theta(const std::function<double(double)>& f, const ThetaSweepConfig& cfg) {
  ThetaOpt opt;
  sweep_core(f, cfg, -1.0, false, &opt, nullptr);
  return opt;
}

namespace detail {

PencilSweepResult sweep_pencil(const CMatrix* K0, const CMatrix& P1, const CMatrix& P2,
                               const ThetaSweepConfig& cfg, bool want_min) {
  HermLambda work;
  auto spec_norm = [&](const CMatrix& M) {
    work.set(M);
    auto [lo, hi] = work.lambda_extremes();
    return std::max(std::abs(lo), std::abs(hi));
  };
  // every branch <H(theta) x, x> is a sinusoid of amplitude
  // hypot(<P1 x, x>, <P2 x, x>) <= hypot(||P1||, ||P2||) around <K0 x, x>;
  // callers pass PSD K0 (or none), which the pruning bound relies on
  const double amplitude = std::hypot(spec_norm(P1), spec_norm(P2));

  auto f = [&](double th) {
    work.set_pencil(K0, P1, P2, std::cos(th), std::sin(th));
    return work.lambda_max();
  };

  PencilSweepResult res;
  sweep_core(f, cfg, amplitude, want_min, &res.max_point, want_min ? &res.min_point : nullptr);
  return res;
}

}  // namespace detail

}  // namespace numrad
