#include "numrad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "numrad/checks.hpp"
#include "numrad/errors.hpp"
#include "numrad/instance_gen.hpp"

namespace numrad {

namespace {

// fixed stream ids keep every suite's instances independent of the others
enum StreamId : std::uint32_t {
  kLemmas = 1,
  kS2 = 2,
  kS3 = 3,
  kS4Offdiag = 4,
  kS4Full = 5,
};

const PowerPair& pp_grid(std::uint64_t k) {
  static const PowerPair grid[3] = {
      PowerPair(0.5, 1.0, 2.0, 2.0),
      PowerPair(0.3, 2.0, 2.0, 2.0),
      PowerPair(0.7, 1.5, 4.0 / 3.0, 4.0),
  };
  return grid[k % 3];
}

std::vector<BoundReport> trial_lemmas(int dim, std::uint64_t seed, std::uint64_t k,
                                      const ThetaSweepConfig& cfg) {
  RandomStream rs(seed, kLemmas, k);
  const auto mode = (k % 2 == 0) ? IntertwineMode::Hermitian : IntertwineMode::Polar;
  const auto [X, Y] = gen_intertwined_pair(rs, dim, 1.0, mode);
  const CVector x = gen_vector(rs, dim);
  const CVector y = gen_vector(rs, dim);
  const Weight W = make_weight(gen_matrix(rs, dim, Ensemble::Pd));
  return check_lemmas(X, Y, x, y, W, pp_grid(k), cfg);
}

std::vector<BoundReport> trial_s2(int dim, std::uint64_t seed, std::uint64_t k,
                                  const ThetaSweepConfig& cfg) {
  RandomStream rs(seed, kS2, k);
  const auto mode = (k % 2 == 0) ? IntertwineMode::Hermitian : IntertwineMode::Polar;
  const PowerPair& pp = pp_grid(k);
  const auto [X1, Y1] = gen_intertwined_pair(rs, dim, 1.0, mode);
  std::vector<BoundReport> out = check_product_s2(X1, Y1, pp, cfg);
  const auto [X2, Y2] = gen_commuting_pair(rs, dim, 1.0);
  auto more = check_product_buzano_s2(X2, Y2, pp, cfg);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::vector<BoundReport> trial_s3(int dim, std::uint64_t seed, std::uint64_t k,
                                  const ThetaSweepConfig& cfg) {
  RandomStream rs(seed, kS3, k);
  const BlockMatrix T = gen_blocks(rs, dim, 1.0, 2, BlockStructure::Full);
  std::vector<BoundReport> out = check_opmatrix_s3(T, pp_grid(k).s, cfg);
  if (k == 0) out.push_back(check_alomari_counterexample(cfg));
  return out;
}

std::vector<BoundReport> trial_s4_offdiag(int dim, std::uint64_t seed, std::uint64_t k,
                                          const ThetaSweepConfig& cfg) {
  RandomStream rs(seed, kS4Offdiag, k);
  const Weight W = make_weight(gen_matrix(rs, dim, Ensemble::Pd));
  const CMatrix T12 = gen_matrix(rs, dim, Ensemble::Ginibre);
  const CMatrix T21 = gen_matrix(rs, dim, Ensemble::Ginibre);
  return check_offdiag_s4(T12, T21, W, cfg);
}

std::vector<BoundReport> trial_s4_full(int dim, std::uint64_t seed, std::uint64_t k,
                                       const ThetaSweepConfig& cfg) {
  RandomStream rs(seed, kS4Full, k);
  const Weight W = make_weight(gen_matrix(rs, dim, Ensemble::Pd));
  const BlockMatrix T = gen_blocks(rs, dim, 1.0, 2, BlockStructure::Full);
  std::vector<BoundReport> out = check_full_s4(T, W, cfg);
  const CMatrix X = gen_matrix(rs, dim, Ensemble::Ginibre);
  const CMatrix Y = gen_matrix(rs, dim, Ensemble::Ginibre);
  out.push_back(check_wa_product(X, Y, W, cfg));
  return out;
}

}  // namespace

bool is_known_suite(const std::string& suite_id) {
  return suite_id == "lemmas" || suite_id == "s2" || suite_id == "s3" ||
         suite_id == "s4-offdiag" || suite_id == "s4-full" || suite_id == "all";
}

std::vector<BoundReport> run_trial(const std::string& suite_id, int dim, std::uint64_t seed,
                                   std::uint64_t k, const ThetaSweepConfig& cfg) {
  if (suite_id == "lemmas") return trial_lemmas(dim, seed, k, cfg);
  if (suite_id == "s2") return trial_s2(dim, seed, k, cfg);
  if (suite_id == "s3") return trial_s3(dim, seed, k, cfg);
  if (suite_id == "s4-offdiag") return trial_s4_offdiag(dim, seed, k, cfg);
  if (suite_id == "s4-full") return trial_s4_full(dim, seed, k, cfg);
  if (suite_id == "all") {
    std::vector<BoundReport> out = trial_lemmas(dim, seed, k, cfg);
    for (const char* sub : {"s2", "s3", "s4-offdiag", "s4-full"}) {
      auto more = run_trial(sub, dim, seed, k, cfg);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  throw UnknownSuite("unknown suite id: " + suite_id);
}

SuiteReport run_suite(const std::string& suite_id, int trials, int dim, std::uint64_t seed,
                      const ThetaSweepConfig& cfg, int threads) {
  if (!is_known_suite(suite_id)) throw UnknownSuite("unknown suite id: " + suite_id);
  if (trials < 1) throw DomainError("run_suite: trials must be >= 1");
  if (dim < 2 || dim > 16) throw DomainError("run_suite: dim must lie in [2, 16]");
  cfg.validate();

  SuiteReport rep;
  rep.suite = suite_id;
  rep.trials = trials;
  rep.dim = dim;
  rep.seed = seed;
  rep.grid_points = cfg.grid_points;
  rep.trial_reports.resize(trials);

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::max(1, std::min(nthreads, trials));

  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const int k = next.fetch_add(1);
      if (k >= trials) return;
      try {
        rep.trial_reports[k] = run_trial(suite_id, dim, seed, k, cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // aggregation in trial order so the result is independent of scheduling
  long valid_total = 0, tight_total = 0;
  double margin_sum = 0.0;
  double margin_min = std::numeric_limits<double>::infinity();
  auto stats_for = [&](const std::string& id) -> BoundStats& {
    for (auto& bs : rep.per_bound)
      if (bs.bound_id == id) return bs;
    rep.per_bound.push_back(BoundStats{});
    rep.per_bound.back().bound_id = id;
    rep.per_bound.back().min_margin = std::numeric_limits<double>::infinity();
    return rep.per_bound.back();
  };
  for (int k = 0; k < trials; ++k)
    for (const BoundReport& r : rep.trial_reports[k]) {
      BoundStats& bs = stats_for(r.bound_id);
      ++bs.count;
      if (!r.valid) {
        ++bs.invalid;
        ++rep.invalid;
        continue;
      }
      ++bs.valid;
      ++valid_total;
      if (!r.holds) {
        ++bs.violations;
        ++rep.violations;
      }
      const bool tight = r.margin < kTightRelTol * r.scale;
      if (tight) {
        ++bs.tight;
        ++tight_total;
      }
      bs.min_margin = std::min(bs.min_margin, r.margin);
      bs.mean_margin += r.margin;  // sum for now
      margin_min = std::min(margin_min, r.margin);
      margin_sum += r.margin;
    }
  for (auto& bs : rep.per_bound) {
    if (bs.valid > 0) {
      bs.mean_margin /= static_cast<double>(bs.valid);
      bs.tight_fraction = static_cast<double>(bs.tight) / static_cast<double>(bs.valid);
    } else {
      bs.min_margin = 0.0;
    }
  }
  rep.min_margin = valid_total > 0 ? margin_min : 0.0;
  rep.mean_margin = valid_total > 0 ? margin_sum / static_cast<double>(valid_total) : 0.0;
  rep.tight_fraction =
      valid_total > 0 ? static_cast<double>(tight_total) / static_cast<double>(valid_total) : 0.0;
  return rep;
}

}  // namespace numrad
