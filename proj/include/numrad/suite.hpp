#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numrad/report.hpp"
#include "numrad/theta_sweep.hpp"

namespace numrad {

/// Known suite ids: "lemmas", "s2", "s3", "s4-offdiag", "s4-full", "all".
bool is_known_suite(const std::string& suite_id);

/// Reports produced by one trial; a pure function of (suite_id, dim, seed, k),
/// independent of any other suite or trial.
std::vector<BoundReport> run_trial(const std::string& suite_id, int dim, std::uint64_t seed,
                                   std::uint64_t k, const ThetaSweepConfig& cfg);

/// Draws `trials` hypothesis-respecting instances per suite and aggregates the
/// reports. Deterministic given (suite_id, trials, dim, seed, cfg); trials run
/// in parallel (threads = 0 picks the hardware count) without affecting the
/// result. dim must lie in [2, 16].
SuiteReport run_suite(const std::string& suite_id, int trials, int dim, std::uint64_t seed,
                      const ThetaSweepConfig& cfg = {}, int threads = 0);

}  // namespace numrad
