#pragma once

namespace numrad {

/// The function pair f(t) = t^s, g(t) = t^{1-s} together with the exponents
/// (p, alpha, beta) of the product bounds. Requires 1/alpha + 1/beta = 1,
/// p >= 1, and p*alpha >= 2, p*beta >= 2.
struct PowerPair {
  double s;
  double p;
  double alpha;
  double beta;

  PowerPair(double s, double p, double alpha, double beta);
};

}  // namespace numrad
