#include "numrad/power_pair.hpp"

#include <cmath>
#include <string>

#include "numrad/errors.hpp"

namespace numrad {

PowerPair::PowerPair(double s_, double p_, double alpha_, double beta_)
    : s(s_), p(p_), alpha(alpha_), beta(beta_) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("PowerPair: s must lie in (0,1)");
  if (!(p >= 1.0)) throw DomainError("PowerPair: p must be >= 1");
  if (!(alpha > 1.0 && beta > 1.0)) throw DomainError("PowerPair: alpha, beta must be > 1");
  if (std::abs(1.0 / alpha + 1.0 / beta - 1.0) > 1e-12)
    throw DomainError("PowerPair: conjugate exponents must satisfy 1/alpha + 1/beta = 1");
  // tolerance admits pairs like (p, alpha) = (1.5, 4/3) whose product rounds just under 2
  if (p * alpha < 2.0 - 1e-9 || p * beta < 2.0 - 1e-9)
    throw DomainError("PowerPair: requires p*alpha >= 2 and p*beta >= 2, got " +
                      std::to_string(p * alpha) + ", " + std::to_string(p * beta));
}

}  // namespace numrad
