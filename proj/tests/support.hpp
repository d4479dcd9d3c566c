#pragma once

#include <complex>
#include <random>

#include "numrad/types.hpp"

namespace numrad::test {

inline CMatrix basis_matrix(int n, int i, int j) {
  CMatrix E = CMatrix::Zero(n, n);
  E(i, j) = 1.0;
  return E;
}

inline CMatrix diag2(cplx a, cplx b) {
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = a;
  D(1, 1) = b;
  return D;
}

// test-side RNG, deliberately unrelated to the library's Philox streams
inline CMatrix rand_cmatrix(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
  std::normal_distribution<double> nd;
  CMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = scale * cplx(nd(rng), nd(rng)) / std::sqrt(2.0);
  return M;
}

inline CMatrix rand_hermitian(std::mt19937_64& rng, int n, double scale = 1.0) {
  const CMatrix G = rand_cmatrix(rng, n, n, scale);
  return 0.5 * (G + G.adjoint());
}

inline CMatrix rand_psd(std::mt19937_64& rng, int n, double scale = 1.0) {
  const CMatrix G = rand_cmatrix(rng, n, n, scale);
  return G.adjoint() * G;
}

inline CMatrix rand_pd(std::mt19937_64& rng, int n, double scale = 1.0) {
  return rand_psd(rng, n, scale) + 0.1 * scale * CMatrix::Identity(n, n);
}

inline CVector rand_cvector(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> nd;
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * cplx(nd(rng), nd(rng)) / std::sqrt(2.0);
  return v;
}

// brute-force lower bound on w(T) by Rayleigh sampling over Haar unit vectors
inline double rayleigh_sample_max(const CMatrix& T, long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(T.rows());
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    CVector x = rand_cvector(rng, n);
    x.normalize();
    best = std::max(best, std::abs((x.adjoint() * (T * x))(0, 0)));
  }
  return best;
}

}  // namespace numrad::test
