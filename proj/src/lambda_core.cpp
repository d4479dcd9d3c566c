#include "numrad/lambda_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numrad/errors.hpp"

namespace numrad::detail {

void HermLambda::resize(int n) {
  if (n_ == n) return;
  n_ = n;
  a_.assign(static_cast<size_t>(n) * n, cplx(0, 0));
  v_.assign(n, cplx(0, 0));
  w_.assign(n, cplx(0, 0));
  d_.assign(n, 0.0);
  e_.assign(n, 0.0);
}

void HermLambda::set(const CMatrix& M) {
  resize(static_cast<int>(M.rows()));
  cplx* a = a_.data();
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      // symmetrize so the tridiagonalization sees an exactly Hermitian matrix
      a[i + j * n_] = 0.5 * (M(i, j) + std::conj(M(j, i)));
    }
}

void HermLambda::set_pencil(const CMatrix* K0, const CMatrix& P1, const CMatrix& P2, double c,
                            double s) {
  resize(static_cast<int>(P1.rows()));
  cplx* a = a_.data();
  const cplx* p1 = P1.data();
  const cplx* p2 = P2.data();
  const size_t nn = static_cast<size_t>(n_) * n_;
  if (K0) {
    const cplx* k0 = K0->data();
    for (size_t i = 0; i < nn; ++i) a[i] = k0[i] + c * p1[i] + s * p2[i];
  } else {
    for (size_t i = 0; i < nn; ++i) a[i] = c * p1[i] + s * p2[i];
  }
}

void HermLambda::tridiagonalize() {
  const int n = n_;
  cplx* a = a_.data();
  auto at = [&](int i, int j) -> cplx& { return a[i + j * n]; };

  for (int k = 0; k + 2 < n; ++k) {
    const int m = n - k - 1;  // size of the trailing block
    // x = A(k+1 .. n-1, k)
    double sigma2 = 0.0;
    for (int i = 0; i < m; ++i) sigma2 += std::norm(at(k + 1 + i, k));
    const double sigma = std::sqrt(sigma2);
    e_[k] = sigma;
    if (sigma == 0.0) continue;

    const cplx x0 = at(k + 1, k);
    const double ax0 = std::abs(x0);
    const cplx phase = ax0 > 0.0 ? x0 / ax0 : cplx(1, 0);

    // v = x + phase*sigma*e1, normalized
    cplx* v = v_.data();
    for (int i = 0; i < m; ++i) v[i] = at(k + 1 + i, k);
    v[0] += phase * sigma;
    double vn2 = 0.0;
    for (int i = 0; i < m; ++i) vn2 += std::norm(v[i]);
    const double inv = 1.0 / std::sqrt(vn2);
    for (int i = 0; i < m; ++i) v[i] *= inv;

    // w = 2*(A_sub v - (v^* A_sub v) v) ; A_sub -= v w^* + w v^*
    cplx* w = w_.data();
    for (int i = 0; i < m; ++i) w[i] = cplx(0, 0);
    for (int j = 0; j < m; ++j) {
      const cplx vj = v[j];
      const cplx* col = a + (k + 1) + (k + 1 + j) * n;
      for (int i = 0; i < m; ++i) w[i] += col[i] * vj;
    }
    double gamma = 0.0;  // v^* (A v), real for Hermitian A
    for (int i = 0; i < m; ++i) gamma += std::real(std::conj(v[i]) * w[i]);
    for (int i = 0; i < m; ++i) w[i] = 2.0 * (w[i] - gamma * v[i]);

    for (int j = 0; j < m; ++j) {
      const cplx wj = std::conj(w[j]);
      const cplx vj = std::conj(v[j]);
      cplx* col = a + (k + 1) + (k + 1 + j) * n;
      for (int i = 0; i < m; ++i) col[i] -= v[i] * wj + w[i] * vj;
    }
  }
  for (int i = 0; i < n; ++i) d_[i] = std::real(at(i, i));
  if (n >= 2) e_[n - 2] = std::abs(at(n - 1, n - 2));
  e_[n - 1] = 0.0;
}

// Implicit-shift QL on the real symmetric tridiagonal (d_, e_), values only.
void HermLambda::ql_values() {
  const int n = n_;
  const double eps = std::numeric_limits<double>::epsilon();
  double* d = d_.data();
  double* e = e_.data();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericalFailure("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::sqrt(g * g + 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::sqrt(f * f + g * g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          const double ir = 1.0 / r;
          s = f * ir;
          c = g * ir;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

double HermLambda::lambda_max() { return lambda_extremes().second; }

std::pair<double, double> HermLambda::lambda_extremes() {
  if (n_ == 0) return {0.0, 0.0};
  if (n_ == 1) {
    const double v = std::real(a_[0]);
    return {v, v};
  }
  if (n_ == 2) {
    // closed form keeps the hot 2x2 case cheap
    const double a = std::real(a_[0]);
    const double b = std::real(a_[3]);
    const double t = std::abs(0.5 * (a_[1] + std::conj(a_[2])));
    const double mid = 0.5 * (a + b);
    const double rad = std::hypot(0.5 * (a - b), t);
    return {mid - rad, mid + rad};
  }
  tridiagonalize();
  ql_values();
  double lo = d_[0], hi = d_[0];
  for (int i = 1; i < n_; ++i) {
    lo = std::min(lo, d_[i]);
    hi = std::max(hi, d_[i]);
  }
  return {lo, hi};
}

}  // namespace numrad::detail
