#include "numrad/instance_gen.hpp"

#include <cmath>

#include "numrad/errors.hpp"
#include "numrad/spectral.hpp"

namespace numrad {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_dim(int dim, const char* who) {
  if (dim < 1 || dim > 64)
    throw DomainError(std::string(who) + ": dim must lie in [1, 64], got " + std::to_string(dim));
}

inline void philox_round(std::uint32_t c[4], const std::uint32_t k[2]) {
  constexpr std::uint64_t M0 = 0xD2511F53ull;
  constexpr std::uint64_t M1 = 0xCD9E8D57ull;
  const std::uint64_t p0 = M0 * c[0];
  const std::uint64_t p1 = M1 * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t out0 = hi1 ^ c[1] ^ k[0];
  const std::uint32_t out2 = hi0 ^ c[3] ^ k[1];
  c[0] = out0;
  c[1] = lo1;
  c[2] = out2;
  c[3] = lo0;
}

}  // namespace

namespace detail {
void philox4x32_10(const std::uint32_t ctr[4], const std::uint32_t key[2], std::uint32_t out[4]) {
  constexpr std::uint32_t W0 = 0x9E3779B9u;
  constexpr std::uint32_t W1 = 0xBB67AE85u;
  std::uint32_t c[4] = {ctr[0], ctr[1], ctr[2], ctr[3]};
  std::uint32_t k[2] = {key[0], key[1]};
  for (int r = 0; r < 10; ++r) {
    philox_round(c, k);
    k[0] += W0;
    k[1] += W1;
  }
  out[0] = c[0];
  out[1] = c[1];
  out[2] = c[2];
  out[3] = c[3];
}
}  // namespace detail

RandomStream::RandomStream(std::uint64_t seed, std::uint32_t stream_id, std::uint64_t trial) {
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
  ctr_[0] = 0;
  ctr_[1] = static_cast<std::uint32_t>(trial);
  ctr_[2] = static_cast<std::uint32_t>(trial >> 32);
  ctr_[3] = stream_id;
}

void RandomStream::refill() {
  detail::philox4x32_10(ctr_, key_, buf_);
  ++ctr_[0];
  pos_ = 0;
}

std::uint32_t RandomStream::next_u32() {
  if (pos_ >= 4) refill();
  return buf_[pos_++];
}

double RandomStream::u01() {
  const std::uint64_t a = next_u32() >> 5;  // 27 bits
  const std::uint64_t b = next_u32() >> 6;  // 26 bits
  return static_cast<double>((a << 26) + b) * (1.0 / 9007199254740992.0);  // / 2^53
}

double RandomStream::normal() {
  const double u1 = u01();
  const double u2 = u01();
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(kTwoPi * u2);
}

cplx RandomStream::cnormal() {
  const double u1 = u01();
  const double u2 = u01();
  const double r = std::sqrt(-std::log1p(-u1));  // includes the 1/sqrt(2) variance split
  return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

namespace {

CMatrix ginibre(RandomStream& rs, int dim, double scale) {
  CMatrix G(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) G(i, j) = scale * rs.cnormal();
  return G;
}

CMatrix haar_unitary(RandomStream& rs, int dim) {
  CMatrix U = ginibre(rs, dim, 1.0);
  // modified Gram-Schmidt, two passes
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < dim; ++j) {
      for (int i = 0; i < j; ++i) U.col(j) -= (U.col(i).adjoint() * U.col(j))(0, 0) * U.col(i);
      const double nrm = U.col(j).norm();
      if (nrm < 1e-280) throw ConstructionFailure("haar_unitary: rank-deficient sample");
      U.col(j) /= nrm;
    }
  // phase fixing: first non-negligible entry of each column made real positive
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const cplx z = U(i, j);
      if (std::abs(z) > 1e-14) {
        U.col(j) *= std::conj(z) / std::abs(z);
        break;
      }
    }
  }
  return U;
}

}  // namespace

CMatrix gen_matrix(RandomStream& rs, int dim, Ensemble ensemble, double scale) {
  check_dim(dim, "gen_matrix");
  switch (ensemble) {
    case Ensemble::Ginibre:
      return ginibre(rs, dim, scale);
    case Ensemble::Hermitian: {
      const CMatrix G = ginibre(rs, dim, scale);
      return 0.5 * (G + G.adjoint());
    }
    case Ensemble::Psd: {
      const CMatrix G = ginibre(rs, dim, scale);
      return G.adjoint() * G;
    }
    case Ensemble::Pd: {
      const CMatrix G = ginibre(rs, dim, scale);
      return G.adjoint() * G + 0.1 * scale * CMatrix::Identity(dim, dim);
    }
    case Ensemble::Unitary:
      return haar_unitary(rs, dim);
  }
  throw DomainError("gen_matrix: unknown ensemble");
}

CMatrix gen_matrix(const GenSpec& spec) {
  RandomStream rs(spec.seed, 0, 0);
  return gen_matrix(rs, spec.dim, spec.ensemble, spec.scale);
}

CVector gen_vector(RandomStream& rs, int dim, double scale) {
  check_dim(dim, "gen_vector");
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = scale * rs.cnormal();
  return v;
}

std::pair<CMatrix, CMatrix> gen_intertwined_pair(RandomStream& rs, int dim, double scale,
                                                 IntertwineMode mode) {
  check_dim(dim, "gen_intertwined_pair");
  const CMatrix V = haar_unitary(rs, dim);
  RVector D(dim), E(dim);
  for (int i = 0; i < dim; ++i) D(i) = std::abs(rs.normal()) * scale;
  for (int i = 0; i < dim; ++i) E(i) = rs.normal() * scale;
  CMatrix X = V * D.asDiagonal() * V.adjoint();
  const CMatrix Y = V * E.asDiagonal() * V.adjoint();
  if (mode == IntertwineMode::Polar) X = haar_unitary(rs, dim) * X;

  const CMatrix aX = abs_value(X);
  const double rscale = std::max(1.0, X.norm() * Y.norm());
  const double res = (aX * Y - Y.adjoint() * aX).norm();
  if (res > 1e-10 * rscale)
    throw ConstructionFailure("gen_intertwined_pair: residual " + std::to_string(res));
  return {X, Y};
}

std::pair<CMatrix, CMatrix> gen_intertwined_pair(const GenSpec& spec, IntertwineMode mode) {
  RandomStream rs(spec.seed, 0, 0);
  return gen_intertwined_pair(rs, spec.dim, spec.scale, mode);
}

std::pair<CMatrix, CMatrix> gen_commuting_pair(RandomStream& rs, int dim, double scale) {
  check_dim(dim, "gen_commuting_pair");
  const CMatrix V = haar_unitary(rs, dim);
  CVector L(dim);
  RVector E(dim);
  for (int i = 0; i < dim; ++i) L(i) = scale * rs.cnormal();
  for (int i = 0; i < dim; ++i) E(i) = scale * rs.normal();
  const CMatrix X = V * L.asDiagonal() * V.adjoint();
  const CMatrix Y = V * E.asDiagonal() * V.adjoint();

  const double rscale = std::max(1.0, X.norm() * Y.norm());
  const double res_comm = (X * Y - Y * X).norm();
  const CMatrix X2 = X * X, Y2 = Y * Y;
  const CMatrix aX2 = abs_value(X2);
  const double rscale2 = std::max(1.0, X2.norm() * Y2.norm());
  const double res_tw = (aX2 * Y2 - Y2.adjoint() * aX2).norm();
  if (res_comm > 1e-10 * rscale || res_tw > 1e-10 * rscale2)
    throw ConstructionFailure("gen_commuting_pair: residuals " + std::to_string(res_comm) + ", " +
                              std::to_string(res_tw));
  return {X, Y};
}

std::pair<CMatrix, CMatrix> gen_commuting_pair(const GenSpec& spec) {
  RandomStream rs(spec.seed, 0, 0);
  return gen_commuting_pair(rs, spec.dim, spec.scale);
}

BlockMatrix gen_blocks(RandomStream& rs, int dim, double scale, int n, BlockStructure structure) {
  check_dim(dim, "gen_blocks");
  if (structure == BlockStructure::Offdiag2 && n != 2)
    throw DomainError("gen_blocks: offdiag2 structure forces n = 2");
  if (n < 1) throw DomainError("gen_blocks: n must be >= 1");
  BlockMatrix T = make_blocks(n, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (structure == BlockStructure::Offdiag2 && i == j) continue;
      T.at(i, j) = ginibre(rs, dim, scale);
    }
  return T;
}

BlockMatrix gen_blocks(const GenSpec& spec, int n, BlockStructure structure) {
  RandomStream rs(spec.seed, 0, 0);
  return gen_blocks(rs, spec.dim, spec.scale, n, structure);
}

}  // namespace numrad
