#include <doctest.h>

#include <random>

#include "numrad/block_ops.hpp"
#include "numrad/errors.hpp"
#include "numrad/instance_gen.hpp"
#include "numrad/numerical_range.hpp"
#include "numrad/spectral.hpp"
#include "support.hpp"

using namespace numrad;
using namespace numrad::test;

namespace {
BlockMatrix fixture_block() {
  BlockMatrix T = make_blocks(2, 2);
  T.at(0, 0) = CMatrix::Identity(2, 2);
  T.at(0, 1) = basis_matrix(2, 0, 1);
  T.at(1, 0) = basis_matrix(2, 1, 0);
  T.at(1, 1) = CMatrix::Identity(2, 2);
  return T;
}
}  // namespace

TEST_CASE("flatten and assemble") {
  const CMatrix M = flatten(fixture_block());
  // I4 plus ones at (0,3) and (3,0)
  CMatrix expected = CMatrix::Identity(4, 4);
  expected(0, 3) = 1.0;
  expected(3, 0) = 1.0;
  CHECK((M - expected).norm() == 0.0);

  std::mt19937_64 rng(3);
  const CMatrix single = rand_cmatrix(rng, 3, 3);
  BlockMatrix one = make_blocks(1, 3);
  one.at(0, 0) = single;
  CHECK((flatten(one) - single).norm() == 0.0);

  CHECK(flatten(make_blocks(2, 2)).norm() == 0.0);

  const BlockMatrix back = assemble(M, 2);
  CHECK(back.n == 2);
  CHECK(back.block_dim == 2);
  CHECK((flatten(back) - M).norm() == 0.0);
  CHECK_THROWS_AS(assemble(M, 3), DimensionMismatch);
}

TEST_CASE("offdiag2") {
  const CMatrix X = basis_matrix(2, 0, 1), Y = basis_matrix(2, 1, 0);
  const BlockMatrix T = offdiag2(X, Y);
  CHECK(T.at(0, 0).norm() == 0.0);
  CHECK(T.at(1, 1).norm() == 0.0);
  const CMatrix M = flatten(T);
  CHECK(std::abs(M(0, 3) - cplx(1, 0)) == 0.0);
  CHECK(std::abs(M(3, 0) - cplx(1, 0)) == 0.0);
  CHECK(op_norm(flatten(offdiag2(CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)))) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(offdiag2(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("scalarize_fg") {
  const BlockMatrix T = fixture_block();
  const RMatrix off = scalarize_fg(T, 0.5, false);
  const RMatrix on = scalarize_fg(T, 0.5, true);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(off(i, j) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(on(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }

  std::mt19937_64 rng(5);
  const CMatrix H = rand_psd(rng, 3);
  BlockMatrix single = make_blocks(1, 3);
  single.at(0, 0) = H;
  CHECK(scalarize_fg(single, 0.5, false)(0, 0) == doctest::Approx(op_norm(H)).epsilon(1e-10));

  // off-diagonal entries reduce to ||T_ij|| for every power exponent
  RandomStream rs(9, 0, 0);
  const BlockMatrix R = gen_blocks(rs, 3, 1.0, 2, BlockStructure::Full);
  for (double s : {0.3, 0.5, 0.7}) {
    const RMatrix sc = scalarize_fg(R, s, false);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(sc(i, j) == doctest::Approx(op_norm(R.at(i, j))).epsilon(1e-10));
  }
  CHECK_THROWS_AS(scalarize_fg(T, 0.0, false), DomainError);
}

TEST_CASE("scalarize_weighted") {
  const Weight I2 = make_weight(CMatrix::Identity(2, 2));
  const BlockMatrix T = fixture_block();
  ThetaSweepConfig cfg;
  const RMatrix m1 = scalarize_weighted(T, I2, cfg, WeightedScalarization::NormOffdiag);
  const RMatrix m2 = scalarize_weighted(T, I2, cfg, WeightedScalarization::WbOffdiag);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(m1(i, j) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(m2(i, j) == doctest::Approx(1.0).epsilon(1e-9));
    }

  std::mt19937_64 rng(7);
  const CMatrix B = rand_cmatrix(rng, 3, 3);
  BlockMatrix single = make_blocks(1, 3);
  single.at(0, 0) = B;
  const Weight W = make_weight(rand_pd(rng, 3));
  CHECK(scalarize_weighted(single, W, cfg, WeightedScalarization::NormOffdiag)(0, 0) ==
        doctest::Approx(a_numerical_radius(W, B, cfg)).epsilon(1e-10));

  const Weight psd = make_weight(diag2(1.0, 0.0));
  BlockMatrix T2 = make_blocks(2, 2);
  T2.at(0, 1) = basis_matrix(2, 0, 1);
  T2.at(1, 0) = basis_matrix(2, 1, 0);
  CHECK_THROWS_AS(scalarize_weighted(T2, psd, cfg, WeightedScalarization::WbOffdiag),
                  SingularWeight);
}

TEST_CASE("w_nonneg") {
  CMatrix N = CMatrix::Zero(2, 2);
  N(0, 1) = 1.0;
  CHECK(w_nonneg(N) == doctest::Approx(0.5).epsilon(1e-12));
  CMatrix ones = CMatrix::Constant(2, 2, cplx(1, 0));
  CHECK(w_nonneg(ones) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w_nonneg(diag2(3.0, 7.0)) == doctest::Approx(7.0));

  CHECK_THROWS_AS(w_nonneg(diag2(-1.0, 1.0)), NegativeEntry);
  CHECK_THROWS_AS(w_nonneg(diag2(cplx(0, 1), 1.0)), NegativeEntry);

  // oracle equivalence with the theta-sweep numerical radius
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ud(0.0, 3.0);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 5);
    CMatrix M = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = ud(rng);
    CHECK(w_nonneg(M) == doctest::Approx(numerical_radius(M)).epsilon(1e-9));
  }
}

TEST_CASE("w_offdiag_pair matches the flattened radius") {
  std::mt19937_64 rng(13);
  ThetaSweepConfig cfg;
  for (int rep = 0; rep < 20; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const CMatrix X = rand_cmatrix(rng, d, d, 1.5);
    const CMatrix Y = rand_cmatrix(rng, d, d, 0.8);
    const double via_pencil = w_offdiag_pair(X, Y, cfg);
    const double via_flatten = numerical_radius(flatten(offdiag2(X, Y)), cfg);
    CHECK(via_pencil == doctest::Approx(via_flatten).epsilon(1e-9));
  }
}

TEST_CASE("wb_offdiag_theta matches the block congruence") {
  std::mt19937_64 rng(17);
  ThetaSweepConfig cfg;
  for (int rep = 0; rep < 12; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Weight W = make_weight(rand_pd(rng, d));
    const CMatrix T12 = rand_cmatrix(rng, d, d);
    const CMatrix T21 = rand_cmatrix(rng, d, d);
    const Weight B = BlockWeight{W, 2}.materialize();
    const double cong = a_numerical_radius(B, flatten(offdiag2(T12, T21)), cfg);
    CHECK(wb_offdiag_theta(T12, T21, W, cfg) == doctest::Approx(cong).epsilon(1e-8));
  }
}

TEST_CASE("block radius identities") {
  std::mt19937_64 rng(19);
  ThetaSweepConfig cfg;
  for (int rep = 0; rep < 10; ++rep) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const Weight W = make_weight(rand_pd(rng, d));
    const Weight B = BlockWeight{W, 2}.materialize();
    const CMatrix T12 = rand_cmatrix(rng, d, d);
    const CMatrix T21 = rand_cmatrix(rng, d, d);

    // swapping the pair and rotating one block leave w_B unchanged
    const double base = a_numerical_radius(B, flatten(offdiag2(T12, T21)), cfg);
    const double swapped = a_numerical_radius(B, flatten(offdiag2(T21, T12)), cfg);
    CHECK(swapped == doctest::Approx(base).epsilon(1e-8));
    const cplx phase = std::polar(1.0, 0.9);
    const double rotated = a_numerical_radius(B, flatten(offdiag2(T12, phase * T21)), cfg);
    CHECK(rotated == doctest::Approx(base).epsilon(1e-8));

    // equal blocks collapse to w_A
    const double collapsed = a_numerical_radius(B, flatten(offdiag2(T12, T12)), cfg);
    CHECK(collapsed == doctest::Approx(a_numerical_radius(W, T12, cfg)).epsilon(1e-8));
  }
}

TEST_CASE("scalarization dominance at n = 3") {
  std::mt19937_64 rng(23);
  ThetaSweepConfig cfg;
  for (int rep = 0; rep < 6; ++rep) {
    BlockMatrix T = make_blocks(3, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) T.at(i, j) = rand_cmatrix(rng, 2, 2);
    const double w = numerical_radius(flatten(T), cfg);
    for (double s : {0.3, 0.5, 0.7}) {
      CHECK(w <= w_nonneg(scalarize_fg(T, s, false)) + 1e-8 * std::max(1.0, w));
      CHECK(w <= w_nonneg(scalarize_fg(T, s, true)) + 1e-8 * std::max(1.0, w));
    }

    const Weight W = make_weight(rand_pd(rng, 2));
    const Weight B = BlockWeight{W, 3}.materialize();
    const CMatrix M = flatten(T);
    const double wb = a_numerical_radius(B, M, cfg);
    const RMatrix m1 = scalarize_weighted(T, W, cfg, WeightedScalarization::NormOffdiag);
    const RMatrix m2 = scalarize_weighted(T, W, cfg, WeightedScalarization::WbOffdiag);
    CHECK(wb <= w_nonneg(m1) + 1e-8 * std::max(1.0, wb));
    CHECK(wb <= w_nonneg(m2) + 1e-8 * std::max(1.0, wb));

    // ||T||_B <= ||(||T_ij||_A)||
    RMatrix N(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) N(i, j) = a_norm(W, T.at(i, j));
    CHECK(a_norm(B, M) <= op_norm(N.cast<cplx>()) + 1e-8 * std::max(1.0, a_norm(B, M)));
  }
}
