#include <gtest/gtest.h>

#include <random>

#include "poro2d/complex_kernel.hpp"

using namespace poro2d;

TEST(SqrtBranch, Examples) {
  EXPECT_EQ(sqrt_branch(1.0), cplx(1.0, 0.0));
  EXPECT_EQ(sqrt_branch(-4.0), cplx(0.0, 2.0));
  EXPECT_EQ(sqrt_branch(cplx(-4.0, -0.0)), cplx(0.0, 2.0));
  const cplx r = sqrt_branch(I);
  EXPECT_NEAR(r.real(), 1.0 / std::sqrt(2.0), 2e-16);
  EXPECT_NEAR(r.imag(), 1.0 / std::sqrt(2.0), 2e-16);
  EXPECT_EQ(sqrt_branch(0.0), cplx(0.0, 0.0));
}

TEST(SqrtBranch, SquareAndHalfPlane) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-10, 10);
  for (int k = 0; k < 1000; ++k) {
    const cplx z(U(rng), U(rng));
    const cplx r = sqrt_branch(z);
    EXPECT_LT(std::abs(r * r - z), 1e-14 * std::abs(z));
    EXPECT_GT(r.real(), 0.0);
  }
}

TEST(Kappa, Examples) {
  const double V = 2000.0;
  EXPECT_DOUBLE_EQ(kappa(V, 0.0).real(), 1.0 / V);
  EXPECT_EQ(kappa(V, 0.0).imag(), 0.0);

  const double s_in = 0.3 / V;
  const cplx k_in = kappa(V, cplx(0.0, s_in));
  EXPECT_NEAR(k_in.real(), std::sqrt(1.0 / (V * V) - s_in * s_in), 1e-19);
  EXPECT_EQ(k_in.imag(), 0.0);

  const double s_out = 2.0 / V;
  const cplx k_out = kappa(V, cplx(0.0, s_out));
  EXPECT_EQ(k_out.real(), 0.0);
  EXPECT_NEAR(k_out.imag(), std::sqrt(s_out * s_out - 1.0 / (V * V)), 1e-19);
  const cplx z = 1.0 / (V * V) + cplx(0.0, s_out) * cplx(0.0, s_out);
  EXPECT_LT(std::abs(k_out * k_out - z), 1e-14 * std::abs(z));
}

TEST(Kappa, RightSideOfCut) {
  const double V = 1000.0;
  // On the cut the right-hand limit follows sign(Im q).
  for (double s : {2e-3, -2e-3}) {
    const cplx on = kappa(V, cplx(0.0, s), CutSide::right);
    const cplx near = kappa(V, cplx(1e-12, s));
    EXPECT_NEAR(on.imag(), near.imag(), 1e-9 * std::abs(on));
    EXPECT_NEAR(on.real(), near.real(), 1e-9 * std::abs(on));
  }
  // Off the cut both sides agree.
  const cplx q(0.0, 0.5e-3);
  EXPECT_EQ(kappa(V, q, CutSide::right), kappa(V, q));
}
