#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace poro2d;

namespace {
constexpr int kCases = 10'000;
}

TEST(Properties, ConjugateSymmetry) {
  const props::Result r = props::conjugate_symmetry(kCases);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Properties, LinearInSourceMix) {
  const props::Result r = props::linearity(kCases);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Properties, CausalityExactZeros) {
  const props::Result r = props::causality(kCases);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Properties, BranchCutIdentities) {
  const props::Result r = props::branch_cut(kCases);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Properties, HeadNeverAfterBody) {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> U(0, 1);
  for (int k = 0; k < kCases; ++k) {
    const PathSpec p{2000 * U(rng), 200 + 2800 * U(rng), 2000 * U(rng), 200 + 2800 * U(rng), -4000 + 8000 * U(rng),
                     3000};
    ASSERT_LE(head_time_formula(p), arrival_body(p) * (1 + 1e-14));
  }
}
