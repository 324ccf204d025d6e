#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace poro2d;
using fixtures::rel;

TEST(Validation, FermatOracleSpecialCases) {
  const PathSpec same{533, 2000, 500, 2000, 400, 3000};
  EXPECT_LT(rel(fermat_oracle(same), std::hypot(400.0, 1033.0) / 2000), 1e-13);
  const PathSpec vertical{533, 1000, 500, 2000, 0, 3000};
  EXPECT_DOUBLE_EQ(fermat_oracle(vertical), 533 / 1000.0 + 500 / 2000.0);
  const PathSpec mixed{533, 1186.121361974731407, 500, 2692.8338880133622296, 400, 2692.9};
  EXPECT_LT(rel(fermat_oracle(mixed), 0.67341821844838601814), 1e-12);
}

TEST(Validation, GreenOracle) {
  const Receiver r{0.0, 900.0};
  EXPECT_EQ(green2d_oracle(2000, 1.0, 1.0, r, 500, 0.1), Vec2{});
  const Vec2 v = green2d_oracle(2000, 1.0, 1.0, r, 500, 0.5);
  EXPECT_EQ(v.x, 0.0);
  const Model m = fixtures::golden_model();
  const Vec2 a = incident_kernel(m, Incidence::Ps, fixtures::kAbove, 0.5);
  const Vec2 b = green2d_oracle(m.top.V_Ps, m.amplitudes.F_Ps, m.top.P[0][1], fixtures::kAbove, 500, 0.5);
  EXPECT_LT(norm(a - b), 1e-4 * norm(b));
}

TEST(Validation, HomogeneousCheck) {
  for (const auto& mat : {fixtures::kTop, fixtures::kBottom}) {
    const HomogeneousReport rep = homogeneous_check(mat);
    EXPECT_TRUE(rep.pass()) << rep.reflection.str() << "\n" << rep.continuation.str();
    EXPECT_EQ(rep.reflection.samples, 400u);
  }
}

TEST(Validation, MismatchedLayersReflect) {
  const Model m = fixtures::golden_model();
  double r = 0;
  for (double s : {1e-4, 3e-4, 6e-4})
    r = std::max(r, std::abs(solve_coeffs(cplx(s, 0), Incidence::Pf, m.top, m.bottom).R_toPf()));
  EXPECT_GT(r, 1e-8);
}

TEST(Validation, ReportPassFlag) {
  OracleReport r{"x", 0, 0, 0, 1e-3};
  r.finish();
  EXPECT_FALSE(r.pass);  // no samples
  r.add(1e-4, 1e-4);
  r.finish();
  EXPECT_TRUE(r.pass);
  r.add(1e-2, 1e-2);
  r.finish();
  EXPECT_FALSE(r.pass);
}
