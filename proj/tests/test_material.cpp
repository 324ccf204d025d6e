#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace poro2d;
using fixtures::rel;

// Reference values: tools/oracle_values.py (mpmath, 40 digits, generic
// eigensolver on A^-1 B).

TEST(Material, TopLayerScalars) {
  const LayerDerived d = derive_layer(fixtures::kTop);
  EXPECT_DOUBLE_EQ(d.rho, 1700.0);
  EXPECT_DOUBLE_EQ(d.rho_w, 4750.0);
  EXPECT_LT(rel(d.beta, 0.028985507246376811594), 1e-14);
  EXPECT_LT(rel(d.m, 6838552140.1896006895), 1e-14);
  EXPECT_LT(rel(d.lambda, 4.7e9), 1e-14);
  EXPECT_LT(rel(d.alpha, 10705745475.438092502), 1e-14);
}

TEST(Material, BottomLayerScalars) {
  const LayerDerived d = derive_layer(fixtures::kBottom);
  EXPECT_DOUBLE_EQ(d.rho, 2270.0);
  EXPECT_DOUBLE_EQ(d.rho_w, 7500.0);
  EXPECT_LT(rel(d.beta, 0.94054054054054054054), 1e-14);
  EXPECT_LT(rel(d.m, 7264186278.7939322055), 1e-14);
  EXPECT_LT(rel(d.lambda, -733333333.33333333333), 1e-13);
  EXPECT_LT(rel(d.alpha, 14492685768.982666417), 1e-14);
}

TEST(Material, Velocities) {
  const LayerDerived t = derive_layer(fixtures::kTop);
  const LayerDerived b = derive_layer(fixtures::kBottom);
  EXPECT_LT(rel(t.V_Pf, 2692.8338880133622296), 1e-13);
  EXPECT_LT(rel(t.V_Ps, 1186.121361974731407), 1e-13);
  EXPECT_LT(rel(t.V_S, 1409.5229572048187178), 1e-13);
  EXPECT_LT(rel(b.V_Pf, 2535.3433197018677243), 1e-13);
  EXPECT_LT(rel(b.V_Ps, 744.14209204185219344), 1e-13);
  EXPECT_LT(rel(b.V_S, 1415.8233677461452488), 1e-13);
  EXPECT_NEAR(t.V_Pf, 2692, 1);
  EXPECT_NEAR(t.V_Ps, 1186, 1);
  EXPECT_NEAR(t.V_S, 1409, 1);
  EXPECT_NEAR(b.V_Pf, 2535, 1);
  EXPECT_NEAR(b.V_Ps, 744, 1);
  EXPECT_NEAR(b.V_S, 1415, 1);
}

TEST(Material, EigenvectorMatrix) {
  const LayerDerived t = derive_layer(fixtures::kTop);
  const LayerDerived b = derive_layer(fixtures::kBottom);
  const double top_ref[2][2] = {{0.97186337126589265193, 0.13564990198061688589},
                                {-0.23554529838588097125, 0.9907568339873558657}};
  const double bot_ref[2][2] = {{0.99879574171857715466, 0.43625435994606024498},
                                {0.049061862223496115233, -0.899823390131670953}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(t.P[i][j], top_ref[i][j], 1e-14);
      EXPECT_NEAR(b.P[i][j], bot_ref[i][j], 1e-14);
    }
}

TEST(Material, EigenpairsDiagonalizeAinvB) {
  for (const auto& mat : {fixtures::kTop, fixtures::kBottom}) {
    const LayerDerived d = derive_layer(mat);
    // B v = V^2 A v for each column.
    for (int j = 0; j < 2; ++j) {
      const double V2 = j == 0 ? d.V_Pf * d.V_Pf : d.V_Ps * d.V_Ps;
      for (int i = 0; i < 2; ++i) {
        const double Bv = d.B[i][0] * d.P[0][j] + d.B[i][1] * d.P[1][j];
        const double Av = d.A[i][0] * d.P[0][j] + d.A[i][1] * d.P[1][j];
        EXPECT_LT(std::abs(Bv - V2 * Av), 1e-12 * std::abs(Bv) + 1e-3);
      }
    }
    EXPECT_GT(d.V_Pf, d.V_Ps);
  }
}

TEST(Material, MatrixStructure) {
  PoroelasticMaterial m = fixtures::kTop;
  const LayerDerived d = derive_scalars(m);
  auto [A, B] = assemble_matrices(d);
  EXPECT_EQ(A[0][1], m.rho_f);
  EXPECT_EQ(A[0][1], A[1][0]);
  EXPECT_EQ(B[0][1], B[1][0]);
  EXPECT_DOUBLE_EQ(B[0][1], d.m * d.beta);
  EXPECT_DOUBLE_EQ(B[1][1], d.m);

  LayerDerived z = d;
  z.material.rho_f = 0.0;
  EXPECT_EQ(assemble_matrices(z).first[0][1], 0.0);
  z = d;
  z.beta = 0.0;
  EXPECT_EQ(assemble_matrices(z).second[0][1], 0.0);
}

TEST(Material, IdentityEigenproblemIsDegenerate) {
  const Mat2 Id{{{1, 0}, {0, 1}}};
  EXPECT_THROW(eigendecompose(Id, Id), DomainError);
}

TEST(Material, DistinctDiagonalEigenproblem) {
  const Mat2 Id{{{1, 0}, {0, 1}}};
  const Mat2 B{{{4, 0}, {0, 1}}};
  const EigenSplit e = eigendecompose(Id, B);
  EXPECT_DOUBLE_EQ(e.V_Pf, 2.0);
  EXPECT_DOUBLE_EQ(e.V_Ps, 1.0);
  EXPECT_DOUBLE_EQ(e.P[0][0], 1.0);
  EXPECT_DOUBLE_EQ(e.P[1][1], 1.0);
  EXPECT_DOUBLE_EQ(e.P[0][1], 0.0);
}

TEST(Material, ZeroShearModulusGivesZeroShearVelocity) {
  LayerDerived d = derive_scalars(fixtures::kTop);
  d.material.mu = 0.0;
  EXPECT_EQ(shear_velocity(d), 0.0);
}

TEST(Material, RejectsInvalidInput) {
  PoroelasticMaterial m = fixtures::kTop;
  m.K_b = m.K_s;
  EXPECT_THROW(derive_layer(m), DomainError);
  m = fixtures::kTop;
  m.phi = 1.2;
  EXPECT_THROW(derive_layer(m), DomainError);
  m = fixtures::kTop;
  m.rho_s = -1;
  EXPECT_THROW(derive_layer(m), DomainError);
  m = fixtures::kTop;
  m.a = 0.5;
  EXPECT_THROW(derive_layer(m), DomainError);
}

TEST(Material, MaxVelocity) {
  const LayerDerived t = derive_layer(fixtures::kTop);
  const LayerDerived b = derive_layer(fixtures::kBottom);
  EXPECT_EQ(max_velocity(t, b), t.V_Pf);
}
