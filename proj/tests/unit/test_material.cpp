#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "poromix/errors.hpp"
#include "poromix/material.hpp"
#include "poromix/random_material.hpp"

using namespace poromix;

namespace {

Eigen::MatrixXd dense(const Matrix29& a) { return Eigen::MatrixXd(a); }

}  // namespace

TEST_CASE("identity material has unit moduli") {
  const MaterialConstants m = identity_material();
  CHECK(validate_symmetries(m).ok());
  const QuadraticForm f = assemble_quadratic_form(m);
  CHECK(f.xi_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.xi_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.admissible());
}

TEST_CASE("moduli agree with an independent Jacobi eigen solve") {
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 40; ++k) {
    const MaterialConstants m =
        k % 2 ? random_broad_material(rng) : random_material(rng);
    const QuadraticForm f = assemble_quadratic_form(m);
    const auto [lo, hi] = oracle::moduli(dense(f.A));
    CHECK(f.xi_min == doctest::Approx(lo).epsilon(1e-10));
    CHECK(f.xi_max == doctest::Approx(hi).epsilon(1e-10));
  }
}

TEST_CASE("assembled matrix reproduces the term-by-term energy") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const MaterialConstants m = random_broad_material(rng);
    const QuadraticForm f = assemble_quadratic_form(m);
    const PointState ps = random_point_state(rng);
    const StrainVector E = strain_vector(ps);
    const double W = 0.5 * E.vec().dot(f.A * E.vec());
    CHECK(W == doctest::Approx(oracle::energy_density(m, ps)).epsilon(1e-12));
  }
}

TEST_CASE("form and constants round-trip") {
  Rng rng(11);
  const MaterialConstants m = random_material(rng);
  const MaterialConstants back =
      constants_from_form(assemble_quadratic_form(m), m);
  for (int i = 0; i < 81; ++i) {
    CHECK(back.A.v[i] == doctest::Approx(m.A.v[i]).epsilon(1e-14));
    CHECK(back.B.v[i] == doctest::Approx(m.B.v[i]).epsilon(1e-14));
    CHECK(back.C.v[i] == doctest::Approx(m.C.v[i]).epsilon(1e-14));
  }
  for (int i = 0; i < 9; ++i) {
    CHECK(back.M.v[i] == doctest::Approx(m.M.v[i]).epsilon(1e-14));
    CHECK(back.b.v[i] == doctest::Approx(m.b.v[i]).epsilon(1e-14));
    CHECK(back.beta.v[i] == doctest::Approx(m.beta.v[i]).epsilon(1e-14));
  }
  CHECK(back.tau == doctest::Approx(m.tau).epsilon(1e-14));
  CHECK(back.rho2 == m.rho2);
}

TEST_CASE("symmetry violations are reported by relation") {
  MaterialConstants m = identity_material();
  m.A(0, 1, 2, 2) += 1e-6;
  const SymmetryReport r = validate_symmetries(m);
  CHECK_FALSE(r.ok());
  CHECK(r.deviation("A_ijrs=A_jirs") == doctest::Approx(1e-6));
  CHECK(r.deviation("A_ijrs=A_rsij") == doctest::Approx(1e-6));
  CHECK(r.deviation("C_ijrs=C_rsij") == 0.0);
  CHECK_THROWS_AS(require_symmetries(m), SymmetryViolation);

  MaterialConstants n = identity_material();
  n.alpha(0, 2) = 0.5;
  CHECK(validate_symmetries(n).deviation("alpha_ij=alpha_ji") ==
        doctest::Approx(0.5));
  // Below tolerance passes.
  MaterialConstants p = identity_material();
  p.a(1, 0) += 1e-14;
  CHECK(validate_symmetries(p).ok());
}

TEST_CASE("indefinite and semidefinite forms are rejected") {
  MaterialConstants m = identity_material();
  m.zeta = -1.0;
  const QuadraticForm f = assemble_quadratic_form(m);
  CHECK(f.xi_min == doctest::Approx(-1.0));
  CHECK_FALSE(f.admissible());
  CHECK_THROWS_AS(elastic_moduli_bounds(f), NotPositiveDefinite);

  m.zeta = 0.0;  // semidefinite: a zero mode
  CHECK_THROWS_AS(elastic_moduli_bounds(assemble_quadratic_form(m)),
                  NotPositiveDefinite);
}

TEST_CASE("bounds from a hand-made spectrum") {
  // Diagonal form: the antisymmetric e directions are excluded, so the 100
  // placed on e_12 - e_21 must not show up.
  Matrix29 A = Matrix29::Identity() * 2.0;
  A(slot::phi2, slot::phi2) = 0.25;
  A(slot::d + 1, slot::d + 1) = 9.0;
  const Eigen::Matrix<double, 29, 1> w = [] {
    Eigen::Matrix<double, 29, 1> v = Eigen::Matrix<double, 29, 1>::Zero();
    v(slot::e + 1) = 1 / std::sqrt(2.0);
    v(slot::e + 3) = -1 / std::sqrt(2.0);
    return v;
  }();
  A += 100.0 * w * w.transpose();
  const QuadraticForm f = QuadraticForm::from_matrix(A);
  CHECK(f.xi_min == doctest::Approx(0.25));
  CHECK(f.xi_max == doctest::Approx(9.0));
  const ModuliBounds b = elastic_moduli_bounds(f);
  CHECK(b.xi_min == doctest::Approx(0.25));
}

TEST_CASE("admissible basis is orthonormal and symmetric in e") {
  const auto& B = admissible_basis();
  CHECK((B.transpose() * B - Eigen::Matrix<double, 26, 26>::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  for (int k = 0; k < 26; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(B(3 * i + j, k) == doctest::Approx(B(3 * j + i, k)));
}

TEST_CASE("Jacobi fallback matches the primary eigen solver") {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n : {2, 5, 12}) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = u(rng);
    const Eigen::VectorXd a = symmetric_eigenvalues(m);
    const Eigen::VectorXd b = jacobi_eigenvalues(m);
    Eigen::VectorXd c;
    Eigen::MatrixXd V;
    oracle::jacobi(m, c, V);
    std::sort(c.data(), c.data() + n);
    for (int i = 0; i < n; ++i) {
      CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-11));
      CHECK(a[i] == doctest::Approx(c[i]).epsilon(1e-11));
    }
  }
}

TEST_CASE("wave speed uses the smallest inertia") {
  MaterialConstants m = identity_material();
  m.rho1 = 2.0;
  m.rho2 = 0.8;
  m.chi1 = 0.3;
  m.chi2 = 4.0;
  const SpeedParams s = wave_speed(m, 9.0, 0.5);
  CHECK(s.m_inertia == doctest::Approx(0.6));
  CHECK(s.c == doctest::Approx(std::sqrt(9.0 / 0.6)));
  CHECK(s.lambda == 0.5);
}

TEST_CASE("decoupled material: locked mode travels at sqrt(5)") {
  const MaterialConstants m = decoupled_material();
  CHECK(validate_symmetries(m).ok());
  CHECK(max_acoustic_speed(m, 1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  const Vec3 n{1, 0, 0}, mn{-1, 0, 0};
  CHECK(acoustic_speed(m, n) == doctest::Approx(acoustic_speed(m, mn)));
}

TEST_CASE("acoustic speed of the identity material along x1") {
  // Longitudinal u1 (A_1111 = 1, C_1111 = 1 via g_11) couples to u2 through
  // g; the principal symbol in (u1_1, u2_1) is [[2, 1], [1, 1]] with unit
  // densities, whose largest eigenvalue is the golden ratio squared.
  const double phi = 0.5 * (1 + std::sqrt(5.0));
  CHECK(max_acoustic_speed(identity_material(), 1) ==
        doctest::Approx(phi).epsilon(1e-12));
}

TEST_CASE("slot names") {
  CHECK(slot_name(0) == "e_11");
  CHECK(slot_name(slot::g + 5) == "g_23");
  CHECK(slot_name(slot::phi2) == "phi2");
  CHECK(slot_name(slot::d + 2) == "d_3");
  CHECK(slot_name(slot::gphi1) == "phi1_,1");
  CHECK_THROWS_AS(slot_name(29), InvalidParameter);
}

TEST_CASE("isotropic tensor") {
  const Tensor4 t = isotropic_tensor(2.0, 3.0);
  CHECK(t(0, 0, 0, 0) == 8.0);
  CHECK(t(0, 0, 1, 1) == 2.0);
  CHECK(t(0, 1, 0, 1) == 3.0);
  CHECK(t(0, 1, 1, 0) == 3.0);
  CHECK(t(0, 1, 2, 2) == 0.0);
}

TEST_CASE("random materials are admissible and seed-deterministic") {
  Rng a(kDefaultSeed), b(kDefaultSeed);
  const MaterialConstants m1 = random_material(a), m2 = random_material(b);
  CHECK(m1 == m2);
  CHECK(validate_symmetries(m1).ok());
  CHECK(assemble_quadratic_form(m1).xi_min >= 0.1 - 1e-12);
  const MaterialConstants s = symmetrized(m1);
  CHECK(validate_symmetries(s).ok());
}
