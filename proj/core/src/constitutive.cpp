#include "poromix/constitutive.hpp"

#include <cmath>

#include "poromix/errors.hpp"

namespace poromix {

StrainVector strain_vector(const PointState& ps) {
  StrainVector E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      E[slot::e + 3 * i + j] = 0.5 * (ps.grad_u1(i, j) + ps.grad_u1(j, i));
      E[slot::g + 3 * i + j] = ps.grad_u1(j, i) + ps.grad_u2(i, j);
    }
  E[slot::phi1] = ps.phi1;
  E[slot::phi2] = ps.phi2;
  for (int i = 0; i < 3; ++i) {
    E[slot::d + i] = ps.u1[i] - ps.u2[i];
    E[slot::gphi1 + i] = ps.grad_phi1[i];
    E[slot::gphi2 + i] = ps.grad_phi2[i];
  }
  return E;
}

double strain_magnitude(const StrainVector& E) {
  double s = 0.0;
  for (double x : E.v) s += x * x;
  return std::sqrt(s);
}

double internal_energy_density(const QuadraticForm& form,
                               const StrainVector& E) {
  return 0.5 * E.vec().dot(form.A * E.vec());
}

GeneralizedStress generalized_stress(const MaterialConstants& k,
                                     const StrainVector& E) {
  GeneralizedStress S;
  const double f1 = E.phi1(), f2 = E.phi2();
  double DE = 0, MG = 0, EE = 0, NG = 0;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      DE += k.D(r, s) * E.e(r, s);
      EE += k.E(r, s) * E.e(r, s);
      MG += k.M(r, s) * E.g(r, s);
      NG += k.N(r, s) * E.g(r, s);
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s1 = 0.0, s2 = 0.0;
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          const double e = E.e(r, s), g = E.g(r, s);
          s1 += (k.A(j, i, r, s) + k.B(r, s, j, i)) * e +
                (k.B(i, j, r, s) + k.C(j, i, r, s)) * g;
          s2 += k.B(r, s, i, j) * e + k.C(i, j, r, s) * g;
        }
      s1 += (k.D(i, j) + k.M(j, i)) * f1 + (k.E(i, j) + k.N(j, i)) * f2;
      s2 += k.M(i, j) * f1 + k.N(i, j) * f2;
      S.S1(j, i) = s1;
      S.S2(j, i) = s2;
    }
  S.g1 = -DE - MG - k.zeta * f1 - k.tau * f2;
  S.g2 = -EE - NG - k.tau * f1 - k.mu * f2;
  for (int i = 0; i < 3; ++i) {
    double p = 0, h1 = 0, h2 = 0;
    for (int j = 0; j < 3; ++j) {
      p += k.a(i, j) * E.d(j) + k.b(i, j) * E.gphi1(j) +
           k.c(i, j) * E.gphi2(j);
      h1 += k.alpha(i, j) * E.gphi1(j) + k.beta(i, j) * E.gphi2(j) +
            k.b(j, i) * E.d(j);
      h2 += k.beta(j, i) * E.gphi1(j) + k.gamma(i, j) * E.gphi2(j) +
            k.c(j, i) * E.d(j);
    }
    S.p[i] = p;
    S.h1[i] = h1;
    S.h2[i] = h2;
  }
  return S;
}

GeneralizedStress stress_from_reduced(const ReducedConstants& rc,
                                      const MaterialConstants& k,
                                      const PointState& ps) {
  GeneralizedStress S;
  const auto& G1 = ps.grad_u1;
  const auto& G2 = ps.grad_u2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s1 = 0.0, s2 = 0.0;
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          s1 += rc.a(i, j, r, s) * G1(r, s) + rc.b(i, j, r, s) * G2(r, s);
          s2 += rc.b(r, s, i, j) * G1(r, s) + rc.d(i, j, r, s) * G2(r, s);
        }
      s1 += rc.tau(i, j) * ps.phi1 + rc.sigma(i, j) * ps.phi2;
      s2 += k.M(i, j) * ps.phi1 + k.N(i, j) * ps.phi2;
      S.S1(j, i) = s1;
      S.S2(j, i) = s2;
    }
  double tu = 0, mu2 = 0, su = 0, nu2 = 0;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      tu += rc.tau(r, s) * G1(r, s);
      su += rc.sigma(r, s) * G1(r, s);
      mu2 += k.M(r, s) * G2(r, s);
      nu2 += k.N(r, s) * G2(r, s);
    }
  S.g1 = -tu - mu2 - k.zeta * ps.phi1 - k.tau * ps.phi2;
  S.g2 = -su - nu2 - k.tau * ps.phi1 - k.mu * ps.phi2;
  for (int i = 0; i < 3; ++i) {
    double p = 0, h1 = 0, h2 = 0;
    for (int j = 0; j < 3; ++j) {
      const double d = ps.u1[j] - ps.u2[j];
      p += k.a(i, j) * d + k.b(i, j) * ps.grad_phi1[j] +
           k.c(i, j) * ps.grad_phi2[j];
      h1 += k.alpha(i, j) * ps.grad_phi1[j] + k.beta(i, j) * ps.grad_phi2[j] +
            k.b(j, i) * d;
      h2 += k.beta(j, i) * ps.grad_phi1[j] + k.gamma(i, j) * ps.grad_phi2[j] +
            k.c(j, i) * d;
    }
    S.p[i] = p;
    S.h1[i] = h1;
    S.h2[i] = h2;
  }
  return S;
}

Vector29 apply_form(const QuadraticForm& form, const StrainVector& E) {
  return form.A * E.vec();
}

double stress_magnitude2(const GeneralizedStress& S) {
  return frobenius2(S.S1) + frobenius2(S.S2) + dot(S.h1, S.h1) +
         dot(S.h2, S.h2) + S.g1 * S.g1 + S.g2 * S.g2 + dot(S.p, S.p);
}

double stress_magnitude(const GeneralizedStress& S) {
  return std::sqrt(stress_magnitude2(S));
}

TractionSample traction(const GeneralizedStress& S, const Vec3& n) {
  if (!(std::abs(norm(n) - 1.0) <= 1e-12))
    throw BadNormal("normal must have unit length");
  TractionSample t;
  t.n = n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t.s1[i] += S.S1(j, i) * n[j];
      t.s2[i] += S.S2(j, i) * n[j];
    }
  t.h1 = dot(S.h1, n);
  t.h2 = dot(S.h2, n);
  return t;
}

double stress_power(const GeneralizedStress& S, const PointState& v) {
  double w = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      w += S.S1(j, i) * v.grad_u1(i, j) + S.S2(j, i) * v.grad_u2(i, j);
  for (int i = 0; i < 3; ++i) w += S.p[i] * (v.u1[i] - v.u2[i]);
  w += dot(S.h1, v.grad_phi1) + dot(S.h2, v.grad_phi2);
  w -= S.g1 * v.phi1 + S.g2 * v.phi2;
  return w;
}

std::pair<double, double> power_identity_residuals(
    const MaterialConstants& consts, const QuadraticForm& form,
    const PointState& ps, const PointState& ps_dot) {
  const StrainVector E = strain_vector(ps);
  const StrainVector Ed = strain_vector(ps_dot);
  const GeneralizedStress S = generalized_stress(consts, E);
  const double two_w = 2.0 * internal_energy_density(form, E);
  const double w_dot = Ed.vec().dot(form.A * E.vec());
  return {std::abs(two_w - stress_power(S, ps)),
          std::abs(w_dot - stress_power(S, ps_dot))};
}

std::pair<double, double> power_identity_residuals(
    const MaterialConstants& consts, const PointState& ps,
    const PointState& ps_dot) {
  return power_identity_residuals(consts, assemble_quadratic_form(consts), ps,
                                  ps_dot);
}

}  // namespace poromix
