#include "poromix/random_material.hpp"

namespace poromix {

namespace {

double unit(Rng& rng) {
  return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

Tensor4 noise4(Rng& rng, double s) {
  Tensor4 t;
  for (double& x : t.v) x = s * unit(rng);
  return t;
}

Mat3 noise3(Rng& rng, double s) {
  Mat3 m;
  for (double& x : m.v) x = s * unit(rng);
  return m;
}

Mat3 sym3(const Mat3& m) {
  Mat3 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) o(i, j) = 0.5 * (m(i, j) + m(j, i));
  return o;
}

Tensor4 sym_full(const Tensor4& t) {
  // Group generated by i<->j, r<->s and (ij)<->(rs).
  Tensor4 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          o(i, j, r, s) =
              (t(i, j, r, s) + t(j, i, r, s) + t(i, j, s, r) + t(j, i, s, r) +
               t(r, s, i, j) + t(r, s, j, i) + t(s, r, i, j) + t(s, r, j, i)) /
              8.0;
  return o;
}

Tensor4 sym_first_pair(const Tensor4& t) {
  Tensor4 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          o(i, j, r, s) = 0.5 * (t(i, j, r, s) + t(j, i, r, s));
  return o;
}

Tensor4 sym_major(const Tensor4& t) {
  Tensor4 o;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          o(i, j, r, s) = 0.5 * (t(i, j, r, s) + t(r, s, i, j));
  return o;
}

Tensor4 add(const Tensor4& a, const Tensor4& b, double w = 1.0) {
  Tensor4 o;
  for (int k = 0; k < 81; ++k) o.v[k] = a.v[k] + w * b.v[k];
  return o;
}

Mat3 add(const Mat3& a, const Mat3& b, double w = 1.0) {
  Mat3 o;
  for (int k = 0; k < 9; ++k) o.v[k] = a.v[k] + w * b.v[k];
  return o;
}

Tensor4 delta_ir_js() {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t(i, j, i, j) = 1.0;
  return t;
}

double density(Rng& rng) {
  return std::uniform_real_distribution<double>(0.5, 2.0)(rng);
}

/// Adds (margin - xi_min) times the identity material when needed. The
/// identity material is the identity on the admissible subspace, so the
/// shift raises every modulus by the same amount.
MaterialConstants lift(MaterialConstants k, double margin) {
  const double xi = assemble_quadratic_form(k).xi_min;
  if (xi >= margin) return k;
  const MaterialConstants I = identity_material();
  const double s = margin - xi;
  k.A = add(k.A, I.A, s);
  k.C = add(k.C, I.C, s);
  k.zeta += s;
  k.mu += s;
  k.a = add(k.a, I.a, s);
  k.alpha = add(k.alpha, I.alpha, s);
  k.gamma = add(k.gamma, I.gamma, s);
  return k;
}

}  // namespace

MaterialConstants symmetrized(const MaterialConstants& k) {
  MaterialConstants o = k;
  o.A = sym_full(k.A);
  o.B = sym_first_pair(k.B);
  o.C = sym_major(k.C);
  o.a = sym3(k.a);
  o.alpha = sym3(k.alpha);
  o.gamma = sym3(k.gamma);
  o.D = sym3(k.D);
  o.E = sym3(k.E);
  return o;
}

MaterialConstants random_material(Rng& rng, double s, double margin) {
  MaterialConstants k;
  k.A = add(isotropic_tensor(1.0, 1.0), sym_full(noise4(rng, s)));
  k.C = add(add(delta_ir_js(), isotropic_tensor(0.2, 0.2)),
            sym_major(noise4(rng, s)));
  k.B = sym_first_pair(noise4(rng, 0.5 * s));
  k.D = sym3(noise3(rng, s));
  k.E = sym3(noise3(rng, s));
  k.M = noise3(rng, s);
  k.N = noise3(rng, s);
  k.zeta = 1.0 + s * unit(rng);
  k.mu = 1.0 + s * unit(rng);
  k.tau = s * unit(rng);
  k.alpha = add(Mat3::identity(), sym3(noise3(rng, s)));
  k.gamma = add(Mat3::identity(), sym3(noise3(rng, s)));
  k.beta = noise3(rng, s);
  k.a = add(Mat3::identity(), sym3(noise3(rng, s)));
  k.b = noise3(rng, s);
  k.c = noise3(rng, s);
  k.rho1 = density(rng);
  k.rho2 = density(rng);
  k.chi1 = density(rng);
  k.chi2 = density(rng);
  return lift(k, margin);
}

MaterialConstants random_broad_material(Rng& rng, double margin) {
  MaterialConstants k;
  k.A = noise4(rng, 1.0);
  k.B = noise4(rng, 1.0);
  k.C = noise4(rng, 1.0);
  k.D = noise3(rng, 1.0);
  k.E = noise3(rng, 1.0);
  k.M = noise3(rng, 1.0);
  k.N = noise3(rng, 1.0);
  k.zeta = unit(rng);
  k.mu = unit(rng);
  k.tau = unit(rng);
  k.alpha = noise3(rng, 1.0);
  k.beta = noise3(rng, 1.0);
  k.gamma = noise3(rng, 1.0);
  k.a = noise3(rng, 1.0);
  k.b = noise3(rng, 1.0);
  k.c = noise3(rng, 1.0);
  k.rho1 = density(rng);
  k.rho2 = density(rng);
  k.chi1 = density(rng);
  k.chi2 = density(rng);
  return lift(symmetrized(k), margin);
}

PointState random_point_state(Rng& rng) {
  PointState p;
  for (double& x : p.grad_u1.v) x = unit(rng);
  for (double& x : p.grad_u2.v) x = unit(rng);
  for (int i = 0; i < 3; ++i) {
    p.u1[i] = unit(rng);
    p.u2[i] = unit(rng);
    p.grad_phi1[i] = unit(rng);
    p.grad_phi2[i] = unit(rng);
  }
  p.phi1 = unit(rng);
  p.phi2 = unit(rng);
  return p;
}

StrainVector random_strain(Rng& rng) {
  StrainVector E;
  for (double& x : E.v) x = unit(rng);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) E[3 * j + i] = E[3 * i + j];
  return E;
}

MaterialConstants decoupled_material() {
  MaterialConstants k;
  k.A = isotropic_tensor(1.0, 1.0);
  k.C = delta_ir_js();
  k.zeta = k.mu = 1.0;
  k.a = k.alpha = k.gamma = Mat3::identity();
  k.rho1 = 1.0;
  k.rho2 = 0.4;
  k.chi1 = 1.0;
  k.chi2 = 1.0;
  return k;
}

}  // namespace poromix
