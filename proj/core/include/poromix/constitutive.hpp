#pragma once

#include <array>
#include <utility>

#include "poromix/material.hpp"
#include "poromix/tensor.hpp"

namespace poromix {

/// Pointwise values of U and its gradients. grad_u1(i, j) = u1_i,j.
struct PointState {
  Mat3 grad_u1, grad_u2;
  Vec3 u1{}, u2{};
  double phi1 = 0.0;
  double phi2 = 0.0;
  Vec3 grad_phi1{}, grad_phi2{};
};

/// 29-component strain vector in the slot layout of `slot`.
struct StrainVector {
  std::array<double, 29> v{};

  double& operator[](int k) { return v[k]; }
  double operator[](int k) const { return v[k]; }
  double e(int i, int j) const { return v[slot::e + 3 * i + j]; }
  double g(int i, int j) const { return v[slot::g + 3 * i + j]; }
  double d(int i) const { return v[slot::d + i]; }
  double gphi1(int i) const { return v[slot::gphi1 + i]; }
  double gphi2(int i) const { return v[slot::gphi2 + i]; }
  double phi1() const { return v[slot::phi1]; }
  double phi2() const { return v[slot::phi2]; }

  Eigen::Map<const Vector29> vec() const { return Eigen::Map<const Vector29>(v.data()); }
  Eigen::Map<Vector29> vec() { return Eigen::Map<Vector29>(v.data()); }
};

/// S1(j, i) holds S^(1)_ji, the stress whose contraction with u1_i,j gives
/// the power; likewise S2.
struct GeneralizedStress {
  Mat3 S1, S2;
  double g1 = 0.0;
  double g2 = 0.0;
  Vec3 p{}, h1{}, h2{};
};

struct TractionSample {
  Vec3 s1{}, s2{};
  double h1 = 0.0;
  double h2 = 0.0;
  Vec3 n{};
};

StrainVector strain_vector(const PointState& ps);

/// Euclidean norm of all 29 slots.
double strain_magnitude(const StrainVector& E);

/// W = E.AE / 2.
double internal_energy_density(const QuadraticForm& form,
                               const StrainVector& E);

/// Stress from the constitutive law in strain form. The symmetry
/// requirements are checked once by the caller (assemble / reduced
/// constants); this routine is on the per-point hot path and does not
/// re-validate.
GeneralizedStress generalized_stress(const MaterialConstants& consts,
                                     const StrainVector& E);

/// Same stress computed from displacement gradients and the reduced
/// constants; an independent route used to cross-check the strain form.
GeneralizedStress stress_from_reduced(const ReducedConstants& rc,
                                      const MaterialConstants& consts,
                                      const PointState& ps);

/// A.E, the vector the stress magnitude bound compares against.
Vector29 apply_form(const QuadraticForm& form, const StrainVector& E);

/// |S|^2 = sum over constituents of S:S + h.h + g^2, plus p.p once.
double stress_magnitude2(const GeneralizedStress& S);
double stress_magnitude(const GeneralizedStress& S);

/// s_i = S_ji n_j, h = h_j n_j; throws BadNormal unless |n| = 1 to 1e-12.
TractionSample traction(const GeneralizedStress& S, const Vec3& n);

/// Stress power sum_alpha [S_ji v_i,j + h.grad(psi) - g psi] + p.(v1 - v2),
/// where `rate` supplies the velocity gradients and fields.
double stress_power(const GeneralizedStress& S, const PointState& rate);

/// (r_static, r_rate): residuals of 2W = stress power(U, U) and
/// dW/dt = stress power(U, U_dot).
std::pair<double, double> power_identity_residuals(
    const MaterialConstants& consts, const QuadraticForm& form,
    const PointState& ps, const PointState& ps_dot);
std::pair<double, double> power_identity_residuals(
    const MaterialConstants& consts, const PointState& ps,
    const PointState& ps_dot);

}  // namespace poromix
