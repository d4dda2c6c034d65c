#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "poromix/tensor.hpp"

namespace poromix {

/// Constitutive constants of a homogeneous, centrosymmetric binary porous
/// elastic mixture, in nondimensional units. Names follow the internal
/// energy density: A, B, C couple the strain measures e and g; D, E, M, N
/// couple strains with the volume fractions; zeta, mu, tau are the volume
/// fraction moduli; alpha, beta, gamma act on the fraction gradients; a, b, c
/// act on the relative displacement d = u1 - u2.
struct MaterialConstants {
  Tensor4 A, B, C;
  Mat3 D, E, M, N;
  double zeta = 0.0;
  double mu = 0.0;
  double tau = 0.0;
  Mat3 alpha, beta, gamma;
  Mat3 a, b, c;
  double rho1 = 1.0;
  double rho2 = 1.0;
  double chi1 = 1.0;
  double chi2 = 1.0;

  friend bool operator==(const MaterialConstants&,
                         const MaterialConstants&) = default;
};

/// Material with every coupling zero whose quadratic form is the identity on
/// the admissible strain subspace. A uses the symmetrized identity
/// (delta_ir delta_js + delta_is delta_jr) / 2 so that it satisfies the
/// minor symmetry A_ijrs = A_jirs.
MaterialConstants identity_material();

/// Isotropic tensor lambda delta_ij delta_rs + mu (delta_ir delta_js +
/// delta_is delta_jr).
Tensor4 isotropic_tensor(double lambda, double mu);

struct SymmetryViolationEntry {
  std::string relation;
  double max_deviation = 0.0;
};

struct SymmetryReport {
  std::vector<SymmetryViolationEntry> violations;

  bool ok() const { return violations.empty(); }
  /// Deviation recorded for `relation`, or 0 if it holds.
  double deviation(const std::string& relation) const;
};

inline constexpr double kSymmetryTolerance = 1e-12;

/// Checks every symmetry relation the energy density relies on. A relation
/// is reported when its maximum absolute deviation exceeds `tol`.
SymmetryReport validate_symmetries(const MaterialConstants& consts,
                                   double tol = kSymmetryTolerance);

/// Throws SymmetryViolation listing the failed relations.
void require_symmetries(const MaterialConstants& consts);

/// Slot layout of the 29-component strain vector.
namespace slot {
inline constexpr int e = 0;       // e_ij at e + 3i + j
inline constexpr int g = 9;       // g_ij at g + 3i + j
inline constexpr int phi1 = 18;
inline constexpr int phi2 = 19;
inline constexpr int d = 20;      // d_i at d + i
inline constexpr int gphi1 = 23;  // phi1_,i
inline constexpr int gphi2 = 26;  // phi2_,i
inline constexpr int count = 29;
}  // namespace slot

/// Human readable symbol for a strain slot ("e_12", "phi1", "d_3", ...).
std::string slot_name(int k);

using Matrix29 = Eigen::Matrix<double, 29, 29>;
using Vector29 = Eigen::Matrix<double, 29, 1>;

inline constexpr double kAdmissibilityMargin = 1e-10;

/// The symmetric 29x29 matrix of the energy density W = E.AE / 2, assembled
/// from the 20x20 block A1 (e, g, phi) and the 9x9 block A2 (d, grad phi).
struct QuadraticForm {
  Eigen::Matrix<double, 20, 20> A1;
  Eigen::Matrix<double, 9, 9> A2;
  Matrix29 A;
  /// Extreme eigenvalues of A on the subspace of strain vectors with
  /// e_ij = e_ji (the antisymmetric e directions are always null).
  double xi_min = 0.0;
  double xi_max = 0.0;

  bool admissible() const { return xi_min > kAdmissibilityMargin; }

  /// Builds a form from an arbitrary symmetric matrix; used to probe the
  /// bound computation on hand-made spectra.
  static QuadraticForm from_matrix(const Matrix29& A);
};

QuadraticForm assemble_quadratic_form(const MaterialConstants& consts);

/// Reads the constitutive constants back out of an assembled form through
/// the slot layout. Densities and inertias are not part of the form and are
/// copied from `densities`.
MaterialConstants constants_from_form(const QuadraticForm& form,
                                      const MaterialConstants& densities);

struct ModuliBounds {
  double xi_min = 0.0;
  double xi_max = 0.0;
};

/// Returns (xi_min, xi_max); throws NotPositiveDefinite unless the form
/// clears the admissibility margin.
ModuliBounds elastic_moduli_bounds(const QuadraticForm& form);

/// Orthonormal basis (29x26) of the admissible strain subspace.
const Eigen::Matrix<double, 29, 26>& admissible_basis();

/// Eigenvalues (ascending) of a symmetric matrix. Uses Eigen's
/// self-adjoint solver and falls back to cyclic Jacobi rotations if it
/// reports a convergence failure.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m);
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd m, double tol = 1e-12,
                                   int max_sweeps = 100);

struct SpeedParams {
  double m_inertia = 0.0;
  double c = 0.0;
  double lambda = 0.0;
};

/// m = min(rho1, rho2, rho1 chi1, rho2 chi2) and c = sqrt(xi_max / m).
SpeedParams wave_speed(const MaterialConstants& consts, double xi_max,
                       double lambda);

struct ReducedConstants {
  Tensor4 a, b, d;
  Mat3 tau, sigma;
};

/// Constants of the displacement-gradient form of the energy density.
ReducedConstants reduced_constants(const MaterialConstants& consts);

/// Largest characteristic speed of the equations of motion along the unit
/// direction `n`: sqrt of the largest eigenvalue of M^-1/2 K(n) M^-1/2,
/// where K(n) is the principal symbol and M the inertia of
/// (u1, u2, phi1, phi2).
double acoustic_speed(const MaterialConstants& consts, const Vec3& n);

/// Maximum of acoustic_speed over unit directions in the first `dim`
/// coordinate axes (dim = 1: along x1 only; 2: the x1-x2 plane; 3: sphere).
double max_acoustic_speed(const MaterialConstants& consts, int dim);

}  // namespace poromix
