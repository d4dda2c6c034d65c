#include "poromix/material.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <Eigen/Eigenvalues>

#include "poromix/errors.hpp"

namespace poromix {

namespace {

double tensor_dev(const Tensor4& t, int perm) {
  // perm 0: ijrs vs jirs, 1: ijrs vs rsij
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          double other = perm == 0 ? t(j, i, r, s) : t(r, s, i, j);
          m = std::max(m, std::abs(t(i, j, r, s) - other));
        }
  return m;
}

double mat_dev(const Mat3& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m;
}

}  // namespace

MaterialConstants identity_material() {
  MaterialConstants m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          m.A(i, j, r, s) =
              0.5 * (kronecker(i, r) * kronecker(j, s) +
                     kronecker(i, s) * kronecker(j, r));
          m.C(i, j, r, s) = kronecker(i, r) * kronecker(j, s);
        }
  m.zeta = 1.0;
  m.mu = 1.0;
  m.a = m.alpha = m.gamma = Mat3::identity();
  return m;
}

Tensor4 isotropic_tensor(double lambda, double mu) {
  Tensor4 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          t(i, j, r, s) = lambda * kronecker(i, j) * kronecker(r, s) +
                          mu * (kronecker(i, r) * kronecker(j, s) +
                                kronecker(i, s) * kronecker(j, r));
  return t;
}

double SymmetryReport::deviation(const std::string& relation) const {
  for (const auto& v : violations)
    if (v.relation == relation) return v.max_deviation;
  return 0.0;
}

SymmetryReport validate_symmetries(const MaterialConstants& k, double tol) {
  const std::pair<const char*, double> checks[] = {
      {"A_ijrs=A_jirs", tensor_dev(k.A, 0)},
      {"A_ijrs=A_rsij", tensor_dev(k.A, 1)},
      {"B_ijrs=B_jirs", tensor_dev(k.B, 0)},
      {"C_ijrs=C_rsij", tensor_dev(k.C, 1)},
      {"a_ij=a_ji", mat_dev(k.a)},
      {"alpha_ij=alpha_ji", mat_dev(k.alpha)},
      {"gamma_ij=gamma_ji", mat_dev(k.gamma)},
      {"D_ij=D_ji", mat_dev(k.D)},
      {"E_ij=E_ji", mat_dev(k.E)},
  };
  SymmetryReport rep;
  for (const auto& [name, dev] : checks)
    if (!(dev <= tol)) rep.violations.push_back({name, dev});
  return rep;
}

void require_symmetries(const MaterialConstants& consts) {
  auto rep = validate_symmetries(consts);
  if (rep.ok()) return;
  std::string msg;
  for (const auto& v : rep.violations) {
    if (!msg.empty()) msg += ", ";
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.3g)", v.max_deviation);
    msg += v.relation + buf;
  }
  throw SymmetryViolation(msg);
}

std::string slot_name(int k) {
  static const char* axis = "123";
  auto pair = [&](const char* p, int q) {
    return std::string(p) + "_" + axis[q / 3] + axis[q % 3];
  };
  if (k < 0 || k >= slot::count) throw InvalidParameter("slot out of range");
  if (k < slot::g) return pair("e", k);
  if (k < slot::phi1) return pair("g", k - slot::g);
  if (k == slot::phi1) return "phi1";
  if (k == slot::phi2) return "phi2";
  if (k < slot::gphi1) return std::string("d_") + axis[k - slot::d];
  if (k < slot::gphi2) return std::string("phi1_,") + axis[k - slot::gphi1];
  return std::string("phi2_,") + axis[k - slot::gphi2];
}

const Eigen::Matrix<double, 29, 26>& admissible_basis() {
  static const Eigen::Matrix<double, 29, 26> Q = [] {
    Eigen::Matrix<double, 29, 26> q = Eigen::Matrix<double, 29, 26>::Zero();
    int col = 0;
    for (int i = 0; i < 3; ++i) q(3 * i + i, col++) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        q(3 * i + j, col) = r;
        q(3 * j + i, col) = r;
        ++col;
      }
    for (int k = slot::g; k < slot::count; ++k) q(k, col++) = 1.0;
    return q;
  }();
  return Q;
}

Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd m, double tol,
                                   int max_sweeps) {
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(m.norm(), 1e-300);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    if (std::sqrt(off) <= tol * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (m(p, q) == 0.0) continue;
        double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
  }
  Eigen::VectorXd ev = m.diagonal();
  std::sort(ev.data(), ev.data() + n);
  return ev;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() == Eigen::Success) return es.eigenvalues();
  return jacobi_eigenvalues(m);
}

QuadraticForm QuadraticForm::from_matrix(const Matrix29& A) {
  QuadraticForm f;
  f.A = A;
  f.A1 = A.topLeftCorner<20, 20>();
  f.A2 = A.bottomRightCorner<9, 9>();
  const auto& Q = admissible_basis();
  Eigen::MatrixXd R = Q.transpose() * A * Q;
  R = 0.5 * (R + R.transpose()).eval();
  auto ev = symmetric_eigenvalues(R);
  f.xi_min = ev(0);
  f.xi_max = ev(ev.size() - 1);
  return f;
}

QuadraticForm assemble_quadratic_form(const MaterialConstants& k) {
  require_symmetries(k);
  Matrix29 A = Matrix29::Zero();
  auto G = [](int i, int j) { return 3 * i + j; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int g = G(i, j);
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          const int d = G(r, s);
          A(g, d) = k.A(i, j, r, s);
          A(g, 9 + d) = k.B(i, j, r, s);
          A(9 + g, d) = k.B(r, s, i, j);
          A(9 + g, 9 + d) = k.C(i, j, r, s);
        }
      A(g, 18) = A(18, g) = k.D(i, j);
      A(g, 19) = A(19, g) = k.E(i, j);
      A(9 + g, 18) = A(18, 9 + g) = k.M(i, j);
      A(9 + g, 19) = A(19, 9 + g) = k.N(i, j);
    }
  A(18, 18) = k.zeta;
  A(18, 19) = A(19, 18) = k.tau;
  A(19, 19) = k.mu;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      A(20 + i, 20 + j) = k.a(i, j);
      A(20 + i, 23 + j) = k.b(i, j);
      A(20 + i, 26 + j) = k.c(i, j);
      A(23 + i, 20 + j) = k.b(j, i);
      A(23 + i, 23 + j) = k.alpha(i, j);
      A(23 + i, 26 + j) = k.beta(i, j);
      A(26 + i, 20 + j) = k.c(j, i);
      A(26 + i, 23 + j) = k.beta(j, i);
      A(26 + i, 26 + j) = k.gamma(i, j);
    }
  // Symmetry tolerance lets rounding-level asymmetry through; the stored
  // form must be exactly symmetric.
  A = 0.5 * (A + A.transpose()).eval();
  return QuadraticForm::from_matrix(A);
}

MaterialConstants constants_from_form(const QuadraticForm& form,
                                      const MaterialConstants& densities) {
  const auto& A = form.A;
  MaterialConstants k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int g = 3 * i + j;
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          const int d = 3 * r + s;
          k.A(i, j, r, s) = A(g, d);
          k.B(i, j, r, s) = A(g, 9 + d);
          k.C(i, j, r, s) = A(9 + g, 9 + d);
        }
      k.D(i, j) = A(g, 18);
      k.E(i, j) = A(g, 19);
      k.M(i, j) = A(9 + g, 18);
      k.N(i, j) = A(9 + g, 19);
      k.a(i, j) = A(20 + i, 20 + j);
      k.b(i, j) = A(20 + i, 23 + j);
      k.c(i, j) = A(20 + i, 26 + j);
      k.alpha(i, j) = A(23 + i, 23 + j);
      k.beta(i, j) = A(23 + i, 26 + j);
      k.gamma(i, j) = A(26 + i, 26 + j);
    }
  k.zeta = A(18, 18);
  k.tau = A(18, 19);
  k.mu = A(19, 19);
  k.rho1 = densities.rho1;
  k.rho2 = densities.rho2;
  k.chi1 = densities.chi1;
  k.chi2 = densities.chi2;
  return k;
}

ModuliBounds elastic_moduli_bounds(const QuadraticForm& form) {
  if (!form.admissible()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "xi_min = %.6g (margin %.0e)", form.xi_min,
                  kAdmissibilityMargin);
    throw NotPositiveDefinite(buf);
  }
  return {form.xi_min, form.xi_max};
}

SpeedParams wave_speed(const MaterialConstants& k, double xi_max,
                       double lambda) {
  if (!(xi_max > 0)) throw InvalidParameter("xi_max must be positive");
  if (!(lambda > 0)) throw InvalidParameter("lambda must be positive");
  for (double v : {k.rho1, k.rho2, k.chi1, k.chi2})
    if (!(v > 0))
      throw InvalidParameter("densities and inertias must be positive");
  SpeedParams sp;
  sp.m_inertia =
      std::min({k.rho1, k.rho2, k.rho1 * k.chi1, k.rho2 * k.chi2});
  sp.c = std::sqrt(xi_max / sp.m_inertia);
  sp.lambda = lambda;
  return sp;
}

ReducedConstants reduced_constants(const MaterialConstants& k) {
  require_symmetries(k);
  ReducedConstants rc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
          rc.a(i, j, r, s) = k.A(j, i, r, s) + k.B(r, s, j, i) +
                             k.B(j, i, s, r) + k.C(j, i, s, r);
          rc.b(i, j, r, s) = k.B(j, i, r, s) + k.C(j, i, r, s);
          rc.d(i, j, r, s) = k.C(i, j, r, s);
        }
      // g_ij pairs with u1_j,i, so the M and N couplings enter transposed.
      rc.tau(i, j) = k.D(i, j) + k.M(j, i);
      rc.sigma(i, j) = k.E(i, j) + k.N(j, i);
    }
  return rc;
}

double acoustic_speed(const MaterialConstants& k, const Vec3& n) {
  if (std::abs(norm(n) - 1.0) > 1e-12) throw BadNormal("|n| != 1");
  const auto rc = reduced_constants(k);
  Eigen::Matrix<double, 6, 6> Ku = Eigen::Matrix<double, 6, 6>::Zero();
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 3; ++j)
        for (int s = 0; s < 3; ++s) {
          const double nn = n[j] * n[s];
          Ku(i, r) += rc.a(i, j, r, s) * nn;
          Ku(i, 3 + r) += rc.b(i, j, r, s) * nn;
          Ku(3 + i, r) += rc.b(r, s, i, j) * nn;
          Ku(3 + i, 3 + r) += rc.d(i, j, r, s) * nn;
        }
  Eigen::Matrix2d Kp = Eigen::Matrix2d::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double nn = n[i] * n[j];
      Kp(0, 0) += k.alpha(i, j) * nn;
      Kp(0, 1) += k.beta(i, j) * nn;
      Kp(1, 1) += k.gamma(i, j) * nn;
    }
  Kp(1, 0) = Kp(0, 1);
  for (int i = 0; i < 6; ++i) {
    const double wi = 1.0 / std::sqrt(i < 3 ? k.rho1 : k.rho2);
    for (int j = 0; j < 6; ++j)
      Ku(i, j) *= wi / std::sqrt(j < 3 ? k.rho1 : k.rho2);
  }
  const double w[2] = {1.0 / std::sqrt(k.rho1 * k.chi1),
                       1.0 / std::sqrt(k.rho2 * k.chi2)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Kp(i, j) *= w[i] * w[j];
  Eigen::MatrixXd Kus = 0.5 * (Ku + Ku.transpose());
  double top = std::max(symmetric_eigenvalues(Kus).maxCoeff(),
                        symmetric_eigenvalues(Kp).maxCoeff());
  return std::sqrt(std::max(top, 0.0));
}

double max_acoustic_speed(const MaterialConstants& k, int dim) {
  if (dim == 1) return acoustic_speed(k, {1.0, 0.0, 0.0});
  double best = 0.0;
  if (dim == 2) {
    const int N = 720;
    for (int q = 0; q < N; ++q) {
      double th = M_PI * q / N;
      best = std::max(best, acoustic_speed(k, {std::cos(th), std::sin(th), 0}));
    }
    return best;
  }
  if (dim != 3) throw InvalidParameter("dim must be 1, 2 or 3");
  const int N = 4000;
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int q = 0; q < N; ++q) {
    double z = 1.0 - (q + 0.5) / N * 2.0, rad = std::sqrt(1.0 - z * z);
    Vec3 n{rad * std::cos(golden * q), rad * std::sin(golden * q), z};
    double nn = norm(n);
    best = std::max(best, acoustic_speed(k, {n[0] / nn, n[1] / nn, n[2] / nn}));
  }
  return best;
}

}  // namespace poromix
