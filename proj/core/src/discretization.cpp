#include "poromix/discretization.hpp"

#include <cmath>
#include <Eigen/Eigenvalues>

#include "poromix/errors.hpp"

namespace poromix {

Discretization::Discretization(const Grid& grid,
                               const MaterialConstants& consts)
    : grid_(grid), consts_(consts) {
  grid_.validate();
  require_symmetries(consts_);
  nodes_per_cell_ = grid_.nodes_per_cell();
  nloc_ = kDofs * nodes_per_cell_;

  const double g = 0.5 / std::sqrt(3.0);
  const double pts[2] = {0.5 - g, 0.5 + g};
  const int npt = grid_.dim == 2 ? 4 : 2;
  for (int q = 0; q < npt; ++q) {
    GaussPoint p;
    p.xi = {pts[q & 1], grid_.dim == 2 ? pts[q >> 1] : 0.0};
    p.w = grid_.cell_volume() / npt;
    for (int a = 0; a < nodes_per_cell_; ++a) {
      const int ax = a & 1, ay = a >> 1;
      const double Nx = ax ? p.xi[0] : 1.0 - p.xi[0];
      const double dNx = (ax ? 1.0 : -1.0) / grid_.h[0];
      if (grid_.dim == 1) {
        p.N[a] = Nx;
        p.dN[a] = {dNx, 0.0};
      } else {
        const double Ny = ay ? p.xi[1] : 1.0 - p.xi[1];
        const double dNy = (ay ? 1.0 : -1.0) / grid_.h[1];
        p.N[a] = Nx * Ny;
        p.dN[a] = {dNx * Ny, Nx * dNy};
      }
    }
    gp_.push_back(p);
  }

  // Probe the constitutive law with unit dof vectors.
  Ke_ = Eigen::MatrixXd::Zero(nloc_, nloc_);
  std::vector<double> qc(nloc_, 0.0);
  for (int col = 0; col < nloc_; ++col) {
    qc.assign(nloc_, 0.0);
    qc[col] = 1.0;
    for (int q = 0; q < npt; ++q) {
      const auto& p = gp_[q];
      const GeneralizedStress S =
          generalized_stress(consts_, strain_vector(point_state(qc.data(), q)));
      for (int a = 0; a < nodes_per_cell_; ++a) {
        const double N = p.N[a];
        const auto& dN = p.dN[a];
        for (int i = 0; i < 3; ++i) {
          double t1 = S.p[i] * N, t2 = -S.p[i] * N;
          for (int j = 0; j < grid_.dim; ++j) {
            t1 += S.S1(j, i) * dN[j];
            t2 += S.S2(j, i) * dN[j];
          }
          Ke_(kDofs * a + i, col) += p.w * t1;
          Ke_(kDofs * a + 3 + i, col) += p.w * t2;
        }
        double t6 = -S.g1 * N, t7 = -S.g2 * N;
        for (int j = 0; j < grid_.dim; ++j) {
          t6 += S.h1[j] * dN[j];
          t7 += S.h2[j] * dN[j];
        }
        Ke_(kDofs * a + 6, col) += p.w * t6;
        Ke_(kDofs * a + 7, col) += p.w * t7;
      }
    }
  }
  // The probe yields a symmetric matrix up to rounding; enforce it exactly
  // so the discrete energy balance is exact.
  Ke_ = 0.5 * (Ke_ + Ke_.transpose()).eval();

  const double rho[kDofs] = {consts_.rho1, consts_.rho1, consts_.rho1,
                             consts_.rho2, consts_.rho2, consts_.rho2,
                             consts_.rho1 * consts_.chi1,
                             consts_.rho2 * consts_.chi2};
  mass_.resize(dofs());
  for (std::size_t n = 0; n < grid_.nodes(); ++n) {
    const double w = grid_.node_weight(n);
    for (int k = 0; k < kDofs; ++k) mass_[kDofs * n + k] = w * rho[k];
  }
}

double Discretization::source_density(int local_dof) const {
  if (local_dof < 3 || local_dof == 6) return consts_.rho1;
  return consts_.rho2;
}

void Discretization::gather(std::size_t cell, const std::vector<double>& q,
                            double* qc) const {
  for (int a = 0; a < nodes_per_cell_; ++a) {
    const std::size_t base = kDofs * grid_.cell_node(cell, a);
    for (int k = 0; k < kDofs; ++k) qc[kDofs * a + k] = q[base + k];
  }
}

void Discretization::internal_force(const std::vector<double>& q,
                                    std::vector<double>& f) const {
  f.assign(dofs(), 0.0);
  Eigen::VectorXd qc(nloc_), fc(nloc_);
  const std::size_t nc = grid_.cells();
  for (std::size_t c = 0; c < nc; ++c) {
    gather(c, q, qc.data());
    fc.noalias() = Ke_ * qc;
    for (int a = 0; a < nodes_per_cell_; ++a) {
      const std::size_t base = kDofs * grid_.cell_node(c, a);
      for (int k = 0; k < kDofs; ++k) f[base + k] += fc[kDofs * a + k];
    }
  }
}

double Discretization::strain_energy(const std::vector<double>& q) const {
  Eigen::VectorXd qc(nloc_);
  double e = 0.0;
  for (std::size_t c = 0; c < grid_.cells(); ++c) {
    gather(c, q, qc.data());
    e += 0.5 * qc.dot(Ke_ * qc);
  }
  return e;
}

PointState Discretization::point_state(const double* qc, int gp) const {
  const auto& p = gp_[gp];
  PointState ps;
  for (int a = 0; a < nodes_per_cell_; ++a) {
    const double* n = qc + kDofs * a;
    const double N = p.N[a];
    for (int i = 0; i < 3; ++i) {
      ps.u1[i] += N * n[i];
      ps.u2[i] += N * n[3 + i];
      for (int j = 0; j < grid_.dim; ++j) {
        ps.grad_u1(i, j) += n[i] * p.dN[a][j];
        ps.grad_u2(i, j) += n[3 + i] * p.dN[a][j];
      }
    }
    ps.phi1 += N * n[6];
    ps.phi2 += N * n[7];
    for (int j = 0; j < grid_.dim; ++j) {
      ps.grad_phi1[j] += n[6] * p.dN[a][j];
      ps.grad_phi2[j] += n[7] * p.dN[a][j];
    }
  }
  return ps;
}

Vec3 Discretization::gauss_position(std::size_t cell, int gp) const {
  Vec3 x = grid_.position(grid_.cell_node(cell, 0));
  x[0] += gp_[gp].xi[0] * grid_.h[0];
  if (grid_.dim == 2) x[1] += gp_[gp].xi[1] * grid_.h[1];
  return x;
}

double Discretization::max_frequency2() const {
  // Each node of a cell carries an equal share of the cell measure; the
  // element eigenvalue bound then dominates the assembled one.
  const double share = grid_.cell_volume() / nodes_per_cell_;
  const double w0 = grid_.node_weight(0);
  Eigen::VectorXd s(nloc_);
  for (int a = 0; a < nodes_per_cell_; ++a)
    for (int k = 0; k < kDofs; ++k)
      s[kDofs * a + k] = 1.0 / std::sqrt(share * mass_[k] / w0);
  Eigen::MatrixXd S = s.asDiagonal() * Ke_ * s.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace poromix
