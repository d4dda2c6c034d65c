#include "poromix/rigid.hpp"

#include <Eigen/Eigenvalues>

#include "poromix/errors.hpp"

namespace poromix {

Vec3 RigidMotion::at(const Vec3& x) const {
  const Vec3 r{x[0] - center[0], x[1] - center[1], x[2] - center[2]};
  const Vec3 w = cross(rotation, r);
  return {translation[0] + w[0], translation[1] + w[1], translation[2] + w[2]};
}

namespace {

double density(const MaterialConstants& k, int constituent) {
  return constituent == 1 ? k.rho1 : k.rho2;
}

RigidMotion fit(const std::vector<double>& field, const Grid& g, double rho,
                int offset) {
  double mass = 0.0;
  Vec3 xc{}, mom{};
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    const double w = g.node_weight(n) * rho;
    const Vec3 x = g.position(n);
    mass += w;
    for (int i = 0; i < 3; ++i) {
      xc[i] += w * x[i];
      mom[i] += w * field[kDofsPerNode * n + offset + i];
    }
  }
  RigidMotion m;
  for (int i = 0; i < 3; ++i) {
    m.center[i] = xc[i] / mass;
    m.translation[i] = mom[i] / mass;
  }
  Eigen::Matrix3d I = Eigen::Matrix3d::Zero();
  Eigen::Vector3d L = Eigen::Vector3d::Zero();
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    const double w = g.node_weight(n) * rho;
    const Vec3 x = g.position(n);
    const Eigen::Vector3d r(x[0] - m.center[0], x[1] - m.center[1],
                            x[2] - m.center[2]);
    const Eigen::Vector3d u(field[kDofsPerNode * n + offset],
                            field[kDofsPerNode * n + offset + 1],
                            field[kDofsPerNode * n + offset + 2]);
    I += w * (r.squaredNorm() * Eigen::Matrix3d::Identity() -
              r * r.transpose());
    L += w * r.cross(u);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(I);
  const auto& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  int rank = 0;
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();
  for (int k = 0; k < 3; ++k) {
    if (top > 0 && ev[k] > 1e-12 * top) {
      ++rank;
      const Eigen::Vector3d e = es.eigenvectors().col(k);
      omega += e * (e.dot(L) / ev[k]);
    }
  }
  if (rank < 2)
    throw SingularInertia("rotational inertia has rank " +
                          std::to_string(rank));
  m.rotation = {omega[0], omega[1], omega[2]};
  return m;
}

}  // namespace

Moments constituent_moments(const StateField& s, const Grid& g,
                            const MaterialConstants& k, int constituent,
                            bool velocity) {
  const auto& f = velocity ? s.v : s.q;
  const int off = 3 * (constituent - 1);
  const double rho = density(k, constituent);
  Moments m;
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    const double w = g.node_weight(n) * rho;
    const Vec3 x = g.position(n);
    const Vec3 u{f[kDofsPerNode * n + off], f[kDofsPerNode * n + off + 1],
                 f[kDofsPerNode * n + off + 2]};
    const Vec3 c = cross(x, u);
    for (int i = 0; i < 3; ++i) {
      m.linear[i] += w * u[i];
      m.angular[i] += w * c[i];
    }
  }
  return m;
}

RigidDecomposition rigid_decompose(const StateField& initial,
                                   const MaterialConstants& consts,
                                   const Grid& grid) {
  grid.validate();
  RigidDecomposition out;
  out.residual = initial;
  for (int c = 1; c <= 2; ++c) {
    const double rho = density(consts, c);
    const int off = 3 * (c - 1);
    out.abar[c - 1] = fit(initial.q, grid, rho, off);
    out.abar_dot[c - 1] = fit(initial.v, grid, rho, off);
    for (std::size_t n = 0; n < grid.nodes(); ++n) {
      const Vec3 x = grid.position(n);
      const Vec3 a = out.abar[c - 1].at(x);
      const Vec3 ad = out.abar_dot[c - 1].at(x);
      const double w = grid.node_weight(n) * rho;
      for (int i = 0; i < 3; ++i) {
        out.residual.q[kDofsPerNode * n + off + i] -= a[i];
        out.residual.v[kDofsPerNode * n + off + i] -= ad[i];
        out.rigid_kinetic += 0.5 * w * ad[i] * ad[i];
      }
    }
  }
  return out;
}

}  // namespace poromix
