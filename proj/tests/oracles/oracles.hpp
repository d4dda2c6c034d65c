#pragma once

// Reference computations used by the tests. Each one is written from the
// defining formulas with plain loops and shares no code with the library
// beyond the data types.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "poromix/constitutive.hpp"
#include "poromix/grid.hpp"
#include "poromix/material.hpp"

namespace oracle {

using poromix::MaterialConstants;
using poromix::PointState;
using poromix::Vec3;

/// Energy density summed term by term from the constants and the
/// kinematic quantities of a pointwise state.
inline double energy_density(const MaterialConstants& k, const PointState& s) {
  double e[3][3], g[3][3], d[3];
  for (int i = 0; i < 3; ++i) {
    d[i] = s.u1[i] - s.u2[i];
    for (int j = 0; j < 3; ++j) {
      // grad_u(i, j) = du_i / dx_j
      e[i][j] = 0.5 * (s.grad_u1(i, j) + s.grad_u1(j, i));
      g[i][j] = s.grad_u1(j, i) + s.grad_u2(i, j);
    }
  }
  const double p1 = s.phi1, p2 = s.phi2;
  double W = 0.5 * k.zeta * p1 * p1 + k.tau * p1 * p2 + 0.5 * k.mu * p2 * p2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int r = 0; r < 3; ++r)
        for (int q = 0; q < 3; ++q) {
          W += 0.5 * k.A(i, j, r, q) * e[i][j] * e[r][q];
          W += k.B(i, j, r, q) * e[i][j] * g[r][q];
          W += 0.5 * k.C(i, j, r, q) * g[i][j] * g[r][q];
        }
      W += k.D(i, j) * e[i][j] * p1 + k.E(i, j) * e[i][j] * p2;
      W += k.M(i, j) * g[i][j] * p1 + k.N(i, j) * g[i][j] * p2;
      W += 0.5 * k.a(i, j) * d[i] * d[j];
      W += k.b(i, j) * d[i] * s.grad_phi1[j] + k.c(i, j) * d[i] * s.grad_phi2[j];
      W += 0.5 * k.alpha(i, j) * s.grad_phi1[i] * s.grad_phi1[j];
      W += k.beta(i, j) * s.grad_phi1[i] * s.grad_phi2[j];
      W += 0.5 * k.gamma(i, j) * s.grad_phi2[i] * s.grad_phi2[j];
    }
  return W;
}

/// Generalized stress as the gradient of the term-by-term energy. W is
/// quadratic, so the symmetric difference with unit step is exact up to
/// rounding. S1(j, i) = dW / d(u1_i,j); g = -dW/dphi; h = dW/dgrad(phi);
/// p = dW/du1 (the relative displacement enters only through u1 - u2).
inline poromix::GeneralizedStress stress(const MaterialConstants& k,
                                         const PointState& s) {
  auto diff = [&](const std::function<double&(PointState&)>& slot) {
    PointState a = s, b = s;
    slot(a) += 1.0;
    slot(b) -= 1.0;
    return 0.5 * (energy_density(k, a) - energy_density(k, b));
  };
  poromix::GeneralizedStress S;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      S.S1(j, i) = diff([=](PointState& p) -> double& { return p.grad_u1(i, j); });
      S.S2(j, i) = diff([=](PointState& p) -> double& { return p.grad_u2(i, j); });
    }
    S.p[i] = diff([=](PointState& p) -> double& { return p.u1[i]; });
    S.h1[i] = diff([=](PointState& p) -> double& { return p.grad_phi1[i]; });
    S.h2[i] = diff([=](PointState& p) -> double& { return p.grad_phi2[i]; });
  }
  S.g1 = -diff([](PointState& p) -> double& { return p.phi1; });
  S.g2 = -diff([](PointState& p) -> double& { return p.phi2; });
  return S;
}

/// Cyclic Jacobi rotations with accumulated eigenvectors (columns of V).
inline void jacobi(Eigen::MatrixXd a, Eigen::VectorXd& values,
                   Eigen::MatrixXd& V) {
  const int n = static_cast<int>(a.rows());
  V = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = 0.5 * std::atan2(2 * a(p, q), a(q, q) - a(p, p));
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }
  values = a.diagonal();
}

/// Extreme moduli over strain vectors with e_ij = e_ji: the full spectrum
/// minus the three eigenvectors lying in the antisymmetric-e directions.
inline std::pair<double, double> moduli(const Eigen::MatrixXd& A29) {
  Eigen::VectorXd w;
  Eigen::MatrixXd V;
  jacobi(A29, w, V);
  std::vector<std::pair<double, int>> anti;
  for (int k = 0; k < 29; ++k) {
    double a2 = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double x = (V(3 * i + j, k) - V(3 * j + i, k)) / std::sqrt(2.0);
        a2 += x * x;
      }
    anti.emplace_back(-a2, k);
  }
  std::sort(anti.begin(), anti.end());
  std::vector<char> drop(29, 0);
  for (int t = 0; t < 3; ++t) drop[anti[t].second] = 1;
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k < 29; ++k)
    if (!drop[k]) {
      lo = std::min(lo, w[k]);
      hi = std::max(hi, w[k]);
    }
  return {lo, hi};
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Minimum Euclidean distance from every node to any flagged node.
inline std::vector<double> brute_distance(const poromix::Grid& g,
                                          const std::vector<char>& mask) {
  std::vector<double> d(g.nodes(), 1e300);
  for (std::size_t a = 0; a < g.nodes(); ++a)
    for (std::size_t b = 0; b < g.nodes(); ++b)
      if (mask[b]) {
        const Vec3 x = g.position(a), y = g.position(b);
        double r2 = 0.0;
        for (int i = 0; i < 3; ++i) r2 += (x[i] - y[i]) * (x[i] - y[i]);
        d[a] = std::min(d[a], std::sqrt(r2));
      }
  return d;
}

/// Control-volume weight of a node: the cell measure h (per sampled
/// dimension) halved on each boundary facet.
inline double control_volume(const poromix::Grid& g, int ix, int iy) {
  double w = g.h[0] * ((ix == 0 || ix == g.n[0] - 1) ? 0.5 : 1.0);
  if (g.dim == 2) w *= g.h[1] * ((iy == 0 || iy == g.n[1] - 1) ? 0.5 : 1.0);
  return w;
}

/// Linear and angular momentum (about the origin) of one constituent's
/// nodal vector field, with control-volume quadrature.
inline std::pair<Vec3, Vec3> moments(const poromix::Grid& g,
                                     const std::vector<double>& field,
                                     int constituent, double rho) {
  Vec3 lin{}, ang{};
  for (int iy = 0; iy < (g.dim == 2 ? g.n[1] : 1); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix) {
      const std::size_t n = ix + static_cast<std::size_t>(g.n[0]) * iy;
      const Vec3 x{g.origin[0] + ix * g.h[0],
                   g.dim == 2 ? g.origin[1] + iy * g.h[1] : 0.0, 0.0};
      const double w = rho * control_volume(g, ix, iy);
      const double* u = &field[8 * n + 3 * (constituent - 1)];
      for (int i = 0; i < 3; ++i) lin[i] += w * u[i];
      ang[0] += w * (x[1] * u[2] - x[2] * u[1]);
      ang[1] += w * (x[2] * u[0] - x[0] * u[2]);
      ang[2] += w * (x[0] * u[1] - x[1] * u[0]);
    }
  return {lin, ang};
}

}  // namespace oracle
