#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "poromix/constitutive.hpp"
#include "poromix/grid.hpp"
#include "poromix/material.hpp"

namespace poromix {

/// Bilinear (1D: linear) cells with 2-point Gauss quadrature per sampled
/// dimension and a lumped nodal mass. The cell stiffness is obtained by
/// probing the pointwise constitutive law with unit dof vectors, so the
/// discrete force is the exact gradient of the quadrature strain energy.
/// All cells are congruent and share one stiffness matrix.
class Discretization {
 public:
  Discretization(const Grid& grid, const MaterialConstants& consts);

  const Grid& grid() const { return grid_; }
  std::size_t dofs() const { return grid_.nodes() * kDofs; }
  int cell_dofs() const { return nloc_; }
  int gauss_points() const { return static_cast<int>(gp_.size()); }

  const Eigen::MatrixXd& cell_stiffness() const { return Ke_; }
  /// Lumped mass per dof: node weight times rho1, rho2, rho1 chi1, rho2 chi2.
  const std::vector<double>& mass() const { return mass_; }
  /// Mass density multiplying body sources per dof (rho1 or rho2).
  double source_density(int local_dof) const;

  void gather(std::size_t cell, const std::vector<double>& q,
              double* qc) const;

  /// f = K q (internal force).
  void internal_force(const std::vector<double>& q,
                      std::vector<double>& f) const;
  /// Strain energy q.Kq / 2.
  double strain_energy(const std::vector<double>& q) const;

  /// Interpolated point state at Gauss point `gp` of a cell.
  PointState point_state(const double* qc, int gp) const;
  /// Quadrature weight (including cell volume) of a Gauss point.
  double gauss_weight(int gp) const { return gp_[gp].w; }
  /// Physical position of a Gauss point.
  Vec3 gauss_position(std::size_t cell, int gp) const;

  /// Largest eigenvalue of M^-1 K over one cell, an upper bound for the
  /// squared angular frequency of the assembled system.
  double max_frequency2() const;

  static constexpr int kDofs = 8;

 private:
  struct GaussPoint {
    std::array<double, 4> N{};
    std::array<std::array<double, 2>, 4> dN{};
    std::array<double, 2> xi{};
    double w = 0.0;
  };

  Grid grid_;
  MaterialConstants consts_;
  int nodes_per_cell_;
  int nloc_;
  std::vector<GaussPoint> gp_;
  Eigen::MatrixXd Ke_;
  std::vector<double> mass_;
};

}  // namespace poromix
