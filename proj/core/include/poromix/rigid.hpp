#pragma once

#include <array>

#include "poromix/grid.hpp"
#include "poromix/material.hpp"
#include "poromix/solver.hpp"

namespace poromix {

/// u(x) = translation + rotation x (x - center).
struct RigidMotion {
  Vec3 translation{}, rotation{}, center{};

  Vec3 at(const Vec3& x) const;
};

/// Initial data split into per-constituent rigid parts and residuals whose
/// mass-weighted momentum and angular momentum vanish.
struct RigidDecomposition {
  std::array<RigidMotion, 2> abar, abar_dot;
  /// Residual displacements A (in q) and velocities A_dot (in v); the
  /// volume-fraction dofs are copied unchanged.
  StateField residual;
  /// (1/2) sum_alpha int rho_alpha abar_dot . abar_dot.
  double rigid_kinetic = 0.0;
};

/// Momentum and angular momentum (about the origin) of one constituent's
/// displacement (`velocity` false) or velocity field, with nodal quadrature.
struct Moments {
  Vec3 linear{}, angular{};
};
Moments constituent_moments(const StateField& s, const Grid& grid,
                            const MaterialConstants& consts, int constituent,
                            bool velocity);

/// Nodal quadrature uses the lumped-mass weights, the same weights that
/// define the discrete momentum the integrator conserves. On a 1D line the
/// rotational inertia has rank 2 and the rotation about the line is left
/// out; SingularInertia is raised below rank 2.
RigidDecomposition rigid_decompose(const StateField& initial,
                                   const MaterialConstants& consts,
                                   const Grid& grid);

}  // namespace poromix
