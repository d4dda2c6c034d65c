#pragma once

#include <cstdint>
#include <random>

#include "poromix/constitutive.hpp"
#include "poromix/material.hpp"

namespace poromix {

/// Seed used by every randomized check unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 2718;

using Rng = std::mt19937_64;

/// Averages each constrained tensor over its symmetry group so that all
/// symmetry relations hold.
MaterialConstants symmetrized(const MaterialConstants& consts);

/// Admissible material near a mixture of two isotropic solids: identity-like
/// diagonal blocks plus couplings of size `coupling`. Densities and
/// inertias are drawn from [0.5, 2]. If the smallest modulus falls below
/// `margin`, a multiple of the identity material is added to lift it.
MaterialConstants random_material(Rng& rng, double coupling = 0.2,
                                  double margin = 0.1);

/// Admissible material with unit-scale entries and no preferred structure:
/// a symmetrized random draw shifted by the identity material until the
/// smallest modulus reaches `margin`.
MaterialConstants random_broad_material(Rng& rng, double margin = 0.05);

/// Random pointwise state with entries in [-1, 1].
PointState random_point_state(Rng& rng);

/// Random strain vector with e_ij = e_ji and entries in [-1, 1].
StrainVector random_strain(Rng& rng);

/// Material where every coupling is zero: A = iso(1, 1), C = delta_ir
/// delta_js, unit volume fraction moduli. With rho1 = 1 and rho2 = 0.4 the
/// locked longitudinal mode u1_1 = u2_1 travels at sqrt(5), the fastest
/// speed of the system.
MaterialConstants decoupled_material();

}  // namespace poromix
