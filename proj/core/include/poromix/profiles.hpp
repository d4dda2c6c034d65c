#pragma once

#include <string>

#include "poromix/tensor.hpp"

namespace poromix {

/// Per-node degrees of freedom: u1 (0..2), u2 (3..5), phi1 (6), phi2 (7).
inline constexpr int kDofsPerNode = 8;

/// Maps "u1_1".."u2_3", "phi1", "phi2" (or the velocity names "v1_1"..
/// "v2_3", "psi1", "psi2") to a dof index; `velocity` reports which family
/// matched. Throws SchemaError on an unknown name.
int parse_field(const std::string& name, bool* velocity = nullptr);
/// Maps "f1_1".."f2_3", "l1", "l2" to the dof the source drives.
int parse_source_field(const std::string& name);
std::string field_name(int dof, bool velocity = false);

/// Scalar function of time with analytic first and second derivatives.
struct TimeProfile {
  enum class Kind { Constant, Gaussian, Sine };
  Kind kind = Kind::Constant;
  double amplitude = 1.0;
  double t0 = 0.0;     // gaussian centre
  double width = 1.0;  // gaussian width
  double omega = 1.0;  // sine angular frequency
  double phase = 0.0;

  double value(double t) const;
  double rate(double t) const;
  double accel(double t) const;

  friend bool operator==(const TimeProfile&, const TimeProfile&) = default;
};

/// Initial datum added into one field (or a rigid motion).
struct InitialProfile {
  enum class Kind { GaussianPulse, BumpPulse, PlaneWave, Rigid, Zero };
  Kind kind = Kind::Zero;
  int dof = 0;
  bool velocity = false;
  Vec3 center{};
  double width = 1.0;
  double amplitude = 1.0;
  /// Optional transport velocity for pulses: the matching velocity field
  /// receives -drift . grad(profile), making a one-way travelling pulse.
  Vec3 drift{};
  bool has_drift = false;
  Vec3 k{};  // plane wave vector
  double phase = 0.0;
  // Rigid motion T + w x x applied to constituent 1, 2, or both (0).
  Vec3 translation{}, rotation{};
  int constituent = 0;

  /// Spatial shape of a pulse or plane wave at x (unit amplitude scaling
  /// applied) and its gradient.
  double shape(const Vec3& x) const;
  Vec3 shape_gradient(const Vec3& x) const;

  friend bool operator==(const InitialProfile&, const InitialProfile&) = default;
};

/// Body force f1/f2 or extrinsic equilibrated force l1/l2: a Gaussian in
/// space times a time profile.
struct SourceProfile {
  int dof = 0;
  Vec3 center{};
  double width = 1.0;
  double amplitude = 1.0;
  TimeProfile time;

  double value(const Vec3& x, double t) const;
  /// Spatial part only.
  double shape(const Vec3& x) const;

  friend bool operator==(const SourceProfile&, const SourceProfile&) = default;
};

}  // namespace poromix
