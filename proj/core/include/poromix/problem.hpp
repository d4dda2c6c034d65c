#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "poromix/grid.hpp"
#include "poromix/material.hpp"
#include "poromix/profiles.hpp"

namespace poromix {

/// Condition on one side for one field family (displacements of both
/// constituents, or both volume fractions).
struct BoundaryCondition {
  enum class Kind { DirichletZero, TractionFree, PrescribedDisplacement,
                    PrescribedTraction };
  Kind kind = Kind::TractionFree;
  /// Prescribed amplitudes: six for displacements/tractions (constituent 1
  /// then 2), two for volume fractions/equilibrated tractions.
  std::vector<double> values;
  TimeProfile time;
  /// Optional Gaussian patch along the side; uniform when width <= 0.
  Vec3 center{};
  double width = 0.0;

  bool pinned() const {
    return kind == Kind::DirichletZero || kind == Kind::PrescribedDisplacement;
  }
  /// Spatial factor of the prescribed data at x.
  double patch(const Vec3& x) const;

  friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;
};

enum class Family { Displacement = 0, Fraction = 1 };

struct BoundarySpec {
  /// sides[side][family]
  std::array<std::array<BoundaryCondition, 2>, 4> sides{};

  const BoundaryCondition& at(Side s, Family f) const {
    return sides[static_cast<int>(s)][static_cast<int>(f)];
  }
  BoundaryCondition& at(Side s, Family f) {
    return sides[static_cast<int>(s)][static_cast<int>(f)];
  }
  /// True when any side pins the displacements.
  bool displacement_pinned(int dim) const;
  /// True when every condition is homogeneous (zero data).
  bool homogeneous(int dim) const;

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

struct RecordSpec {
  std::size_t energy_every = 1;
  /// Snapshot cadence in steps; 0 derives it from the budget.
  std::size_t snapshot_every = 0;
  /// Memory budget for retained snapshots, in megabytes.
  double snapshot_budget_mb = 256.0;
  bool write_snapshots = false;
  bool power = true;
  bool identities = true;
  bool front = true;
  /// Radii for P(r, t); empty selects `r_count` equally spaced radii on
  /// [0, L].
  std::vector<double> r_grid;
  std::size_t r_count = 33;
  /// Relative threshold (of peak datum) defining the data support.
  double support_threshold = 1e-14;
  /// Relative threshold (of peak state magnitude) defining the front.
  double front_threshold = 1e-8;

  friend bool operator==(const RecordSpec&, const RecordSpec&) = default;
};

struct ProblemSpec {
  Grid grid;
  MaterialConstants material;
  std::string material_path;
  double lambda = 1.0;
  double T = 1.0;
  double cfl = 0.5;
  std::vector<InitialProfile> initial;
  std::vector<SourceProfile> sources;
  BoundarySpec boundary;
  RecordSpec record;

  /// Throws InvalidParameter / SchemaError on inconsistent settings.
  void validate() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

}  // namespace poromix
