#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "poromix/discretization.hpp"
#include "poromix/material.hpp"
#include "poromix/problem.hpp"

namespace poromix {

/// Nodal solution: dof k of node n lives at index 8 n + k.
struct StateField {
  double t = 0.0;
  std::vector<double> q, v;
};

/// dt = cfl min(h) / (c sqrt(dim)).
double stable_timestep(const Grid& grid, const SpeedParams& speed, double cfl);

/// Nodal sampling of the initial data (before boundary pinning).
StateField initialize(const ProblemSpec& problem);

struct EnergySample {
  double t = 0.0;
  double kinetic_u = 0.0;
  double kinetic_phi = 0.0;
  double strain = 0.0;
  double total = 0.0;
};

/// Explicit kick-drift-kick integrator for the semi-discrete system
/// M a = F_src + F_bnd - K q. Dirichlet dofs follow their prescribed
/// motion exactly; their reactions are part of the boundary load.
class Simulator {
 public:
  explicit Simulator(const ProblemSpec& problem);
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  const ProblemSpec& problem() const { return problem_; }
  const Discretization& disc() const { return disc_; }
  const QuadraticForm& form() const { return form_; }
  const SpeedParams& speed() const { return speed_; }
  double dt() const { return dt_; }
  /// Number of steps needed to reach T.
  std::size_t steps_to_final() const { return nsteps_; }
  std::size_t step_index() const { return step_; }

  const StateField& state() const { return state_; }
  const std::vector<double>& acceleration() const { return a_; }
  const std::vector<double>& internal_force() const { return f_int_; }
  /// Nodal body-source load at the current time.
  const std::vector<double>& source_load() const { return f_src_; }
  /// Nodal boundary load at the current time: prescribed tractions plus
  /// reactions at pinned dofs.
  const std::vector<double>& boundary_load() const { return f_bnd_; }
  const std::vector<char>& pinned() const { return pinned_; }

  EnergySample energy() const;

  /// Kinetic energy (displacement part, volume-fraction part) of the
  /// staggered velocities of the last step, i.e. at its midpoint. Integrating
  /// it with the midpoint rule is free of the O(dt^2) bias the full-step
  /// velocities carry into time averages.
  const std::array<double, 2>& half_step_kinetic() const {
    return half_kinetic_;
  }

  /// Advances one step; throws NonFinite if the update is not finite.
  void step();

  /// Replaces the state (t, q, v); pinned dofs are re-imposed.
  void reset(const StateField& s);

 private:
  void apply_pins(double t);
  void evaluate_loads(double t);
  void finish_accelerations();

  ProblemSpec problem_;
  Discretization disc_;
  QuadraticForm form_;
  SpeedParams speed_;
  double dt_ = 0.0;
  std::size_t nsteps_ = 0;
  std::size_t step_ = 0;

  StateField state_;
  std::vector<double> a_, f_int_, f_src_, f_trac_, f_bnd_;
  std::vector<char> pinned_;
  std::vector<double> pin_prev_;
  std::array<double, 2> half_kinetic_{};
  struct Term {
    std::size_t dof;
    double amplitude;
    TimeProfile time;
  };
  std::vector<Term> pins_, tractions_, source_terms_;
};

}  // namespace poromix
