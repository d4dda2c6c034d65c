#include "poromix/solver.hpp"

#include <cmath>

#include "poromix/errors.hpp"

namespace poromix {

double stable_timestep(const Grid& grid, const SpeedParams& speed, double cfl) {
  if (!(cfl > 0 && cfl <= 1)) throw InvalidParameter("cfl must lie in (0, 1]");
  if (!(speed.c > 0)) throw InvalidParameter("wave speed must be positive");
  grid.validate();
  return cfl * grid.min_spacing() / (speed.c * std::sqrt(double(grid.dim)));
}

StateField initialize(const ProblemSpec& problem) {
  const Grid& g = problem.grid;
  StateField s;
  s.q.assign(g.nodes() * kDofsPerNode, 0.0);
  s.v.assign(g.nodes() * kDofsPerNode, 0.0);
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    const Vec3 x = g.position(n);
    double* q = &s.q[kDofsPerNode * n];
    double* v = &s.v[kDofsPerNode * n];
    for (const auto& p : problem.initial) {
      using K = InitialProfile::Kind;
      if (p.kind == K::Zero) continue;
      if (p.kind == K::Rigid) {
        const Vec3 w = cross(p.rotation, x);
        double* dst = p.velocity ? v : q;
        for (int c = 1; c <= 2; ++c) {
          if (p.constituent != 0 && p.constituent != c) continue;
          for (int i = 0; i < 3; ++i)
            dst[3 * (c - 1) + i] += p.translation[i] + w[i];
        }
        continue;
      }
      (p.velocity ? v : q)[p.dof] += p.shape(x);
      if (p.has_drift && !p.velocity)
        v[p.dof] -= dot(p.drift, p.shape_gradient(x));
    }
  }
  return s;
}

Simulator::Simulator(const ProblemSpec& problem)
    : problem_(problem), disc_(problem.grid, problem.material) {
  problem_.validate();
  form_ = assemble_quadratic_form(problem_.material);
  const auto bounds = elastic_moduli_bounds(form_);
  speed_ = wave_speed(problem_.material, bounds.xi_max, problem_.lambda);
  dt_ = stable_timestep(problem_.grid, speed_, problem_.cfl);
  if (problem_.T > 0) {
    nsteps_ = static_cast<std::size_t>(std::ceil(problem_.T / dt_ - 1e-9));
    dt_ = problem_.T / double(nsteps_);
  }

  const Grid& g = problem_.grid;
  const std::size_t ndof = disc_.dofs();
  pinned_.assign(ndof, 0);
  using BK = BoundaryCondition::Kind;
  for (int s = 0; s < side_count(g.dim); ++s)
    for (int f = 0; f < 2; ++f) {
      const auto& bc = problem_.boundary.sides[s][f];
      if (!bc.pinned()) continue;
      const int k0 = f == 0 ? 0 : 6, nk = f == 0 ? 6 : 2;
      for (std::size_t n : side_nodes(g, static_cast<Side>(s))) {
        const double patch = bc.patch(g.position(n));
        for (int k = 0; k < nk; ++k) {
          const std::size_t d = kDofsPerNode * n + k0 + k;
          if (pinned_[d]) continue;
          pinned_[d] = 1;
          const double amp =
              bc.kind == BK::DirichletZero ? 0.0 : bc.values[k] * patch;
          pins_.push_back({d, amp, bc.time});
        }
      }
    }
  for (int s = 0; s < side_count(g.dim); ++s)
    for (int f = 0; f < 2; ++f) {
      const auto& bc = problem_.boundary.sides[s][f];
      if (bc.kind != BK::PrescribedTraction) continue;
      const int k0 = f == 0 ? 0 : 6, nk = f == 0 ? 6 : 2;
      const Side side = static_cast<Side>(s);
      for (std::size_t n : side_nodes(g, side)) {
        const double w = side_weight(g, side, n) * bc.patch(g.position(n));
        for (int k = 0; k < nk; ++k) {
          const std::size_t d = kDofsPerNode * n + k0 + k;
          if (pinned_[d] || bc.values[k] == 0.0) continue;
          tractions_.push_back({d, w * bc.values[k], bc.time});
        }
      }
    }
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    const Vec3 x = g.position(n);
    const double w = g.node_weight(n);
    for (const auto& src : problem_.sources) {
      const double amp =
          w * disc_.source_density(src.dof) * src.shape(x);
      if (amp != 0.0)
        source_terms_.push_back({kDofsPerNode * n + src.dof, amp, src.time});
    }
  }

  pin_prev_.assign(pins_.size(), 0.0);
  f_src_.assign(ndof, 0.0);
  f_trac_.assign(ndof, 0.0);
  f_bnd_.assign(ndof, 0.0);
  a_.assign(ndof, 0.0);
  reset(initialize(problem_));
}

void Simulator::reset(const StateField& s) {
  state_ = s;
  apply_pins(state_.t);
  evaluate_loads(state_.t);
  finish_accelerations();
}

void Simulator::apply_pins(double t) {
  for (const auto& p : pins_) {
    state_.q[p.dof] = p.amplitude * p.time.value(t);
    state_.v[p.dof] = p.amplitude * p.time.rate(t);
    a_[p.dof] = p.amplitude * p.time.accel(t);
  }
}

void Simulator::evaluate_loads(double t) {
  std::fill(f_src_.begin(), f_src_.end(), 0.0);
  std::fill(f_trac_.begin(), f_trac_.end(), 0.0);
  for (const auto& s : source_terms_)
    f_src_[s.dof] += s.amplitude * s.time.value(t);
  for (const auto& s : tractions_)
    f_trac_[s.dof] += s.amplitude * s.time.value(t);
}

void Simulator::finish_accelerations() {
  disc_.internal_force(state_.q, f_int_);
  const auto& m = disc_.mass();
  for (std::size_t d = 0; d < a_.size(); ++d) {
    if (pinned_[d]) {
      f_bnd_[d] = m[d] * a_[d] - f_src_[d] + f_int_[d];
    } else {
      f_bnd_[d] = f_trac_[d];
      a_[d] = (f_src_[d] + f_trac_[d] - f_int_[d]) / m[d];
    }
  }
}

void Simulator::step() {
  const double h = 0.5 * dt_;
  auto& q = state_.q;
  auto& v = state_.v;
  const std::size_t n = q.size();
  const auto& m = disc_.mass();
  half_kinetic_ = {0.0, 0.0};
  for (std::size_t d = 0; d < n; ++d) {
    if (pinned_[d]) continue;
    v[d] += h * a_[d];
    q[d] += dt_ * v[d];
    half_kinetic_[d % kDofsPerNode < 6 ? 0 : 1] += 0.5 * m[d] * v[d] * v[d];
  }
  for (const auto& p : pins_) pin_prev_[&p - pins_.data()] = q[p.dof];
  state_.t = (step_ + 1 == nsteps_) ? problem_.T : state_.t + dt_;
  apply_pins(state_.t);
  for (const auto& p : pins_) {
    const double w = (q[p.dof] - pin_prev_[&p - pins_.data()]) / dt_;
    half_kinetic_[p.dof % kDofsPerNode < 6 ? 0 : 1] += 0.5 * m[p.dof] * w * w;
  }
  evaluate_loads(state_.t);
  finish_accelerations();
  for (std::size_t d = 0; d < n; ++d)
    if (!pinned_[d]) v[d] += h * a_[d];
  ++step_;
  for (std::size_t d = 0; d < n; ++d)
    if (!std::isfinite(q[d]) || !std::isfinite(v[d]))
      throw NonFinite(step_, "dof " + std::to_string(d) + " at t = " +
                                 std::to_string(state_.t));
}

EnergySample Simulator::energy() const {
  EnergySample e;
  e.t = state_.t;
  const auto& m = disc_.mass();
  const auto& v = state_.v;
  for (std::size_t d = 0; d < v.size(); ++d) {
    const double k = 0.5 * m[d] * v[d] * v[d];
    if (d % kDofsPerNode < 6)
      e.kinetic_u += k;
    else
      e.kinetic_phi += k;
  }
  for (std::size_t d = 0; d < v.size(); ++d)
    e.strain += 0.5 * state_.q[d] * f_int_[d];
  e.total = e.kinetic_u + e.kinetic_phi + e.strain;
  return e;
}

}  // namespace poromix
