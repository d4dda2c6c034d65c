#include <doctest.h>

#include <cmath>

#include "poromix/errors.hpp"
#include "poromix/random_material.hpp"
#include "poromix/run.hpp"
#include "poromix/solver.hpp"

using namespace poromix;

namespace {

ProblemSpec pulse_problem(int cells, double T) {
  ProblemSpec p;
  p.grid.dim = 1;
  p.grid.n = {cells + 1, 1};
  p.grid.h = {1.0 / cells, 1.0};
  Rng rng(kDefaultSeed);
  p.material = random_material(rng);
  InitialProfile ip;
  ip.kind = InitialProfile::Kind::GaussianPulse;
  ip.dof = 0;
  ip.center = {0.5, 0, 0};
  ip.width = 0.1;
  p.initial.push_back(ip);
  p.T = T;
  p.record.power = p.record.front = p.record.identities = false;
  return p;
}

double drift(const RunResult& r) {
  const double E0 = r.energy.front().total;
  double d = 0;
  for (const auto& e : r.energy) d = std::max(d, std::abs(e.total - E0) / E0);
  return d;
}

}  // namespace

TEST_CASE("time step") {
  Grid g;
  g.dim = 2;
  g.n = {5, 9};
  g.h = {0.2, 0.1};
  SpeedParams sp;
  sp.c = 4.0;
  CHECK(stable_timestep(g, sp, 0.5) == doctest::Approx(0.5 * 0.1 / (4.0 * std::sqrt(2.0))));
  CHECK_THROWS_AS(stable_timestep(g, sp, 1.5), InvalidParameter);
  sp.c = 0.0;
  CHECK_THROWS_AS(stable_timestep(g, sp, 0.5), InvalidParameter);
}

TEST_CASE("step count lands exactly on T") {
  const ProblemSpec p = pulse_problem(40, 0.1234);
  Simulator sim(p);
  CHECK(sim.dt() * double(sim.steps_to_final()) == doctest::Approx(0.1234).epsilon(1e-14));
  CHECK(sim.dt() <= stable_timestep(p.grid, sim.speed(), p.cfl));
  while (sim.step_index() < sim.steps_to_final()) sim.step();
  CHECK(sim.state().t == 0.1234);
}

TEST_CASE("initial data are sampled at the nodes") {
  ProblemSpec p = pulse_problem(20, 0.1);
  p.initial[0].has_drift = true;
  p.initial[0].drift = {2.0, 0, 0};
  const StateField s = initialize(p);
  for (std::size_t n = 0; n < p.grid.nodes(); ++n) {
    const Vec3 x = p.grid.position(n);
    CHECK(s.q[8 * n] == doctest::Approx(p.initial[0].shape(x)));
    CHECK(s.v[8 * n] == doctest::Approx(-2.0 * p.initial[0].shape_gradient(x)[0]));
    CHECK(s.q[8 * n + 3] == 0.0);
  }
}

TEST_CASE("energy is conserved to second order") {
  const RunResult a = simulate(pulse_problem(100, 0.3));
  const RunResult b = simulate(pulse_problem(200, 0.3));
  CHECK(drift(a) < 2e-3);
  CHECK(drift(a) / drift(b) > 3.0);
}

TEST_CASE("momentum is conserved with free ends") {
  ProblemSpec p = pulse_problem(50, 0.5);
  InitialProfile v;
  v.kind = InitialProfile::Kind::GaussianPulse;
  v.dof = 4;
  v.velocity = true;
  v.center = {0.3, 0, 0};
  v.width = 0.1;
  p.initial.push_back(v);
  Simulator sim(p);
  auto momentum = [&](int i) {
    double s = 0;
    const auto& m = sim.disc().mass();
    for (std::size_t n = 0; n < p.grid.nodes(); ++n)
      s += m[8 * n + i] * sim.state().v[8 * n + i] +
           m[8 * n + 3 + i] * sim.state().v[8 * n + 3 + i];
    return s;
  };
  const double p0 = momentum(1);
  while (sim.step_index() < sim.steps_to_final()) sim.step();
  CHECK(std::abs(momentum(1) - p0) < 1e-12);
}

TEST_CASE("Dirichlet ends stay pinned and report reactions") {
  ProblemSpec p = pulse_problem(50, 0.4);
  p.boundary.at(Side::XMin, Family::Displacement).kind =
      BoundaryCondition::Kind::DirichletZero;
  p.initial[0].center = {0.1, 0, 0};
  Simulator sim(p);
  double reaction = 0.0;
  while (sim.step_index() < sim.steps_to_final()) {
    sim.step();
    for (int k = 0; k < 6; ++k) {
      REQUIRE(sim.state().q[k] == 0.0);
      REQUIRE(sim.state().v[k] == 0.0);
    }
    reaction = std::max(reaction, std::abs(sim.boundary_load()[0]));
    CHECK(sim.pinned()[0]);
    CHECK_FALSE(sim.pinned()[6]);
  }
  CHECK(reaction > 0.0);
}

TEST_CASE("prescribed displacement follows its time profile") {
  ProblemSpec p = pulse_problem(30, 0.2);
  p.initial.clear();
  auto& bc = p.boundary.at(Side::XMax, Family::Displacement);
  bc.kind = BoundaryCondition::Kind::PrescribedDisplacement;
  bc.values = {0.01, 0, 0, 0.02, 0, 0};
  bc.time = {TimeProfile::Kind::Sine, 1.0, 0.0, 1.0, 20.0, 0.0};
  Simulator sim(p);
  const std::size_t last = 8 * (p.grid.nodes() - 1);
  while (sim.step_index() < sim.steps_to_final()) {
    sim.step();
    const double t = sim.state().t;
    REQUIRE(sim.state().q[last] == doctest::Approx(0.01 * std::sin(20 * t)));
    REQUIRE(sim.state().q[last + 3] == doctest::Approx(0.02 * std::sin(20 * t)));
    REQUIRE(sim.state().v[last] == doctest::Approx(0.2 * std::cos(20 * t)));
  }
}

TEST_CASE("null data stay exactly zero") {
  ProblemSpec p = pulse_problem(40, 0.2);
  p.initial.clear();
  Simulator sim(p);
  while (sim.step_index() < sim.steps_to_final()) sim.step();
  for (double x : sim.state().q) REQUIRE(x == 0.0);
  for (double x : sim.state().v) REQUIRE(x == 0.0);
}

TEST_CASE("overflow raises NonFinite with the step index") {
  ProblemSpec p = pulse_problem(40, 0.1);
  p.initial[0].amplitude = 1e308;
  try {
    simulate(p);
    FAIL("expected NonFinite");
  } catch (const NonFinite& e) {
    CHECK(e.step() > 0);
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("runs are bitwise deterministic") {
  const RunResult a = simulate(pulse_problem(60, 0.2));
  const RunResult b = simulate(pulse_problem(60, 0.2));
  CHECK(a.final_state.q == b.final_state.q);
  CHECK(a.final_state.v == b.final_state.v);
}

TEST_CASE("reset re-imposes pins") {
  ProblemSpec p = pulse_problem(20, 0.1);
  p.boundary.at(Side::XMin, Family::Fraction).kind =
      BoundaryCondition::Kind::DirichletZero;
  Simulator sim(p);
  StateField s = sim.state();
  s.q[6] = 5.0;
  sim.reset(s);
  CHECK(sim.state().q[6] == 0.0);
}

TEST_CASE("snapshot cadence from the memory budget") {
  RecordSpec r;
  r.snapshot_every = 7;
  CHECK(snapshot_cadence(r, 1000, 800) == 7);
  r.snapshot_every = 0;
  r.snapshot_budget_mb = 1e6;
  CHECK(snapshot_cadence(r, 1000, 800) == 1);
  r.snapshot_budget_mb = 3.0 * 8 * 800 * 11 / 1048576.0;  // about 10 snapshots
  const std::size_t every = snapshot_cadence(r, 1000, 800);
  CHECK(1000 / every + 1 <= 11);
  r.snapshot_budget_mb = 1e-6;
  CHECK_THROWS_AS(snapshot_cadence(r, 1000, 800), InvalidParameter);
}
