#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "poromix/diagnostics.hpp"
#include "poromix/errors.hpp"
#include "poromix/random_material.hpp"
#include "poromix/run.hpp"

using namespace poromix;

namespace {

ProblemSpec base_1d(int cells, double L) {
  ProblemSpec p;
  p.grid.dim = 1;
  p.grid.n = {cells + 1, 1};
  p.grid.h = {L / cells, 1.0};
  Rng rng(kDefaultSeed);
  p.material = random_material(rng);
  return p;
}

InitialProfile pulse(int dof, Vec3 c, double w) {
  InitialProfile ip;
  ip.kind = InitialProfile::Kind::GaussianPulse;
  ip.dof = dof;
  ip.center = c;
  ip.width = w;
  return ip;
}

}  // namespace

TEST_CASE("support distances match a brute-force search") {
  ProblemSpec p;
  p.grid.dim = 2;
  p.grid.n = {21, 17};
  p.grid.h = {0.05, 0.0625};
  Rng rng(1);
  p.material = random_material(rng);
  p.initial.push_back(pulse(0, {0.2, 0.3, 0}, 0.05));
  p.initial.push_back(pulse(7, {0.8, 0.7, 0}, 0.04));
  p.T = 0.1;
  const SupportGeometry g = support_geometry(p, p.T, 1e-6, {0.0});
  CHECK_FALSE(g.fallback);
  const auto ref = oracle::brute_distance(p.grid, g.support_mask);
  double L = 0;
  for (std::size_t n = 0; n < p.grid.nodes(); ++n) {
    CHECK(g.dist[n] == doctest::Approx(ref[n]).epsilon(1e-14));
    L = std::max(L, ref[n]);
    // The mask is where the data exceed the threshold.
    const Vec3 x = p.grid.position(n);
    const double v = std::max(p.initial[0].shape(x), p.initial[1].shape(x));
    CHECK(bool(g.support_mask[n]) == (v > 1e-6));
  }
  CHECK(g.L == doctest::Approx(L));
}

TEST_CASE("sources and boundary data belong to the support") {
  ProblemSpec p = base_1d(40, 1.0);
  SourceProfile s;
  s.dof = 3;
  s.center = {0.25, 0, 0};
  s.width = 0.02;
  s.time = {TimeProfile::Kind::Gaussian, 1.0, 0.05, 0.01, 1.0, 0.0};
  p.sources.push_back(s);
  auto& bc = p.boundary.at(Side::XMax, Family::Displacement);
  bc.kind = BoundaryCondition::Kind::PrescribedTraction;
  bc.values = {1, 0, 0, 0, 0, 0};
  p.T = 0.1;
  const SupportGeometry g = support_geometry(p, p.T, 1e-6, {0.0, 0.05, 0.1});
  CHECK(g.support_mask[10]);
  CHECK(g.support_mask[40]);
  CHECK_FALSE(g.support_mask[30]);
  CHECK(g.dist[30] == doctest::Approx(0.25));
}

TEST_CASE("empty support falls back to a boundary node") {
  Grid grid;
  grid.dim = 1;
  grid.n = {11, 1};
  grid.h = {0.1, 1.0};
  const SupportGeometry g = support_from_mask(grid, {});
  CHECK(g.fallback);
  CHECK(g.dist[0] == 0.0);
  CHECK(g.L == doctest::Approx(1.0));
}

TEST_CASE("default radii") {
  const auto r = default_r_grid(2.0, 5);
  REQUIRE(r.size() == 5);
  CHECK(r.front() == 0.0);
  CHECK(r[1] == doctest::Approx(0.5));
  CHECK(r.back() == doctest::Approx(2.0));
}

TEST_CASE("decay bound and fitted slope on synthetic profiles") {
  SpeedParams sp;
  sp.c = 2.0;
  sp.lambda = 1.0;
  std::vector<double> r, P;
  for (int i = 0; i <= 20; ++i) {
    r.push_back(0.1 * i);
    P.push_back(3.0 * std::exp(-0.9 * r.back()));  // faster than the envelope exp(-r / 2)
  }
  const DecayBound b = decay_bound(r, P, sp, 1.0, 0.05);
  CHECK(b.ok);
  CHECK(b.radii_checked == 21);  // r <= c t = 2
  CHECK(b.max_ratio == doctest::Approx(1.0));
  const DecayReport rep = decay_report(r, P, sp, 1.0, 0.05);
  CHECK(rep.slope == doctest::Approx(-0.9));
  CHECK(rep.bound_ok);

  // Only radii within c t count.
  const DecayBound b2 = decay_bound(r, P, sp, 0.5, 0.05);
  CHECK(b2.radii_checked == 11);

  // Slower decay than the envelope fails.
  for (std::size_t i = 0; i < P.size(); ++i) P[i] = std::exp(-0.2 * r[i]);
  CHECK_FALSE(decay_bound(r, P, sp, 1.0, 0.05).ok);

  // Nothing to compare against when P(0) <= 0; only the sign is checked.
  std::vector<double> Z(r.size(), 0.0);
  const DecayBound bz = decay_bound(r, Z, sp, 1.0, 0.05);
  CHECK(bz.ok);
  CHECK(bz.max_ratio == 0.0);
  Z[3] = 1e-3;
  CHECK_FALSE(decay_bound(r, Z, sp, 1.0, 0.05).ok);

  std::vector<double> r2{0.0, 0.1}, P2{1.0, 0.5};
  CHECK_THROWS_AS(decay_report(r2, P2, sp, 1.0, 0.05), Degenerate);
}

TEST_CASE("front speed fit") {
  std::vector<FrontSample> f;
  for (int i = 0; i <= 10; ++i) f.push_back({0.1 * i, 0.05 + 1.7 * 0.1 * i});
  CHECK(front_speed(f, 10.0) == doctest::Approx(1.7));
  // Samples at r = 0 or beyond 0.95 L are ignored.
  f.push_back({2.0, 9.9});
  CHECK(front_speed(f, 10.0) == doctest::Approx(1.7));
  CHECK_THROWS_AS(front_speed({{0.0, 0.0}, {1.0, 0.0}}, 1.0), NoFront);
}

TEST_CASE("front recorder threshold") {
  Grid grid;
  grid.dim = 1;
  grid.n = {11, 1};
  grid.h = {0.1, 1.0};
  std::vector<char> mask(11, 0);
  mask[0] = 1;
  FrontRecorder rec(support_from_mask(grid, mask));
  StateField s;
  s.q.assign(88, 0.0);
  s.v.assign(88, 0.0);
  s.q[0] = 1.0;
  rec.observe(s);
  s.t = 1.0;
  s.q[8 * 4 + 1] = 1e-3;
  s.q[8 * 7 + 6] = 1e-9;
  rec.observe(s);
  const auto f = rec.fronts(1e-6);
  REQUIRE(f.size() == 2);
  CHECK(f[0].r_front == 0.0);
  CHECK(f[1].r_front == doctest::Approx(0.4));
  CHECK(rec.fronts(1e-10)[1].r_front == doctest::Approx(0.7));
}

TEST_CASE("Cesaro means of an oscillator") {
  std::vector<EnergySample> e;
  const double w = 3.0;
  for (int i = 0; i <= 20000; ++i) {
    EnergySample s;
    s.t = 1e-3 * i;
    s.kinetic_u = std::pow(std::sin(w * s.t), 2);
    s.strain = std::pow(std::cos(w * s.t), 2);
    s.total = s.kinetic_u + s.strain;
    e.push_back(s);
  }
  const auto c = cesaro_means(e);
  CHECK(c.front().t > 0);
  const CesaroSample last = c.back();
  // (1/t) int_0^t sin^2 = 1/2 - sin(2wt) / (4wt)
  const double t = 20.0;
  CHECK(last.Kc == doctest::Approx(0.5 - std::sin(2 * w * t) / (4 * w * t)).epsilon(1e-6));
  CHECK(last.Kc + last.Sc == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cesaro_at(e, 10.0).Kc ==
        doctest::Approx(0.5 - std::sin(2 * w * 10) / (4 * w * 10)).epsilon(1e-6));
  CHECK_THROWS_AS(cesaro_at(e, 0.0), UndefinedAtZero);
}

TEST_CASE("equipartition report") {
  std::vector<CesaroSample> c;
  for (int i = 1; i <= 4000; ++i) {
    CesaroSample s;
    s.t = 0.01 * i;
    s.gap = std::sin(7 * s.t) / s.t;
    c.push_back(s);
  }
  const EquipartitionReport r1 = equipartition_report(c, 2.0, true, nullptr);
  CHECK(r1.case_id == 1);
  CHECK(r1.decay_exponent == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(r1.relative_error == doctest::Approx(std::abs(c.back().gap) / 2.0));
  CHECK_THROWS_AS(equipartition_report(c, 2.0, false, nullptr),
                  MissingDecomposition);
  RigidDecomposition rd;
  rd.rigid_kinetic = 0.25;
  const EquipartitionReport r2 = equipartition_report(c, 2.0, false, &rd);
  CHECK(r2.case_id == 2);
  CHECK(r2.predicted_offset == 0.25);
  CHECK_THROWS_AS(equipartition_report({}, 1.0, true, nullptr), InvalidParameter);
}

TEST_CASE("surface power: positive, monotone, and equal to the energy of B_r") {
  ProblemSpec p = base_1d(200, 2.0);
  p.initial.push_back(pulse(0, {1.0, 0, 0}, 0.1));
  p.T = 0.3;
  p.record.front = p.record.identities = false;
  p.record.energy_every = 5;
  const RunResult r = simulate(p);
  const auto& P = r.power;
  double peak = 0;
  for (const auto& row : P.P) for (double x : row) peak = std::max(peak, std::abs(x));
  REQUIRE(peak > 0);
  for (std::size_t k = 0; k < P.t_grid.size(); ++k)
    for (std::size_t j = 0; j < P.r_grid.size(); ++j) {
      CHECK(P.P[k][j] >= -1e-9 * peak);
      if (j) CHECK(P.P[k][j] <= P.P[k][j - 1] + 1e-12 * peak);
      CHECK(std::abs(P.P[k][j] - P.E_vol[k][j]) <= 0.03 * peak);
    }
  // At r = 0 the region is the whole body: P(0, t) is the weighted total
  // energy integral, starting from zero.
  CHECK(P.P.front()[0] == 0.0);
}

TEST_CASE("instantaneous flux vanishes for a state at rest with no strain") {
  ProblemSpec p = base_1d(50, 1.0);
  p.initial.push_back(pulse(0, {0.5, 0, 0}, 0.1));
  Simulator sim(p);
  const Discretization& d = sim.disc();
  const SupportGeometry g = support_geometry(p, 1.0, 1e-14, {0.0});
  SurfacePowerRecorder rec(d, g, default_r_grid(g.L, 5), 1.0);
  StateField s;
  s.q.assign(d.dofs(), 0.0);
  s.v.assign(d.dofs(), 0.0);
  std::vector<double> flux, energy;
  rec.instantaneous(s, flux, energy);
  for (double f : flux) CHECK(f == 0.0);
  for (double e : energy) CHECK(e == 0.0);
}

TEST_CASE("identity residuals: reciprocal identity exact with per-step snapshots") {
  ProblemSpec p = base_1d(60, 1.0);
  p.initial.push_back(pulse(0, {0.5, 0, 0}, 0.1));
  SourceProfile s;
  s.dof = 3;
  s.center = {0.4, 0, 0};
  s.width = 0.1;
  s.time = {TimeProfile::Kind::Gaussian, 1.0, 0.1, 0.05, 1.0, 0.0};
  p.sources.push_back(s);
  p.T = 0.3;
  p.record.power = p.record.front = false;
  p.record.snapshot_every = 1;
  const RunResult r = simulate(p);
  REQUIRE(r.residuals.size() == r.steps + 1);
  double scale = 0;
  for (const auto& e : r.energy) scale = std::max(scale, e.total);
  for (const auto& x : r.residuals) {
    if (std::isfinite(x.res_reciprocal)) CHECK(x.res_reciprocal < 1e-12 * scale);
  }
  CHECK(std::isnan(r.residuals.back().res_reciprocal));
  CHECK_THROWS_AS(reciprocal_residual({}, {}, 1), InsufficientSnapshots);
}

TEST_CASE("energy and virial residuals shrink at second order") {
  std::array<double, 2> re{}, rv{};
  for (int l = 0; l < 2; ++l) {
    ProblemSpec p = base_1d(50 << l, 1.0);
    p.initial.push_back(pulse(0, {0.5, 0, 0}, 0.1));
    p.boundary.at(Side::XMin, Family::Displacement).kind =
        BoundaryCondition::Kind::DirichletZero;
    p.T = 0.3;
    p.record.power = p.record.front = false;
    p.record.snapshot_every = 4;
    const RunResult r = simulate(p);
    for (const auto& x : r.residuals) {
      re[l] = std::max(re[l], x.res_energy);
      rv[l] = std::max(rv[l], x.res_virial);
    }
  }
  CHECK(std::log2(re[0] / re[1]) > 1.7);
  CHECK(std::log2(rv[0] / rv[1]) > 1.7);
}
