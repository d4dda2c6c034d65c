#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "poromix/config.hpp"
#include "poromix/errors.hpp"
#include "poromix/verify.hpp"

using namespace poromix;

namespace {

RunConfig small_config() {
  RunConfig c = load_config(std::string(POROMIX_CONFIG_DIR) + "/pulse_1d.txt");
  c.problem.grid.n = {101, 1};
  c.problem.grid.h = {0.01, 1.0};
  c.problem.T = 0.1;
  return c;
}

const Check& find(const std::vector<Check>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST_CASE("refinement and null data") {
  ProblemSpec p = small_config().problem;
  p.record.energy_every = 3;
  p.record.snapshot_every = 5;
  const ProblemSpec r = refined(p, 2);
  CHECK(r.grid.n[0] == 401);
  CHECK(r.grid.h[0] == doctest::Approx(0.0025));
  CHECK(r.record.energy_every == 12);
  CHECK(r.record.snapshot_every == 5);
  CHECK(r.grid.volume() == doctest::Approx(p.grid.volume()));

  p.boundary.at(Side::XMax, Family::Displacement).kind =
      BoundaryCondition::Kind::PrescribedDisplacement;
  p.boundary.at(Side::XMax, Family::Displacement).values = {1, 0, 0, 0, 0, 0};
  const ProblemSpec z = null_data(p);
  CHECK(z.initial.empty());
  CHECK(z.sources.empty());
  CHECK(z.boundary.homogeneous(1));
  CHECK(z.boundary.displacement_pinned(1));
}

TEST_CASE("observed order") {
  CHECK(observed_order(4.0, 1.0) == doctest::Approx(2.0));
  CHECK(observed_order(1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("parallel runner") {
  std::atomic<int> n{0};
  std::vector<std::function<void()>> tasks;
  for (int i = 0; i < 20; ++i) tasks.push_back([&] { ++n; });
  run_parallel(tasks, 4);
  CHECK(n == 20);
  tasks.push_back([] { throw InvalidParameter("boom"); });
  CHECK_THROWS_AS(run_parallel(tasks, 3), InvalidParameter);
  CHECK(worker_threads(0) >= 1);
  CHECK(worker_threads(3) == 3);
  setenv("POROMIX_THREADS", "2", 1);
  CHECK(worker_threads(8) == 2);
  unsetenv("POROMIX_THREADS");
}

TEST_CASE("constitutive sampling is seed-deterministic") {
  const ConstitutiveStats a = sample_constitutive(5, 300);
  const ConstitutiveStats b = sample_constitutive(5, 300);
  CHECK(a.samples == 300);
  CHECK(a.stress_ratio == b.stress_ratio);
  CHECK(a.lower_violation <= 1e-12);
  CHECK(a.upper_violation <= 1e-12);
  CHECK(a.static_residual < 1e-10);
  CHECK(a.rate_residual < 1e-10);
  CHECK(a.dual_formula < 1e-12);
  CHECK(a.traction_ratio <= 1 + 1e-9);
}

TEST_CASE("constitutive suite reports every property") {
  VerifyOptions opt;
  opt.samples = 200;
  const VerifyReport rep = verify(small_config(), "constitutive", opt);
  for (const char* name : {"material_symmetries", "material_admissible",
                           "energy_lower_bound", "energy_upper_bound",
                           "power_identity_static", "power_identity_rate",
                           "dual_formula", "stress_bound", "traction_bound",
                           "traction_energy_bound"}) {
    CAPTURE(name);
    CHECK_NOTHROW(find(rep.checks, name));
  }
  CHECK(find(rep.checks, "dual_formula").pass);
  CHECK(rep.text().find("overall") != std::string::npos);
  CHECK(rep.csv().find("dual_formula") != std::string::npos);
  CHECK(rep.seed == kDefaultSeed);
}

TEST_CASE("uniqueness suite") {
  const auto checks = uniqueness_suite(small_config(), {});
  CHECK(find(checks, "null_data_zero").pass);
  CHECK(find(checks, "null_data_zero").measured == 0.0);
  CHECK(find(checks, "deterministic_outputs").pass);
}

TEST_CASE("suites refuse settings they cannot judge") {
  RunConfig c = small_config();
  SourceProfile s;
  s.dof = 0;
  c.problem.sources.push_back(s);
  VerifyOptions opt;
  opt.rigid_fields = 2;
  const auto eq = equipartition_suite(c, opt);
  CHECK_FALSE(find(eq, "equipartition").pass);
  CHECK(std::isnan(find(eq, "equipartition").measured));
  CHECK_FALSE(energy_conservation_checks(c.problem, 1).front().pass);
  CHECK_THROWS_AS(verify(c, "everything", opt), SchemaError);
}

TEST_CASE("identity orders on a small problem") {
  ProblemSpec p = small_config().problem;
  p.record.snapshot_every = 2;
  SourceProfile s;
  s.dof = 3;
  s.center = {0.4, 0, 0};
  s.width = 0.08;
  s.time = {TimeProfile::Kind::Gaussian, 1.0, 0.05, 0.03, 1.0, 0.0};
  p.sources.push_back(s);
  const auto checks = identity_order_checks(p, 0);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}
