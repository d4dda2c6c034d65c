#include <benchmark/benchmark.h>

#include "poromix/config.hpp"
#include "poromix/constitutive.hpp"
#include "poromix/diagnostics.hpp"
#include "poromix/random_material.hpp"
#include "poromix/solver.hpp"

using namespace poromix;

namespace {

ProblemSpec pulse(const char* name) {
  return load_config(std::string(POROMIX_CONFIG_DIR) + "/" + name).problem;
}

// Steps per second on a 1D line of range(0) nodes.
void BM_Step1D(benchmark::State& st) {
  ProblemSpec p = pulse("pulse_1d.txt");
  p.grid.n = {static_cast<int>(st.range(0)), 1};
  p.grid.h = {1.0 / (st.range(0) - 1), 1.0};
  p.T = 1e9;
  Simulator sim(p);
  for (auto _ : st) sim.step();
  st.SetItemsProcessed(st.iterations() * p.grid.nodes());
}
BENCHMARK(BM_Step1D)->Arg(101)->Arg(401)->Arg(1601);

void BM_Step2D(benchmark::State& st) {
  ProblemSpec p = pulse("pulse_2d.txt");
  const int n = static_cast<int>(st.range(0));
  p.grid.n = {n, n};
  p.grid.h = {1.0 / (n - 1), 1.0 / (n - 1)};
  p.T = 1e9;
  Simulator sim(p);
  for (auto _ : st) sim.step();
  st.SetItemsProcessed(st.iterations() * p.grid.nodes());
}
BENCHMARK(BM_Step2D)->Arg(21)->Arg(41)->Arg(81);

// Assembly of the 29x29 form plus its spectral bounds.
void BM_QuadraticForm(benchmark::State& st) {
  Rng rng(kDefaultSeed);
  const MaterialConstants m = random_material(rng);
  for (auto _ : st) {
    const QuadraticForm f = assemble_quadratic_form(m);
    benchmark::DoNotOptimize(elastic_moduli_bounds(f));
  }
}
BENCHMARK(BM_QuadraticForm);

void BM_GeneralizedStress(benchmark::State& st) {
  Rng rng(kDefaultSeed);
  const MaterialConstants m = random_material(rng);
  const StrainVector E = strain_vector(random_point_state(rng));
  for (auto _ : st) benchmark::DoNotOptimize(generalized_stress(m, E));
}
BENCHMARK(BM_GeneralizedStress);

// One step plus the surface-power accumulation over range(0) radii.
void BM_SurfacePower(benchmark::State& st) {
  ProblemSpec p = pulse("decay_1d.txt");
  p.T = 1e9;
  Simulator sim(p);
  const SupportGeometry geo = support_geometry(p, 0.5, 1e-3, {0.0});
  SurfacePowerRecorder rec(sim.disc(), geo,
                           default_r_grid(geo.L, st.range(0)), p.lambda);
  for (auto _ : st) {
    rec.observe(sim, false);
    sim.step();
  }
}
BENCHMARK(BM_SurfacePower)->Arg(33)->Arg(129);

}  // namespace

BENCHMARK_MAIN();
