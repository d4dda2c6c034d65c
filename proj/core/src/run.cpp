#include "poromix/run.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "poromix/errors.hpp"

namespace poromix {

std::size_t snapshot_cadence(const RecordSpec& rec, std::size_t steps,
                             std::size_t dofs) {
  if (rec.snapshot_every > 0) return rec.snapshot_every;
  const double bytes = 3.0 * 8.0 * double(dofs) + 64.0;
  const double fit = std::floor(rec.snapshot_budget_mb * 1048576.0 / bytes);
  if (fit < 3) throw InvalidParameter("snapshot budget holds fewer than 3 snapshots");
  const std::size_t cap = static_cast<std::size_t>(fit);
  return std::max<std::size_t>(1, (steps + cap - 2) / (cap - 1));
}

RunResult simulate(const ProblemSpec& problem, const StepHook& hook) {
  Simulator sim(problem);
  const RecordSpec& rec = problem.record;
  const std::size_t N = sim.steps_to_final();

  RunResult out;
  out.speed = sim.speed();
  out.moduli = {sim.form().xi_min, sim.form().xi_max};
  out.acoustic_speed = max_acoustic_speed(problem.material, problem.grid.dim);
  out.dt = sim.dt();
  out.steps = N;
  out.initial = sim.state();

  std::vector<double> times;
  for (std::size_t k = 0; k <= N; k += rec.energy_every)
    times.push_back(double(k) * sim.dt());
  times.push_back(problem.T);
  out.geometry =
      support_geometry(problem, problem.T, rec.support_threshold, times);

  std::unique_ptr<SurfacePowerRecorder> power;
  if (rec.power) {
    auto rg = rec.r_grid.empty() ? default_r_grid(out.geometry.L, rec.r_count)
                                 : rec.r_grid;
    power = std::make_unique<SurfacePowerRecorder>(
        sim.disc(), out.geometry, std::move(rg), problem.lambda);
  }
  std::unique_ptr<FrontRecorder> front;
  if (rec.front) front = std::make_unique<FrontRecorder>(out.geometry);
  std::unique_ptr<IdentityRecorder> ident;
  if (rec.identities || rec.write_snapshots) {
    out.snapshot_every = snapshot_cadence(rec, N, sim.disc().dofs());
    ident = std::make_unique<IdentityRecorder>(
        sim.disc(), problem.lambda, out.snapshot_every,
        N / out.snapshot_every + 1);
  }
  CesaroRecorder cesaro;

  auto observe = [&](std::size_t k) {
    const bool record = k % rec.energy_every == 0 || k == N;
    const EnergySample e = sim.energy();
    cesaro.observe(e, record, k > 0 ? &sim.half_step_kinetic() : nullptr);
    if (power) power->observe(sim, record);
    if (ident) ident->observe(sim);
    if (record) {
      out.energy.push_back(e);
      if (front) front->observe(sim.state());
    }
  };

  observe(0);
  for (std::size_t k = 1; k <= N; ++k) {
    sim.step();
    observe(k);
    if (hook) hook(sim);
  }

  out.cesaro = cesaro.series();
  if (power) out.power = power->series();
  if (front) out.front = front->fronts(rec.front_threshold);
  if (ident) {
    if (rec.identities && ident->snapshots().size() >= 3)
      out.residuals = ident->residuals();
    if (rec.write_snapshots) out.snapshots = ident->snapshots();
  }
  out.final_state = sim.state();
  return out;
}

}  // namespace poromix
