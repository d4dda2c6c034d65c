#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "poromix/diagnostics.hpp"
#include "poromix/problem.hpp"
#include "poromix/solver.hpp"

namespace poromix {

/// Everything a run records. Series are sampled every `energy_every` steps
/// plus the final step; the identity snapshots follow their own cadence.
struct RunResult {
  SpeedParams speed;
  ModuliBounds moduli;
  double acoustic_speed = 0.0;
  double dt = 0.0;
  std::size_t steps = 0;
  SupportGeometry geometry;
  std::vector<EnergySample> energy;
  std::vector<CesaroSample> cesaro;
  SurfacePowerSeries power;
  std::vector<FrontSample> front;
  std::vector<ResidualSample> residuals;
  std::vector<Snapshot> snapshots;
  std::size_t snapshot_every = 0;
  StateField initial, final_state;
};

/// Snapshot cadence: explicit when set, otherwise the smallest cadence
/// whose snapshots (q, v, load) fit in the memory budget.
std::size_t snapshot_cadence(const RecordSpec& rec, std::size_t steps,
                             std::size_t dofs);

/// Called after each step with the simulator; used for progress or custom
/// probes. Not called for step 0.
using StepHook = std::function<void(const Simulator&)>;

/// Integrates the problem to T and records the configured diagnostics.
/// Deterministic for fixed inputs; throws NonFinite with the step index.
RunResult simulate(const ProblemSpec& problem, const StepHook& hook = {});

}  // namespace poromix
