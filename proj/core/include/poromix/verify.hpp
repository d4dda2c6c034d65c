#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poromix/config.hpp"
#include "poromix/run.hpp"

namespace poromix {

/// One verified property. `property` names the result being checked;
/// `target` is the bound or expected value, `tolerance` the allowance.
struct Check {
  std::string name;
  std::string property;
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool pass() const;
  /// Human-readable table, one line per check plus an overall line.
  std::string text() const;
  std::string csv() const;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random materials/states for the constitutive suite.
  std::size_t samples = 10000;
  /// Random initial fields for the rigid decomposition check.
  std::size_t rigid_fields = 100;
  /// Discretization allowance for the decay and influence bounds.
  double tol_h = 0.05;
  /// Worker threads; 0 means hardware concurrency. Always capped by
  /// POROMIX_THREADS when set.
  unsigned threads = 0;
};

/// Number of workers to use for `requested` (0 = hardware concurrency).
unsigned worker_threads(unsigned requested);

/// Runs independent tasks on up to `threads` workers. The first exception
/// thrown by a task is rethrown after all workers finish.
void run_parallel(const std::vector<std::function<void()>>& tasks,
                  unsigned threads);

/// Halves h `levels` times (n -> 2(n - 1) + 1 per level). The energy
/// cadence in steps is doubled so recorded times coincide; the snapshot
/// cadence is kept, so the quadrature of the reciprocal identity's time
/// convolution refines along with dt.
ProblemSpec refined(const ProblemSpec& p, int levels);

/// Same problem with every datum removed: no initial fields or sources and
/// zero boundary values.
ProblemSpec null_data(const ProblemSpec& p);

/// Observed order log2(coarse / fine) for consecutive levels.
double observed_order(double coarse, double fine);

// ------------------------------------------------------------------ suites

/// Maxima over random admissible materials and states.
struct ConstitutiveStats {
  std::size_t samples = 0;
  /// max (xi_min |E|^2 - 2W) / (xi_max |E|^2), and the upper analogue.
  double lower_violation = 0.0, upper_violation = 0.0;
  /// Power identity residuals relative to xi_max |E| |E_dot|.
  double static_residual = 0.0, rate_residual = 0.0;
  /// Strain form vs reduced-constant form, relative to max(1, |S|).
  double dual_formula = 0.0;
  /// max |S|^2 / (2 xi_max W).
  double stress_ratio = 0.0;
  /// max traction magnitude over |S|^2 and over 2 xi_max W.
  double traction_ratio = 0.0, traction_energy_ratio = 0.0;
  double seconds = 0.0;
};

ConstitutiveStats sample_constitutive(std::uint64_t seed, std::size_t samples);

/// Largest residual momentum / angular momentum of the rigid decomposition
/// over random initial fields on `grid`, relative to the field scale.
double rigid_residual_moments(const Grid& grid, std::uint64_t seed,
                              std::size_t fields);

struct DecaySweepRow {
  double lambda = 0.0;
  double t = 0.0;
  DecayBound bound;
  /// NaN when fewer than 3 radii were usable for the fit.
  double slope = 0.0;
};

/// Runs the problem for each lambda and checks the decay envelope at every
/// recorded t > 0.
std::vector<DecaySweepRow> decay_sweep(const ProblemSpec& p,
                                       const std::vector<double>& lambdas,
                                       double tol, unsigned threads);

/// Lambdas {0.5, 1, 2} c / (largest grid extent).
std::vector<double> lambda_sweep(const ProblemSpec& p);

/// Runs one suite ("constitutive", "identities", "decay", "influence",
/// "equipartition", "uniqueness" or "all") on the configured problem.
VerifyReport verify(const RunConfig& cfg, const std::string& suite,
                    const VerifyOptions& opt);

/// Energy drift of the zero-data problem at two resolutions: relative drift
/// at the base resolution and its reduction under refinement.
std::vector<Check> energy_conservation_checks(const ProblemSpec& p,
                                              unsigned threads);
/// Observed convergence orders of the three identity residuals over three
/// resolutions.
std::vector<Check> identity_order_checks(const ProblemSpec& p,
                                         unsigned threads);

std::vector<Check> constitutive_suite(const RunConfig& cfg,
                                      const VerifyOptions& opt);
std::vector<Check> identities_suite(const RunConfig& cfg,
                                    const VerifyOptions& opt);
std::vector<Check> decay_suite(const RunConfig& cfg, const VerifyOptions& opt);
std::vector<Check> influence_suite(const RunConfig& cfg,
                                   const VerifyOptions& opt);
std::vector<Check> equipartition_suite(const RunConfig& cfg,
                                       const VerifyOptions& opt);
std::vector<Check> uniqueness_suite(const RunConfig& cfg,
                                    const VerifyOptions& opt);

/// Serialized artifacts of a run, used for byte-identity checks.
std::string run_fingerprint(const RunConfig& cfg, const RunResult& r);

}  // namespace poromix
