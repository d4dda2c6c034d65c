#pragma once

#include <cstddef>
#include <vector>

#include "poromix/discretization.hpp"
#include "poromix/material.hpp"
#include "poromix/problem.hpp"
#include "poromix/rigid.hpp"
#include "poromix/solver.hpp"

namespace poromix {

// ---------------------------------------------------------------- energy

/// Energy of a state: lumped nodal kinetic energy plus the Gauss-quadrature
/// strain energy of the interpolated fields.
EnergySample total_energy(const StateField& s, const Discretization& disc);

// ------------------------------------------------------- support geometry

struct SupportGeometry {
  std::vector<char> support_mask;
  std::vector<double> dist;
  double L = 0.0;
  /// True when the data vanish and a boundary node was designated instead.
  bool fallback = false;
};

/// Nodes where any datum (initial fields, sources at the sampled times,
/// prescribed boundary data) exceeds `threshold` times the peak datum.
/// Distances are brute-force minima over support nodes.
SupportGeometry support_geometry(const ProblemSpec& problem, double T,
                                 double threshold,
                                 const std::vector<double>& times);

/// Distance field for an explicit support mask; an empty mask falls back
/// to the lexicographically first boundary node.
SupportGeometry support_from_mask(const Grid& grid,
                                  std::vector<char> support_mask);

// ---------------------------------------------------------- surface power

struct SurfacePowerSeries {
  std::vector<double> r_grid;
  std::vector<double> t_grid;
  /// P[t][r] and E_vol[t][r].
  std::vector<std::vector<double>> P, E_vol;
  double lambda = 0.0;
};

/// r_count equally spaced radii on [0, L].
std::vector<double> default_r_grid(double L, std::size_t r_count);

/// Accumulates the time-weighted power flowing into B_r = {dist > r} and
/// the weighted energy of B_r. B_r is the union of whole cells plus the
/// nodal masses with dist > r; the surface S_r is the set of cells that
/// straddle the level dist = r, so the semi-discrete divergence theorem is
/// exact and P = E up to time quadrature.
class SurfacePowerRecorder {
 public:
  SurfacePowerRecorder(const Discretization& disc, const SupportGeometry& geo,
                       std::vector<double> r_grid, double lambda);

  /// Must be called at every step, starting at step 0.
  void observe(const Simulator& sim, bool record);
  const SurfacePowerSeries& series() const { return series_; }

  /// Instantaneous power into and energy of B_r for a state; exposed for
  /// tests.
  void instantaneous(const StateField& s, std::vector<double>& flux,
                     std::vector<double>& energy) const;

 private:
  const Discretization& disc_;
  std::vector<double> dist_;
  SurfacePowerSeries series_;
  struct CellLevels {
    std::array<int, 4> order{};
    std::array<std::size_t, 4> lb{};
  };
  std::vector<CellLevels> cells_;
  std::vector<std::size_t> node_lb_;
  bool started_ = false;
  double t_prev_ = 0.0;
  std::vector<double> flux_prev_, energy_prev_, p_acc_, e_int_;
  mutable std::vector<double> flux_, energy_;
};

struct DecayReport {
  double slope = 0.0;
  bool bound_ok = false;
  /// Largest P(r) / (P(0) exp(-lambda r / c)) over the checked radii.
  double max_ratio = 0.0;
  std::size_t radii_used = 0;
};

struct DecayBound {
  /// Largest P(r) / (P(0) exp(-lambda r / c)) over 0 <= r <= c t.
  double max_ratio = 0.0;
  bool ok = true;
  std::size_t radii_checked = 0;
};

/// Checks P(r) <= P(0) exp(-lambda r / c) (1 + tol) on 0 <= r <= c t. With
/// P(0) <= 0 only the sign of P is checked (ratio reported as 0).
DecayBound decay_bound(const std::vector<double>& r_grid,
                       const std::vector<double>& P, const SpeedParams& speed,
                       double t, double tol);

/// Fits ln P(r) against r over 0 <= r <= c t where P > 1e-12 P(0) and checks
/// P(r) <= P(0) exp(-lambda r / c) (1 + tol). Degenerate below 3 radii.
DecayReport decay_report(const std::vector<double>& r_grid,
                         const std::vector<double>& P, const SpeedParams& speed,
                         double t, double tol);

// ------------------------------------------------------------------ front

struct FrontSample {
  double t = 0.0;
  double r_front = 0.0;
};

/// Records nodal state magnitudes |(u1, u2, phi1, phi2)| at sample times.
class FrontRecorder {
 public:
  FrontRecorder(const SupportGeometry& geo) : dist_(geo.dist), L_(geo.L) {}
  void observe(const StateField& s);
  /// r_front(t) = max dist over nodes whose magnitude exceeds
  /// `threshold` times the peak magnitude over the whole record.
  std::vector<FrontSample> fronts(double threshold) const;
  double L() const { return L_; }

 private:
  std::vector<double> dist_;
  double L_;
  std::vector<double> times_;
  std::vector<std::vector<float>> mags_;
};

/// Least-squares slope of r_front against t over samples with
/// 0 < r_front < 0.95 L. Throws NoFront with fewer than two such samples.
double front_speed(const std::vector<FrontSample>& fronts, double L);

// ----------------------------------------------------------------- Cesaro

struct CesaroSample {
  double t = 0.0;
  double Kc_u = 0.0, Kc_phi = 0.0, Kc = 0.0, Sc = 0.0, gap = 0.0;
};

/// Running means (1/t) int_0^t of the kinetic and strain energies by the
/// trapezoid rule over the given samples; samples at t = 0 are skipped.
/// (Runs use CesaroRecorder with the staggered kinetic energy instead.)
std::vector<CesaroSample> cesaro_means(const std::vector<EnergySample>& e);
/// Mean at one time; throws UndefinedAtZero for t <= 0.
CesaroSample cesaro_at(const std::vector<EnergySample>& e, double t);

/// Incremental version fed at every step. Given the kinetic energy at the
/// midpoint of the step just taken, the kinetic integral uses the midpoint
/// rule; otherwise both integrals use the trapezoid rule.
class CesaroRecorder {
 public:
  void observe(const EnergySample& e, bool record,
               const std::array<double, 2>* half_step_kinetic = nullptr);
  const std::vector<CesaroSample>& series() const { return series_; }

 private:
  bool started_ = false;
  EnergySample prev_;
  double iku_ = 0, ikp_ = 0, is_ = 0;
  std::vector<CesaroSample> series_;
};

struct EquipartitionReport {
  int case_id = 1;  // 1: displacements pinned somewhere; 2: fully natural
  double predicted_offset = 0.0;
  double E0 = 0.0;
  double final_gap = 0.0;
  /// |gap(T) - predicted_offset| / E(0).
  double relative_error = 0.0;
  /// Case 1: log-log slope against t of the largest |gap| in each of 12
  /// geometric windows over [T/10, T].
  double decay_exponent = 0.0;
  std::size_t windows_used = 0;
};

EquipartitionReport equipartition_report(const std::vector<CesaroSample>& c,
                                         double E0, bool displacement_pinned,
                                         const RigidDecomposition* rigid);

// ------------------------------------------------------ identity residuals

struct ResidualSample {
  double t = 0.0;
  double res_energy = 0.0;
  double res_virial = 0.0;
  /// NaN when the state at 2t was not recorded.
  double res_reciprocal = 0.0;
};

struct Snapshot {
  double t = 0.0;
  std::vector<double> q, v;
  /// Total external load: sources plus boundary load.
  std::vector<double> load;
};

/// Integral identities over the whole body: the weighted energy balance,
/// the virial balance, and the reciprocal identity between times t - s and
/// t + s. The first two are accumulated at every step; the third is
/// evaluated afterwards from snapshots taken at a fixed cadence.
class IdentityRecorder {
 public:
  IdentityRecorder(const Discretization& disc, double lambda,
                   std::size_t snapshot_every, std::size_t max_snapshots);
  void observe(const Simulator& sim);
  const std::vector<Snapshot>& snapshots() const { return snaps_; }
  /// Residuals at every snapshot time.
  std::vector<ResidualSample> residuals() const;

 private:
  const Discretization& disc_;
  double lambda_;
  std::size_t every_, max_snaps_;
  bool started_ = false;
  double t_prev_ = 0.0;
  double E0_ = 0.0, V0_ = 0.0;
  // trapezoid accumulators and the previous integrands
  double i_wE_ = 0, i_wsrc_ = 0, i_wbnd_ = 0;
  double i_kin2_ = 0, i_str2_ = 0, i_qbnd_ = 0, i_qsrc_ = 0;
  std::array<double, 7> prev_{};
  std::vector<double> res_energy_, res_virial_;
  std::vector<Snapshot> snaps_;
};

/// Reciprocal-identity residual at snapshot index m (time t_m), using
/// snapshots 0..2m at uniform spacing.
double reciprocal_residual(const std::vector<Snapshot>& snaps,
                           const std::vector<double>& mass, std::size_t m);

}  // namespace poromix
