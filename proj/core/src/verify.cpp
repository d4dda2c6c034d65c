#include "poromix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "poromix/constitutive.hpp"
#include "poromix/errors.hpp"
#include "poromix/output.hpp"
#include "poromix/rigid.hpp"

namespace poromix {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Check make_check(std::string name, std::string property, double measured,
                 double target, double tolerance, bool pass,
                 std::string detail = {}) {
  return {std::move(name), std::move(property), measured, target,
          tolerance,       pass,                std::move(detail)};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool zero_data_setting(const ProblemSpec& p) {
  return p.sources.empty() && p.boundary.homogeneous(p.grid.dim);
}

ProblemSpec only_energy(ProblemSpec p) {
  p.record.power = false;
  p.record.front = false;
  p.record.identities = false;
  p.record.write_snapshots = false;
  return p;
}

double max_drift(const std::vector<EnergySample>& e) {
  const double E0 = e.front().total;
  double d = 0.0;
  for (const auto& s : e) d = std::max(d, std::abs(s.total - E0));
  return E0 > 0 ? d / E0 : d;
}

}  // namespace

// ---------------------------------------------------------------- plumbing

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  std::string out = "suite " + suite + " seed " + std::to_string(seed) + "\n";
  for (const auto& c : checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name + " [" + c.property + "] measured=" + fmt(c.measured) +
           " target=" + fmt(c.target) + " tol=" + fmt(c.tolerance);
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  out += std::string("overall ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string VerifyReport::csv() const {
  std::string out = "name,property,measured,target,tolerance,pass\n";
  for (const auto& c : checks)
    out += c.name + "," + c.property + "," + csv_number(c.measured) + "," +
           csv_number(c.target) + "," + csv_number(c.tolerance) + "," +
           (c.pass ? "1" : "0") + "\n";
  return out;
}

unsigned worker_threads(unsigned requested) {
  unsigned n = requested ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("POROMIX_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

void run_parallel(const std::vector<std::function<void()>>& tasks,
                  unsigned threads) {
  const unsigned n =
      std::min<unsigned>(worker_threads(threads),
                         static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    }
  };
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first) std::rethrow_exception(first);
}

ProblemSpec refined(const ProblemSpec& p, int levels) {
  ProblemSpec q = p;
  for (int l = 0; l < levels; ++l) {
    for (int d = 0; d < q.grid.dim; ++d) {
      q.grid.n[d] = 2 * (q.grid.n[d] - 1) + 1;
      q.grid.h[d] *= 0.5;
    }
    q.record.energy_every *= 2;
  }
  return q;
}

ProblemSpec null_data(const ProblemSpec& p) {
  ProblemSpec q = p;
  q.initial.clear();
  q.sources.clear();
  for (auto& side : q.boundary.sides)
    for (auto& bc : side)
      for (double& v : bc.values) v = 0.0;
  return q;
}

double observed_order(double coarse, double fine) {
  if (!(coarse > 0) || !(fine > 0)) return kNaN;
  return std::log2(coarse / fine);
}

std::string run_fingerprint(const RunConfig& cfg, const RunResult& r) {
  std::string out = energy_csv(r.energy) + cesaro_csv(r.cesaro) +
                    power_csv(r.power) + residuals_csv(r.residuals) +
                    front_csv(r.front);
  for (const auto& s : r.snapshots)
    out += encode_snapshot(s, cfg.problem.grid);
  return out;
}

// ------------------------------------------------------------ constitutive

ConstitutiveStats sample_constitutive(std::uint64_t seed, std::size_t samples) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ConstitutiveStats st;
  st.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    // Alternate near-isotropic and unstructured draws.
    const MaterialConstants m =
        k % 2 ? random_broad_material(rng) : random_material(rng);
    const QuadraticForm form = assemble_quadratic_form(m);
    const ReducedConstants rc = reduced_constants(m);
    const PointState ps = random_point_state(rng);
    const PointState rate = random_point_state(rng);

    const StrainVector E = strain_vector(ps);
    const StrainVector Ed = strain_vector(rate);
    const double W = internal_energy_density(form, E);
    const double E2 = strain_magnitude(E) * strain_magnitude(E);
    const double top = form.xi_max * E2;
    st.lower_violation =
        std::max(st.lower_violation, (form.xi_min * E2 - 2 * W) / top);
    st.upper_violation = std::max(st.upper_violation, (2 * W - top) / top);

    const auto [r_static, r_rate] =
        power_identity_residuals(m, form, ps, rate);
    const double scale = form.xi_max * strain_magnitude(E) *
                         std::max(strain_magnitude(E), strain_magnitude(Ed));
    st.static_residual = std::max(st.static_residual, r_static / scale);
    st.rate_residual = std::max(st.rate_residual, r_rate / scale);

    const GeneralizedStress S = generalized_stress(m, E);
    const GeneralizedStress R = stress_from_reduced(rc, m, ps);
    double diff = std::max(std::abs(S.g1 - R.g1), std::abs(S.g2 - R.g2));
    for (int i = 0; i < 9; ++i)
      diff = std::max({diff, std::abs(S.S1.v[i] - R.S1.v[i]),
                       std::abs(S.S2.v[i] - R.S2.v[i])});
    for (int i = 0; i < 3; ++i)
      diff = std::max({diff, std::abs(S.p[i] - R.p[i]),
                       std::abs(S.h1[i] - R.h1[i]),
                       std::abs(S.h2[i] - R.h2[i])});
    const double S2 = stress_magnitude2(S);
    st.dual_formula =
        std::max(st.dual_formula, diff / std::max(1.0, std::sqrt(S2)));
    st.stress_ratio = std::max(st.stress_ratio, S2 / (2 * form.xi_max * W));

    Vec3 n{unit(rng), unit(rng), unit(rng)};
    const double nn = norm(n);
    for (double& x : n) x /= nn;
    const TractionSample tr = traction(S, n);
    const double t2 =
        dot(tr.s1, tr.s1) + dot(tr.s2, tr.s2) + tr.h1 * tr.h1 + tr.h2 * tr.h2;
    st.traction_ratio = std::max(st.traction_ratio, t2 / S2);
    st.traction_energy_ratio =
        std::max(st.traction_energy_ratio, t2 / (2 * form.xi_max * W));
  }
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
  return st;
}

std::vector<Check> constitutive_suite(const RunConfig& cfg,
                                      const VerifyOptions& opt) {
  std::vector<Check> out;
  const MaterialConstants& m = cfg.problem.material;
  const SymmetryReport sym = validate_symmetries(m, kSymmetryTolerance);
  double worst_sym = 0.0;
  std::string broken;
  for (const auto& v : sym.violations) {
    worst_sym = std::max(worst_sym, v.max_deviation);
    broken += (broken.empty() ? "" : " ") + v.relation;
  }
  out.push_back(make_check("material_symmetries", "symmetry relations",
                           worst_sym, 0.0, kSymmetryTolerance, sym.ok(),
                           broken));
  const QuadraticForm form = assemble_quadratic_form(m);
  std::string detail = "xi_max=" + fmt(form.xi_max);
  bool densities = m.rho1 > 0 && m.rho2 > 0 && m.chi1 > 0 && m.chi2 > 0;
  if (form.admissible() && densities) {
    const SpeedParams sp = wave_speed(m, form.xi_max, cfg.problem.lambda);
    detail += " m=" + fmt(sp.m_inertia) + " c=" + fmt(sp.c) +
              " acoustic=" + fmt(max_acoustic_speed(m, cfg.problem.grid.dim));
  }
  out.push_back(make_check("material_admissible", "positive definite energy",
                           form.xi_min, kAdmissibilityMargin, 0.0,
                           form.admissible() && densities, detail));

  const ConstitutiveStats st = sample_constitutive(opt.seed, opt.samples);
  const std::string n = std::to_string(st.samples) + " samples";
  const double tol = 1e-10;
  out.push_back(make_check("energy_lower_bound", "xi_min |E|^2 <= 2W",
                           st.lower_violation, 0.0, tol,
                           st.lower_violation <= tol, n));
  out.push_back(make_check("energy_upper_bound", "2W <= xi_max |E|^2",
                           st.upper_violation, 0.0, tol,
                           st.upper_violation <= tol, n));
  out.push_back(make_check("power_identity_static", "2W equals stress power",
                           st.static_residual, 0.0, tol,
                           st.static_residual < tol, n));
  out.push_back(make_check("power_identity_rate", "dW/dt equals stress power",
                           st.rate_residual, 0.0, tol, st.rate_residual < tol,
                           n));
  out.push_back(make_check("dual_formula", "strain form equals reduced form",
                           st.dual_formula, 0.0, 1e-12,
                           st.dual_formula <= 1e-12, n));
  out.push_back(make_check("stress_bound", "|S|^2 <= 2 xi_max W",
                           st.stress_ratio, 1.0, 1e-9,
                           st.stress_ratio <= 1.0 + 1e-9,
                           "max ratio " + fmt(st.stress_ratio)));
  out.push_back(make_check("traction_bound", "traction^2 <= |S|^2",
                           st.traction_ratio, 1.0, 1e-9,
                           st.traction_ratio <= 1.0 + 1e-9,
                           "max ratio " + fmt(st.traction_ratio)));
  out.push_back(make_check("traction_energy_bound",
                           "traction^2 <= 2 xi_max W",
                           st.traction_energy_ratio, 1.0, 1e-9,
                           st.traction_energy_ratio <= 1.0 + 1e-9,
                           "max ratio " + fmt(st.traction_energy_ratio)));
  return out;
}

// -------------------------------------------------------------- identities

std::vector<Check> energy_conservation_checks(const ProblemSpec& p,
                                              unsigned threads) {
  if (!zero_data_setting(p))
    return {make_check("energy_conservation", "energy conservation", kNaN,
                       0.0, 1e-4, false,
                       "needs zero sources and homogeneous boundary data")};
  std::array<RunResult, 2> res;
  run_parallel({[&] { res[0] = simulate(only_energy(p)); },
                [&] { res[1] = simulate(only_energy(refined(p, 1))); }},
               threads);
  const double d0 = max_drift(res[0].energy);
  const double d1 = max_drift(res[1].energy);
  const std::string steps = std::to_string(res[0].steps) + " steps";
  return {
      make_check("energy_conservation", "energy conservation", d0, 0.0, 1e-4,
                 d0 <= 1e-4, steps),
      make_check("energy_drift_refinement", "drift reduction under (h, dt)/2",
                 d1 > 0 ? d0 / d1 : std::numeric_limits<double>::infinity(),
                 3.0, 0.0, d1 == 0 || d0 / d1 >= 3.0,
                 "drift " + fmt(d0) + " -> " + fmt(d1))};
}

std::vector<Check> identity_order_checks(const ProblemSpec& p,
                                         unsigned threads) {
  ProblemSpec base = p;
  base.record.power = false;
  base.record.front = false;
  base.record.identities = true;
  base.record.write_snapshots = false;
  std::array<RunResult, 3> res;
  std::vector<std::function<void()>> tasks;
  for (int l = 0; l < 3; ++l)
    tasks.push_back([&, l] { res[l] = simulate(refined(base, l)); });
  run_parallel(tasks, threads);

  double scale = 0.0;
  for (const auto& e : res[0].energy) scale = std::max(scale, e.total);
  const double floor = 1e-12 * std::max(scale, 1e-300);

  std::vector<Check> out;
  const char* names[3] = {"energy_identity_order", "virial_identity_order",
                          "reciprocal_identity_order"};
  const char* props[3] = {"weighted energy balance", "virial balance",
                          "reciprocal identity"};
  for (int k = 0; k < 3; ++k) {
    std::array<double, 3> r{};
    for (int l = 0; l < 3; ++l)
      for (const auto& s : res[l].residuals) {
        const double v = k == 0 ? s.res_energy
                         : k == 1 ? s.res_virial
                                  : s.res_reciprocal;
        if (std::isfinite(v)) r[l] = std::max(r[l], v);
      }
    const double o1 = observed_order(r[0], r[1]);
    const double o2 = observed_order(r[1], r[2]);
    const bool exact = r[0] <= floor && r[1] <= floor && r[2] <= floor;
    const double order = std::min(o1, o2);
    std::string detail = "residuals " + fmt(r[0]) + ", " + fmt(r[1]) + ", " +
                         fmt(r[2]);
    if (exact) detail += "; at roundoff on every level";
    out.push_back(make_check(names[k], props[k], exact ? kNaN : order, 1.5,
                             0.0, exact || order >= 1.5, detail));
  }
  return out;
}

std::vector<Check> identities_suite(const RunConfig& cfg,
                                    const VerifyOptions& opt) {
  auto out = identity_order_checks(cfg.problem, opt.threads);
  if (zero_data_setting(cfg.problem)) {
    auto e = energy_conservation_checks(cfg.problem, opt.threads);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

// ------------------------------------------------------------------- decay

std::vector<double> lambda_sweep(const ProblemSpec& p) {
  const QuadraticForm form = assemble_quadratic_form(p.material);
  const SpeedParams sp = wave_speed(p.material, form.xi_max, p.lambda);
  const auto ext = p.grid.extent();
  const double Ld = p.grid.dim == 2 ? std::max(ext[0], ext[1]) : ext[0];
  return {0.5 * sp.c / Ld, sp.c / Ld, 2.0 * sp.c / Ld};
}

std::vector<DecaySweepRow> decay_sweep(const ProblemSpec& p,
                                       const std::vector<double>& lambdas,
                                       double tol, unsigned threads) {
  std::vector<RunResult> res(lambdas.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t k = 0; k < lambdas.size(); ++k)
    tasks.push_back([&, k] {
      ProblemSpec q = p;
      q.lambda = lambdas[k];
      q.record.power = true;
      q.record.front = false;
      q.record.identities = false;
      q.record.write_snapshots = false;
      res[k] = simulate(q);
    });
  run_parallel(tasks, threads);

  std::vector<DecaySweepRow> rows;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const auto& ps = res[k].power;
    SpeedParams sp = res[k].speed;
    sp.lambda = lambdas[k];
    for (std::size_t i = 0; i < ps.t_grid.size(); ++i) {
      if (!(ps.t_grid[i] > 0)) continue;
      DecaySweepRow row;
      row.lambda = lambdas[k];
      row.t = ps.t_grid[i];
      row.bound = decay_bound(ps.r_grid, ps.P[i], sp, row.t, tol);
      try {
        row.slope = decay_report(ps.r_grid, ps.P[i], sp, row.t, tol).slope;
      } catch (const Degenerate&) {
        row.slope = kNaN;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<Check> decay_suite(const RunConfig& cfg, const VerifyOptions& opt) {
  const ProblemSpec& p = cfg.problem;
  std::vector<Check> out;

  // Envelope for the lambda sweep.
  const auto rows = decay_sweep(p, lambda_sweep(p), opt.tol_h, opt.threads);
  double worst = 0.0;
  bool ok = !rows.empty();
  std::size_t checked = 0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.bound.max_ratio);
    ok = ok && r.bound.ok;
    checked += r.bound.radii_checked;
  }
  out.push_back(make_check(
      "decay_envelope", "P(r,t) <= P(0,t) exp(-lambda r / c)", worst, 1.0,
      opt.tol_h, ok,
      std::to_string(rows.size()) + " (lambda, t) pairs, " +
          std::to_string(checked) + " radii"));

  // Structure of P at the configured lambda, at two resolutions.
  std::array<RunResult, 2> res;
  auto power_only = [](ProblemSpec q) {
    q.record.power = true;
    q.record.front = false;
    q.record.identities = false;
    q.record.write_snapshots = false;
    return q;
  };
  run_parallel({[&] { res[0] = simulate(power_only(p)); },
                [&] { res[1] = simulate(power_only(refined(p, 1))); }},
               opt.threads);

  auto agreement = [](const SurfacePowerSeries& s) {
    double peak = 0.0, err = 0.0;
    for (std::size_t i = 0; i < s.t_grid.size(); ++i)
      for (std::size_t j = 0; j < s.r_grid.size(); ++j) {
        peak = std::max(peak, std::abs(s.P[i][j]));
        err = std::max(err, std::abs(s.P[i][j] - s.E_vol[i][j]));
      }
    return peak > 0 ? err / peak : err;
  };

  const SurfacePowerSeries& s = res[0].power;
  const double PT = s.P.back().front();
  double min_p = 0.0, rise = 0.0;
  double diff_worst = -std::numeric_limits<double>::infinity();
  const double c = res[0].speed.c;
  for (std::size_t i = 0; i < s.t_grid.size(); ++i) {
    const auto& P = s.P[i];
    for (std::size_t j = 0; j < P.size(); ++j) {
      min_p = std::min(min_p, P[j]);
      if (j + 1 < P.size()) rise = std::max(rise, P[j + 1] - P[j]);
    }
    // (lambda / c) P + dP/dr <= 0 at interior radii inside r <= c t.
    if (!(P[0] > 0)) continue;
    for (std::size_t j = 1; j + 1 < P.size(); ++j) {
      if (s.r_grid[j + 1] > c * s.t_grid[i]) break;
      const double dP =
          (P[j + 1] - P[j - 1]) / (s.r_grid[j + 1] - s.r_grid[j - 1]);
      const double v = (p.lambda / c * P[j] + dP) / (p.lambda / c * P[0]);
      diff_worst = std::max(diff_worst, v);
    }
  }
  const double norm_T = PT > 0 ? PT : 1.0;
  out.push_back(make_check("power_nonnegative", "P(r,t) >= 0", min_p / norm_T,
                           0.0, 1e-9, min_p >= -1e-9 * norm_T));
  out.push_back(make_check("power_monotone", "P non-increasing in r",
                           rise / norm_T, 0.0, opt.tol_h,
                           rise <= opt.tol_h * norm_T));
  if (std::isfinite(diff_worst))
    out.push_back(make_check("power_differential",
                             "(lambda/c) P + dP/dr <= 0", diff_worst, 0.0,
                             opt.tol_h, diff_worst <= opt.tol_h));
  const double e0 = agreement(res[0].power), e1 = agreement(res[1].power);
  out.push_back(make_check("power_equals_energy", "P(r,t) = E(r,t)", e0, 0.0,
                           0.03, e0 <= 0.03));
  out.push_back(make_check("power_energy_refinement",
                           "P = E improves under refinement", e1, e0, 0.0,
                           e1 < e0 || e1 <= 1e-13,
                           fmt(e0) + " -> " + fmt(e1)));
  return out;
}

// --------------------------------------------------------------- influence

std::vector<Check> influence_suite(const RunConfig& cfg,
                                   const VerifyOptions& opt) {
  auto front_only = [](ProblemSpec q) {
    q.record.power = false;
    q.record.front = true;
    q.record.identities = false;
    q.record.write_snapshots = false;
    return q;
  };
  std::array<RunResult, 2> res;
  run_parallel({[&] { res[0] = simulate(front_only(cfg.problem)); },
                [&] { res[1] = simulate(front_only(refined(cfg.problem, 1))); }},
               opt.threads);
  std::vector<Check> out;
  const double c = res[0].speed.c;
  const double tols[2] = {opt.tol_h, 0.02};
  const char* names[2] = {"front_speed", "front_speed_refined"};
  for (int l = 0; l < 2; ++l) {
    const std::string detail =
        "c=" + fmt(c) + " acoustic=" + fmt(res[l].acoustic_speed);
    try {
      const double v = front_speed(res[l].front, res[l].geometry.L);
      out.push_back(make_check(names[l], "front speed <= c", v, c, tols[l],
                               v <= c * (1 + tols[l]), detail));
    } catch (const NoFront& e) {
      out.push_back(make_check(names[l], "front speed <= c", kNaN, c, tols[l],
                               false, e.what()));
    }
  }
  // Nothing above threshold beyond c t plus the allowance.
  double excess = 0.0;
  for (const auto& f : res[1].front)
    excess = std::max(excess, f.r_front - c * f.t);
  const double allow = opt.tol_h * res[1].geometry.L;
  out.push_back(make_check("front_envelope", "state vanishes beyond c t",
                           excess, 0.0, allow, excess <= allow));
  return out;
}

// ----------------------------------------------------------- equipartition

double rigid_residual_moments(const Grid& grid, std::uint64_t seed,
                              std::size_t fields) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t f = 0; f < fields; ++f) {
    const MaterialConstants m = random_material(rng);
    StateField s;
    s.q.resize(grid.nodes() * kDofsPerNode);
    s.v.resize(s.q.size());
    for (double& x : s.q) x = unit(rng);
    for (double& x : s.v) x = unit(rng);
    const RigidDecomposition d = rigid_decompose(s, m, grid);
    for (int c = 1; c <= 2; ++c) {
      const double rho = c == 1 ? m.rho1 : m.rho2;
      for (bool vel : {false, true}) {
        // Scale: the moments of |field| with the same weights.
        const auto& field = vel ? s.v : s.q;
        double scale = 0.0;
        for (std::size_t n = 0; n < grid.nodes(); ++n) {
          const Vec3 x = grid.position(n);
          Vec3 u;
          for (int i = 0; i < 3; ++i)
            u[i] = field[kDofsPerNode * n + 3 * (c - 1) + i];
          scale += grid.node_weight(n) * rho * norm(u) * (1.0 + norm(x));
        }
        const Moments mo = constituent_moments(d.residual, grid, m, c, vel);
        worst = std::max({worst, norm(mo.linear) / scale,
                          norm(mo.angular) / scale});
      }
    }
  }
  return worst;
}

std::vector<Check> equipartition_suite(const RunConfig& cfg,
                                       const VerifyOptions& opt) {
  const ProblemSpec& p = cfg.problem;
  std::vector<Check> out;
  const double moments = rigid_residual_moments(p.grid, opt.seed,
                                                opt.rigid_fields);
  out.push_back(make_check("rigid_decomposition_moments",
                           "residual momenta vanish", moments, 0.0, 1e-10,
                           moments <= 1e-10,
                           std::to_string(opt.rigid_fields) + " fields"));
  if (!zero_data_setting(p)) {
    out.push_back(make_check("equipartition", "Cesaro equipartition", kNaN,
                             0.0, 5e-2, false,
                             "needs zero sources and homogeneous boundary data"));
    return out;
  }
  const RunResult r = simulate(only_energy(p));
  const bool pinned = p.boundary.displacement_pinned(p.grid.dim);
  std::optional<RigidDecomposition> rigid;
  if (!pinned) rigid = rigid_decompose(r.initial, p.material, p.grid);
  const double E0 = r.energy.front().total;
  const EquipartitionReport rep =
      equipartition_report(r.cesaro, E0, pinned, rigid ? &*rigid : nullptr);
  const std::string c = "case " + std::to_string(rep.case_id) +
                        " offset=" + fmt(rep.predicted_offset) +
                        " gap=" + fmt(rep.final_gap);
  out.push_back(make_check("equipartition", "Cesaro equipartition",
                           rep.relative_error, 0.0, 5e-2,
                           rep.relative_error <= 5e-2, c));
  if (rep.case_id == 1)
    out.push_back(make_check(
        "gap_decay_exponent", "gap decays like 1/t", rep.decay_exponent,
        -0.8, 0.0, rep.decay_exponent <= -0.8,
        std::to_string(rep.windows_used) + " windows"));
  const auto& last = r.cesaro.back();
  const double sum_err = E0 > 0 ? std::abs(last.Kc + last.Sc - E0) / E0 : 0.0;
  out.push_back(make_check("cesaro_sum", "Kc + Sc = E(0)", sum_err, 0.0, 1e-3,
                           sum_err <= 1e-3));
  return out;
}

// -------------------------------------------------------------- uniqueness

std::vector<Check> uniqueness_suite(const RunConfig& cfg,
                                    const VerifyOptions& opt) {
  std::vector<Check> out;
  ProblemSpec z = only_energy(null_data(cfg.problem));
  {
    const QuadraticForm form = assemble_quadratic_form(z.material);
    const SpeedParams sp = wave_speed(z.material, form.xi_max, z.lambda);
    const double dt = stable_timestep(z.grid, sp, z.cfl);
    if (z.T / dt < 1000) z.T = 1000 * dt;
  }
  double peak = 0.0;
  std::size_t steps = 0;
  auto hook = [&](const Simulator& sim) {
    for (double x : sim.state().q) peak = std::max(peak, std::abs(x));
    for (double x : sim.state().v) peak = std::max(peak, std::abs(x));
    steps = sim.step_index();
  };
  simulate(z, hook);
  out.push_back(make_check("null_data_zero", "null data stay null", peak, 0.0,
                           0.0, peak == 0.0,
                           std::to_string(steps) + " steps"));

  std::array<std::string, 2> prints;
  run_parallel({[&] { prints[0] = run_fingerprint(cfg, simulate(cfg.problem)); },
                [&] { prints[1] = run_fingerprint(cfg, simulate(cfg.problem)); }},
               opt.threads);
  const bool same = prints[0] == prints[1];
  out.push_back(make_check("deterministic_outputs", "identical runs",
                           same ? 0.0 : 1.0, 0.0, 0.0, same,
                           std::to_string(prints[0].size()) + " bytes"));
  return out;
}

// -------------------------------------------------------------------- all

VerifyReport verify(const RunConfig& cfg, const std::string& suite,
                    const VerifyOptions& opt) {
  VerifyReport rep;
  rep.suite = suite;
  rep.seed = opt.seed;
  using Fn = std::vector<Check> (*)(const RunConfig&, const VerifyOptions&);
  const std::pair<const char*, Fn> table[] = {
      {"constitutive", constitutive_suite},
      {"identities", identities_suite},
      {"decay", decay_suite},
      {"influence", influence_suite},
      {"equipartition", equipartition_suite},
      {"uniqueness", uniqueness_suite}};
  bool found = false;
  for (const auto& [name, fn] : table)
    if (suite == "all" || suite == name) {
      found = true;
      auto checks = fn(cfg, opt);
      rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
    }
  if (!found) throw SchemaError("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace poromix
