#include "poromix/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "poromix/errors.hpp"

namespace poromix {

EnergySample total_energy(const StateField& s, const Discretization& disc) {
  EnergySample e;
  e.t = s.t;
  const auto& m = disc.mass();
  for (std::size_t d = 0; d < s.v.size(); ++d) {
    const double k = 0.5 * m[d] * s.v[d] * s.v[d];
    (d % kDofsPerNode < 6 ? e.kinetic_u : e.kinetic_phi) += k;
  }
  e.strain = disc.strain_energy(s.q);
  e.total = e.kinetic_u + e.kinetic_phi + e.strain;
  return e;
}

// ------------------------------------------------------- support geometry

SupportGeometry support_from_mask(const Grid& g, std::vector<char> mask) {
  SupportGeometry geo;
  const std::size_t N = g.nodes();
  mask.resize(N, 0);
  std::vector<std::size_t> sup;
  for (std::size_t n = 0; n < N; ++n)
    if (mask[n]) sup.push_back(n);
  if (sup.empty()) {
    geo.fallback = true;
    for (std::size_t n = 0; n < N; ++n)
      if (g.on_boundary(n)) {
        mask[n] = 1;
        sup.push_back(n);
        break;
      }
  }
  std::vector<Vec3> xs;
  xs.reserve(sup.size());
  for (std::size_t n : sup) xs.push_back(g.position(n));
  geo.dist.assign(N, 0.0);
  for (std::size_t n = 0; n < N; ++n) {
    if (mask[n]) continue;
    const Vec3 x = g.position(n);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : xs) {
      const double dx = x[0] - y[0], dy = x[1] - y[1];
      best = std::min(best, dx * dx + dy * dy);
    }
    geo.dist[n] = std::sqrt(best);
  }
  geo.L = *std::max_element(geo.dist.begin(), geo.dist.end());
  geo.support_mask = std::move(mask);
  return geo;
}

SupportGeometry support_geometry(const ProblemSpec& problem, double T,
                                 double threshold,
                                 const std::vector<double>& times) {
  if (T > problem.T * (1 + 1e-12))
    throw InvalidParameter("support horizon exceeds the final time");
  const Grid& g = problem.grid;
  const std::size_t N = g.nodes();
  std::vector<double> peak_at(N, 0.0);

  const StateField init = initialize(problem);
  for (std::size_t n = 0; n < N; ++n)
    for (int k = 0; k < kDofsPerNode; ++k) {
      const std::size_t d = kDofsPerNode * n + k;
      peak_at[n] = std::max({peak_at[n], std::abs(init.q[d]),
                             std::abs(init.v[d])});
    }

  std::vector<double> ts;
  for (double t : times)
    if (t <= T) ts.push_back(t);
  if (ts.empty()) ts.push_back(0.0);
  for (std::size_t n = 0; n < N; ++n) {
    const Vec3 x = g.position(n);
    for (const auto& s : problem.sources) {
      const double sh = std::abs(s.shape(x));
      if (sh == 0.0) continue;
      for (double t : ts)
        peak_at[n] = std::max(peak_at[n], sh * std::abs(s.time.value(t)));
    }
  }
  using BK = BoundaryCondition::Kind;
  for (int s = 0; s < side_count(g.dim); ++s)
    for (const auto& bc : problem.boundary.sides[s]) {
      if (bc.kind != BK::PrescribedDisplacement &&
          bc.kind != BK::PrescribedTraction)
        continue;
      double vmax = 0.0;
      for (double v : bc.values) vmax = std::max(vmax, std::abs(v));
      double tmax = 0.0;
      for (double t : ts)
        tmax = std::max({tmax, std::abs(bc.time.value(t)),
                         std::abs(bc.time.rate(t))});
      for (std::size_t n : side_nodes(g, static_cast<Side>(s)))
        peak_at[n] =
            std::max(peak_at[n], vmax * tmax * bc.patch(g.position(n)));
    }

  const double peak = *std::max_element(peak_at.begin(), peak_at.end());
  std::vector<char> mask(N, 0);
  if (peak > 0)
    for (std::size_t n = 0; n < N; ++n)
      mask[n] = peak_at[n] > threshold * peak ? 1 : 0;
  return support_from_mask(g, std::move(mask));
}

// ---------------------------------------------------------- surface power

std::vector<double> default_r_grid(double L, std::size_t r_count) {
  if (r_count < 2) throw InvalidParameter("r_count must be at least 2");
  std::vector<double> r(r_count);
  for (std::size_t i = 0; i < r_count; ++i)
    r[i] = L * double(i) / double(r_count - 1);
  return r;
}

SurfacePowerRecorder::SurfacePowerRecorder(const Discretization& disc,
                                           const SupportGeometry& geo,
                                           std::vector<double> r_grid,
                                           double lambda)
    : disc_(disc), dist_(geo.dist) {
  if (!std::is_sorted(r_grid.begin(), r_grid.end()))
    throw InvalidParameter("r_grid must be increasing");
  series_.r_grid = std::move(r_grid);
  series_.lambda = lambda;
  const auto& rg = series_.r_grid;
  auto lb = [&](double d) {
    return static_cast<std::size_t>(
        std::lower_bound(rg.begin(), rg.end(), d) - rg.begin());
  };
  const Grid& g = disc_.grid();
  const int npc = g.nodes_per_cell();
  cells_.resize(g.cells());
  for (std::size_t c = 0; c < g.cells(); ++c) {
    auto& cl = cells_[c];
    std::iota(cl.order.begin(), cl.order.begin() + npc, 0);
    std::sort(cl.order.begin(), cl.order.begin() + npc, [&](int a, int b) {
      return dist_[g.cell_node(c, a)] < dist_[g.cell_node(c, b)];
    });
    for (int k = 0; k < npc; ++k)
      cl.lb[k] = lb(dist_[g.cell_node(c, cl.order[k])]);
  }
  node_lb_.resize(g.nodes());
  for (std::size_t n = 0; n < g.nodes(); ++n) node_lb_[n] = lb(dist_[n]);
  const std::size_t nr = rg.size();
  flux_.assign(nr + 1, 0.0);
  energy_.assign(nr + 1, 0.0);
  p_acc_.assign(nr, 0.0);
  e_int_.assign(nr, 0.0);
}

void SurfacePowerRecorder::instantaneous(const StateField& s,
                                         std::vector<double>& flux,
                                         std::vector<double>& energy) const {
  const Grid& g = disc_.grid();
  const std::size_t nr = series_.r_grid.size();
  const int npc = g.nodes_per_cell();
  const int K = Discretization::kDofs;
  std::fill(flux_.begin(), flux_.end(), 0.0);
  std::fill(energy_.begin(), energy_.end(), 0.0);
  const auto& Ke = disc_.cell_stiffness();
  Eigen::VectorXd qc(disc_.cell_dofs()), fc(disc_.cell_dofs());
  for (std::size_t c = 0; c < g.cells(); ++c) {
    const auto& cl = cells_[c];
    // Cells entirely in B_r exist only for r below the smallest node dist.
    const bool any_flux = cl.lb[0] != cl.lb[npc - 1];
    if (cl.lb[0] == 0 && !any_flux) continue;
    disc_.gather(c, s.q, qc.data());
    fc.noalias() = Ke * qc;
    if (cl.lb[0] > 0) {
      const double Vc = 0.5 * qc.dot(fc);
      energy_[0] += Vc;
      energy_[cl.lb[0]] -= Vc;
    }
    if (!any_flux) continue;
    // Power delivered by the cell to its nodes beyond the level, summed from
    // the farthest node inward.
    double tail = 0.0;
    for (int m = npc - 1; m >= 1; --m) {
      const int a = cl.order[m];
      const std::size_t base = K * g.cell_node(c, a);
      for (int k = 0; k < K; ++k) tail += s.v[base + k] * fc[K * a + k];
      // Nodes order[m..] lie beyond r for r in [d(m-1), d(m)).
      const std::size_t lo = cl.lb[m - 1], hi = cl.lb[m];
      if (lo < hi) {
        flux_[lo] -= tail;
        flux_[hi] += tail;
      }
    }
  }
  const auto& mass = disc_.mass();
  for (std::size_t n = 0; n < g.nodes(); ++n) {
    if (node_lb_[n] == 0) continue;
    double ke = 0.0;
    for (int k = 0; k < K; ++k) {
      const std::size_t d = K * n + k;
      ke += 0.5 * mass[d] * s.v[d] * s.v[d];
    }
    energy_[0] += ke;
    energy_[node_lb_[n]] -= ke;
  }
  flux.resize(nr);
  energy.resize(nr);
  double fa = 0.0, ea = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    fa += flux_[i];
    ea += energy_[i];
    flux[i] = fa;
    energy[i] = ea;
  }
}

void SurfacePowerRecorder::observe(const Simulator& sim, bool record) {
  std::vector<double> flux, energy;
  instantaneous(sim.state(), flux, energy);
  const double t = sim.state().t;
  const double lam = series_.lambda;
  const double w = std::exp(-lam * t);
  const std::size_t nr = flux.size();
  if (started_) {
    const double wp = std::exp(-lam * t_prev_), h = 0.5 * (t - t_prev_);
    for (std::size_t i = 0; i < nr; ++i) {
      p_acc_[i] += h * (wp * flux_prev_[i] + w * flux[i]);
      e_int_[i] += h * (wp * energy_prev_[i] + w * energy[i]);
    }
  }
  started_ = true;
  t_prev_ = t;
  flux_prev_ = flux;
  energy_prev_ = energy;
  if (!record) return;
  std::vector<double> ev(nr);
  for (std::size_t i = 0; i < nr; ++i)
    ev[i] = w * energy[i] + lam * e_int_[i];
  series_.t_grid.push_back(t);
  series_.P.push_back(p_acc_);
  series_.E_vol.push_back(std::move(ev));
}

DecayBound decay_bound(const std::vector<double>& r,
                       const std::vector<double>& P, const SpeedParams& sp,
                       double t, double tol) {
  if (r.size() != P.size() || r.empty())
    throw InvalidParameter("radius and power arrays differ in length");
  DecayBound b;
  const double P0 = P[0];
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > sp.c * t * (1 + 1e-12)) break;
    ++b.radii_checked;
    if (P0 > 0) {
      const double env = P0 * std::exp(-sp.lambda * r[i] / sp.c);
      b.max_ratio = std::max(b.max_ratio, P[i] / env);
      if (P[i] > env * (1.0 + tol)) b.ok = false;
    } else if (P[i] > 0) {
      b.ok = false;
    }
  }
  return b;
}

DecayReport decay_report(const std::vector<double>& r,
                         const std::vector<double>& P, const SpeedParams& sp,
                         double t, double tol) {
  const DecayBound b = decay_bound(r, P, sp, t, tol);
  const double P0 = P[0];
  DecayReport rep;
  rep.bound_ok = b.ok;
  rep.max_ratio = b.max_ratio;
  std::vector<double> xs, ys;
  if (P0 > 0)
    for (std::size_t i = 0; i < b.radii_checked; ++i)
      if (P[i] > 1e-12 * P0) {
        xs.push_back(r[i]);
        ys.push_back(std::log(P[i]));
      }
  rep.radii_used = xs.size();
  if (xs.size() < 3)
    throw Degenerate("fewer than 3 radii with P(r, t) > 1e-12 P(0, t)");
  const double n = double(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (!(sxx > 0)) throw Degenerate("radii do not vary");
  rep.slope = sxy / sxx;
  return rep;
}

// ------------------------------------------------------------------ front

void FrontRecorder::observe(const StateField& s) {
  const std::size_t N = dist_.size();
  std::vector<float> m(N);
  for (std::size_t n = 0; n < N; ++n) {
    double a = 0.0;
    for (int k = 0; k < kDofsPerNode; ++k) {
      const double x = s.q[kDofsPerNode * n + k];
      a += x * x;
    }
    m[n] = static_cast<float>(std::sqrt(a));
  }
  times_.push_back(s.t);
  mags_.push_back(std::move(m));
}

std::vector<FrontSample> FrontRecorder::fronts(double threshold) const {
  float peak = 0.0f;
  for (const auto& m : mags_)
    for (float x : m) peak = std::max(peak, x);
  std::vector<FrontSample> out;
  const double cut = threshold * peak;
  for (std::size_t s = 0; s < times_.size(); ++s) {
    double r = 0.0;
    for (std::size_t n = 0; n < dist_.size(); ++n)
      if (mags_[s][n] > cut) r = std::max(r, dist_[n]);
    out.push_back({times_[s], r});
  }
  return out;
}

double front_speed(const std::vector<FrontSample>& fronts, double L) {
  std::vector<double> ts, rs;
  for (const auto& f : fronts)
    if (f.r_front > 0 && f.r_front < 0.95 * L) {
      ts.push_back(f.t);
      rs.push_back(f.r_front);
    }
  if (ts.size() < 2) throw NoFront("no front samples outside the support");
  const double n = double(ts.size());
  const double mt = std::accumulate(ts.begin(), ts.end(), 0.0) / n;
  const double mr = std::accumulate(rs.begin(), rs.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sxy += (ts[i] - mt) * (rs[i] - mr);
    sxx += (ts[i] - mt) * (ts[i] - mt);
  }
  if (!(sxx > 0)) throw NoFront("front samples share one time");
  return sxy / sxx;
}

// ----------------------------------------------------------------- Cesaro

std::vector<CesaroSample> cesaro_means(const std::vector<EnergySample>& e) {
  CesaroRecorder rec;
  for (const auto& s : e) rec.observe(s, true);
  return rec.series();
}

CesaroSample cesaro_at(const std::vector<EnergySample>& e, double t) {
  if (!(t > 0)) throw UndefinedAtZero("Cesaro mean requires t > 0");
  CesaroRecorder rec;
  for (const auto& s : e) {
    if (s.t > t) break;
    rec.observe(s, s.t == t);
  }
  if (rec.series().empty() || rec.series().back().t != t)
    throw InvalidParameter("t is not a sample time");
  return rec.series().back();
}

void CesaroRecorder::observe(const EnergySample& e, bool record,
                             const std::array<double, 2>* half_step_kinetic) {
  if (started_) {
    const double h = 0.5 * (e.t - prev_.t);
    if (half_step_kinetic) {
      iku_ += 2 * h * (*half_step_kinetic)[0];
      ikp_ += 2 * h * (*half_step_kinetic)[1];
    } else {
      iku_ += h * (prev_.kinetic_u + e.kinetic_u);
      ikp_ += h * (prev_.kinetic_phi + e.kinetic_phi);
    }
    is_ += h * (prev_.strain + e.strain);
  }
  started_ = true;
  prev_ = e;
  if (!record || !(e.t > 0)) return;
  CesaroSample c;
  c.t = e.t;
  c.Kc_u = iku_ / e.t;
  c.Kc_phi = ikp_ / e.t;
  c.Kc = c.Kc_u + c.Kc_phi;
  c.Sc = is_ / e.t;
  c.gap = c.Kc - c.Sc;
  series_.push_back(c);
}

EquipartitionReport equipartition_report(const std::vector<CesaroSample>& c,
                                         double E0, bool displacement_pinned,
                                         const RigidDecomposition* rigid) {
  if (c.empty()) throw InvalidParameter("empty Cesaro series");
  EquipartitionReport rep;
  rep.E0 = E0;
  rep.case_id = displacement_pinned ? 1 : 2;
  if (rep.case_id == 2) {
    if (!rigid) throw MissingDecomposition("fully natural boundary");
    rep.predicted_offset = rigid->rigid_kinetic;
  }
  rep.final_gap = c.back().gap;
  rep.relative_error =
      std::abs(rep.final_gap - rep.predicted_offset) / (E0 > 0 ? E0 : 1.0);
  if (rep.case_id == 1) {
    // Envelope of |gap|: its maximum in each of 12 geometric windows over
    // [T/10, T], fitted in log-log. Local maxima alone would also pick up
    // the small bumps between envelope peaks.
    std::vector<double> lx, ly;
    const double t_end = c.back().t, t_start = 0.1 * t_end;
    constexpr int kWindows = 12;
    const double ratio = std::pow(t_end / t_start, 1.0 / kWindows);
    std::size_t i = 0;
    double lo = t_start;
    for (int w = 0; w < kWindows; ++w) {
      const double hi = w + 1 == kWindows ? t_end : lo * ratio;
      double best = 0.0, t_best = 0.0;
      for (; i < c.size() && c[i].t <= hi; ++i)
        if (c[i].t >= lo && std::abs(c[i].gap) > best) {
          best = std::abs(c[i].gap);
          t_best = c[i].t;
        }
      if (best > 0) {
        lx.push_back(std::log(t_best));
        ly.push_back(std::log(best));
      }
      lo = hi;
    }
    rep.windows_used = lx.size();
    if (lx.size() >= 3) {
      const double n = double(lx.size());
      const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
      const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
      double sxy = 0, sxx = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
      }
      rep.decay_exponent = sxx > 0 ? sxy / sxx : 0.0;
    } else {
      rep.decay_exponent = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return rep;
}

// ------------------------------------------------------ identity residuals

IdentityRecorder::IdentityRecorder(const Discretization& disc, double lambda,
                                   std::size_t snapshot_every,
                                   std::size_t max_snapshots)
    : disc_(disc),
      lambda_(lambda),
      every_(std::max<std::size_t>(1, snapshot_every)),
      max_snaps_(max_snapshots) {}

void IdentityRecorder::observe(const Simulator& sim) {
  const auto& s = sim.state();
  const auto& m = disc_.mass();
  const auto& fi = sim.internal_force();
  const auto& fs = sim.source_load();
  const auto& fb = sim.boundary_load();
  double vMv = 0, qKq = 0, vs = 0, vb = 0, qs = 0, qb = 0, qMv = 0;
  for (std::size_t d = 0; d < s.q.size(); ++d) {
    vMv += m[d] * s.v[d] * s.v[d];
    qMv += m[d] * s.q[d] * s.v[d];
    qKq += s.q[d] * fi[d];
    vs += s.v[d] * fs[d];
    vb += s.v[d] * fb[d];
    qs += s.q[d] * fs[d];
    qb += s.q[d] * fb[d];
  }
  const double t = s.t;
  const double w = std::exp(-lambda_ * t);
  const double E = 0.5 * (vMv + qKq);
  const std::array<double, 7> cur{w * E, w * vs, w * vb, vMv, qKq, qb, qs};
  if (!started_) {
    E0_ = E;
    V0_ = qMv;
  } else {
    const double h = 0.5 * (t - t_prev_);
    i_wE_ += h * (prev_[0] + cur[0]);
    i_wsrc_ += h * (prev_[1] + cur[1]);
    i_wbnd_ += h * (prev_[2] + cur[2]);
    i_kin2_ += h * (prev_[3] + cur[3]);
    i_str2_ += h * (prev_[4] + cur[4]);
    i_qbnd_ += h * (prev_[5] + cur[5]);
    i_qsrc_ += h * (prev_[6] + cur[6]);
  }
  started_ = true;
  t_prev_ = t;
  prev_ = cur;
  if (sim.step_index() % every_ != 0 || snaps_.size() >= max_snaps_) return;
  const double lhs_energy = w * E + lambda_ * i_wE_;
  const double rhs_energy = E0_ + i_wsrc_ + i_wbnd_;
  const double lhs_virial = qMv;
  const double rhs_virial = i_kin2_ - i_str2_ + V0_ + i_qbnd_ + i_qsrc_;
  res_energy_.push_back(std::abs(lhs_energy - rhs_energy));
  res_virial_.push_back(std::abs(lhs_virial - rhs_virial));
  Snapshot sn;
  sn.t = t;
  sn.q = s.q;
  sn.v = s.v;
  sn.load.resize(s.q.size());
  for (std::size_t d = 0; d < s.q.size(); ++d) sn.load[d] = fs[d] + fb[d];
  snaps_.push_back(std::move(sn));
}

double reciprocal_residual(const std::vector<Snapshot>& sn,
                           const std::vector<double>& mass, std::size_t m) {
  if (sn.empty() || 2 * m > sn.size() - 1)
    throw InsufficientSnapshots("state at 2t not recorded");
  if (m == 0) return 0.0;
  auto dotm = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += mass[d] * a[d] * b[d];
    return s;
  };
  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += a[d] * b[d];
    return s;
  };
  const double lhs = 2.0 * dotm(sn[m].q, sn[m].v);
  double rhs = dotm(sn[0].v, sn[2 * m].q) + dotm(sn[0].q, sn[2 * m].v);
  // Trapezoid in s over s_k = t_k - t_0 with t - s = t_{m-k}, t + s = t_{m+k}.
  double integral = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    const auto& lo = sn[m - k];
    const auto& hi = sn[m + k];
    const double g = dot(lo.load, hi.q) - dot(hi.load, lo.q);
    if (k > 0) {
      const double ds = (hi.t - sn[m + k - 1].t);
      integral += 0.5 * ds * (prev + g);
    }
    prev = g;
  }
  rhs += integral;
  return std::abs(lhs - rhs);
}

std::vector<ResidualSample> IdentityRecorder::residuals() const {
  if (snaps_.size() < 3)
    throw InsufficientSnapshots("need at least 3 snapshots, have " +
                                std::to_string(snaps_.size()));
  std::vector<ResidualSample> out;
  for (std::size_t m = 0; m < snaps_.size(); ++m) {
    ResidualSample r;
    r.t = snaps_[m].t;
    r.res_energy = res_energy_[m];
    r.res_virial = res_virial_[m];
    r.res_reciprocal = 2 * m < snaps_.size()
                    ? reciprocal_residual(snaps_, disc_.mass(), m)
                    : std::numeric_limits<double>::quiet_NaN();
    out.push_back(r);
  }
  return out;
}

}  // namespace poromix
