#include "poromix/config.hpp"

#include <filesystem>
#include <functional>
#include <set>

#include "poromix/errors.hpp"
#include "text_format.hpp"

namespace poromix {

namespace {

using text::Json;

const char* const kFieldTypes[] = {"gaussian_pulse", "bump_pulse",
                                   "plane_wave", "rigid", "zero"};
const char* const kSourceNames[8] = {"f1_1", "f1_2", "f1_3", "f2_1",
                                     "f2_2", "f2_3", "l1",   "l2"};
const char* const kBcNames[] = {"dirichlet_zero", "traction_free",
                                "prescribed_displacement",
                                "prescribed_traction"};
const char* const kTimeNames[] = {"constant", "gaussian", "sine"};

/// Collects schema problems instead of stopping at the first one.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  void error(int line, const std::string& where, const std::string& msg) {
    errors_.push_back(source_ + ":" + std::to_string(line) + ": " + where +
                      ": " + msg);
  }
  void finish() const {
    if (errors_.empty()) return;
    std::string all;
    for (const auto& e : errors_) all += (all.empty() ? "" : "\n") + e;
    throw SchemaError(all);
  }

  int line = 0;

  void check_keys(const Json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
      error(line, where, "expected an object");
      return;
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || it.key() == a;
      if (!ok) error(line, where, "unknown key '" + it.key() + "'");
    }
  }

  double number(const Json& v, const std::string& where, double fallback) {
    if (!v.is_number()) {
      error(line, where, "expected a number");
      return fallback;
    }
    return v.get<double>();
  }

  template <class T>
  T integer(const Json& v, const std::string& where, T fallback) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      error(line, where, "expected a non-negative integer");
      return fallback;
    }
    return static_cast<T>(v.get<long long>());
  }

  bool boolean(const Json& v, const std::string& where) {
    if (!v.is_boolean()) {
      error(line, where, "expected true or false");
      return false;
    }
    return v.get<bool>();
  }

  std::string string(const Json& v, const std::string& where) {
    if (!v.is_string()) {
      error(line, where, "expected a string");
      return {};
    }
    return v.get<std::string>();
  }

  std::vector<double> numbers(const Json& v, const std::string& where) {
    std::vector<double> out;
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) {
      error(line, where, "expected a number or a list of numbers");
      return out;
    }
    for (const auto& x : v) out.push_back(number(x, where, 0.0));
    return out;
  }

  Vec3 vec3(const Json& v, const std::string& where) {
    Vec3 out{};
    const auto xs = numbers(v, where);
    if (xs.size() > 3) error(line, where, "at most 3 components");
    for (std::size_t i = 0; i < xs.size() && i < 3; ++i) out[i] = xs[i];
    return out;
  }

  /// Runs `f` on the member when present.
  void opt(const Json& obj, const char* key,
           const std::function<void(const Json&)>& f) {
    if (obj.is_object() && obj.contains(key)) f(obj.at(key));
  }

  template <class Kind, std::size_t N>
  Kind choice(const Json& v, const std::string& where,
              const char* const (&names)[N], Kind fallback) {
    const std::string s = string(v, where);
    for (std::size_t k = 0; k < N; ++k)
      if (s == names[k]) return static_cast<Kind>(k);
    if (!s.empty()) error(line, where, "unknown value '" + s + "'");
    return fallback;
  }

  // Field-name parsers raise SchemaError; turn that into a collected error.
  template <class F>
  auto guarded(const std::string& where, F f, decltype(f()) fallback) {
    try {
      return f();
    } catch (const SchemaError& e) {
      error(line, where, e.what());
      return fallback;
    }
  }

 private:
  std::string source_;
  std::vector<std::string> errors_;
};

TimeProfile read_time(Reader& r, const Json& v, const std::string& where) {
  TimeProfile t;
  r.check_keys(v, where,
               {"kind", "amplitude", "t0", "width", "omega", "phase"});
  r.opt(v, "kind", [&](const Json& x) {
    t.kind = r.choice(x, where + ".kind", kTimeNames, t.kind);
  });
  r.opt(v, "amplitude", [&](const Json& x) {
    t.amplitude = r.number(x, where + ".amplitude", t.amplitude);
  });
  r.opt(v, "t0", [&](const Json& x) { t.t0 = r.number(x, where, t.t0); });
  r.opt(v, "width",
        [&](const Json& x) { t.width = r.number(x, where, t.width); });
  r.opt(v, "omega",
        [&](const Json& x) { t.omega = r.number(x, where, t.omega); });
  r.opt(v, "phase",
        [&](const Json& x) { t.phase = r.number(x, where, t.phase); });
  return t;
}

Json write_time(const TimeProfile& t) {
  return {{"kind", kTimeNames[static_cast<int>(t.kind)]},
          {"amplitude", t.amplitude},
          {"t0", t.t0},
          {"width", t.width},
          {"omega", t.omega},
          {"phase", t.phase}};
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Grid read_grid(Reader& r, const Json& v) {
  Grid g;
  r.check_keys(v, "grid", {"dim", "n", "h", "origin"});
  r.opt(v, "dim", [&](const Json& x) { g.dim = r.integer(x, "grid.dim", 1); });
  if (g.dim != 1 && g.dim != 2) {
    r.error(r.line, "grid.dim", "must be 1 or 2");
    return g;
  }
  auto fill = [&](const char* key, auto& arr, auto cast) {
    r.opt(v, key, [&](const Json& x) {
      const auto xs = r.numbers(x, std::string("grid.") + key);
      if (xs.size() != static_cast<std::size_t>(g.dim)) {
        r.error(r.line, std::string("grid.") + key,
                "needs " + std::to_string(g.dim) + " entries");
        return;
      }
      for (int d = 0; d < g.dim; ++d) arr[d] = cast(xs[d]);
    });
  };
  if (!v.is_object() || !v.contains("n") || !v.contains("h"))
    r.error(r.line, "grid", "requires n and h");
  fill("n", g.n, [](double x) { return static_cast<int>(x); });
  fill("h", g.h, [](double x) { return x; });
  fill("origin", g.origin, [](double x) { return x; });
  return g;
}

Json write_grid(const Grid& g) {
  Json n = Json::array(), h = Json::array(), o = Json::array();
  for (int d = 0; d < g.dim; ++d) {
    n.push_back(g.n[d]);
    h.push_back(g.h[d]);
    o.push_back(g.origin[d]);
  }
  return {{"dim", g.dim}, {"n", n}, {"h", h}, {"origin", o}};
}

InitialProfile read_initial(Reader& r, const Json& v, const std::string& w) {
  using K = InitialProfile::Kind;
  InitialProfile p;
  if (!v.is_object() || !v.contains("type")) {
    r.error(r.line, w, "requires a type");
    return p;
  }
  p.kind = r.choice(v.at("type"), w + ".type", kFieldTypes, K::Zero);
  auto field = [&] {
    r.opt(v, "field", [&](const Json& x) {
      const std::string name = r.string(x, w + ".field");
      p.dof = r.guarded(w + ".field",
                        [&] { return parse_field(name, &p.velocity); }, 0);
    });
    if (!v.contains("field")) r.error(r.line, w, "requires a field");
  };
  switch (p.kind) {
    case K::GaussianPulse:
    case K::BumpPulse:
      r.check_keys(v, w, {"type", "field", "center", "width", "amplitude",
                          "drift"});
      field();
      r.opt(v, "center", [&](const Json& x) { p.center = r.vec3(x, w); });
      r.opt(v, "width",
            [&](const Json& x) { p.width = r.number(x, w + ".width", 1.0); });
      r.opt(v, "amplitude", [&](const Json& x) {
        p.amplitude = r.number(x, w + ".amplitude", 1.0);
      });
      r.opt(v, "drift", [&](const Json& x) {
        p.drift = r.vec3(x, w + ".drift");
        p.has_drift = true;
      });
      break;
    case K::PlaneWave:
      r.check_keys(v, w, {"type", "field", "k", "amplitude", "phase"});
      field();
      r.opt(v, "k", [&](const Json& x) { p.k = r.vec3(x, w + ".k"); });
      r.opt(v, "amplitude", [&](const Json& x) {
        p.amplitude = r.number(x, w + ".amplitude", 1.0);
      });
      r.opt(v, "phase",
            [&](const Json& x) { p.phase = r.number(x, w + ".phase", 0.0); });
      break;
    case K::Rigid:
      r.check_keys(v, w, {"type", "translation", "rotation", "constituent",
                          "velocity"});
      r.opt(v, "translation",
            [&](const Json& x) { p.translation = r.vec3(x, w); });
      r.opt(v, "rotation", [&](const Json& x) { p.rotation = r.vec3(x, w); });
      r.opt(v, "constituent", [&](const Json& x) {
        p.constituent = r.integer(x, w + ".constituent", 0);
        if (p.constituent > 2)
          r.error(r.line, w + ".constituent", "must be 0, 1 or 2");
      });
      r.opt(v, "velocity", [&](const Json& x) {
        p.velocity = r.boolean(x, w + ".velocity");
      });
      break;
    case K::Zero:
      r.check_keys(v, w, {"type"});
      break;
  }
  return p;
}

Json write_initial(const InitialProfile& p) {
  using K = InitialProfile::Kind;
  Json j = {{"type", kFieldTypes[static_cast<int>(p.kind)]}};
  switch (p.kind) {
    case K::GaussianPulse:
    case K::BumpPulse:
      j["field"] = field_name(p.dof, p.velocity);
      j["center"] = vec_json(p.center);
      j["width"] = p.width;
      j["amplitude"] = p.amplitude;
      if (p.has_drift) j["drift"] = vec_json(p.drift);
      break;
    case K::PlaneWave:
      j["field"] = field_name(p.dof, p.velocity);
      j["k"] = vec_json(p.k);
      j["amplitude"] = p.amplitude;
      j["phase"] = p.phase;
      break;
    case K::Rigid:
      j["translation"] = vec_json(p.translation);
      j["rotation"] = vec_json(p.rotation);
      j["constituent"] = p.constituent;
      j["velocity"] = p.velocity;
      break;
    case K::Zero:
      break;
  }
  return j;
}

SourceProfile read_source(Reader& r, const Json& v, const std::string& w) {
  SourceProfile s;
  r.check_keys(v, w, {"field", "center", "width", "amplitude", "time"});
  if (!v.is_object() || !v.contains("field"))
    r.error(r.line, w, "requires a field");
  r.opt(v, "field", [&](const Json& x) {
    const std::string name = r.string(x, w + ".field");
    s.dof = r.guarded(w + ".field", [&] { return parse_source_field(name); },
                      0);
  });
  r.opt(v, "center", [&](const Json& x) { s.center = r.vec3(x, w); });
  r.opt(v, "width",
        [&](const Json& x) { s.width = r.number(x, w + ".width", 1.0); });
  r.opt(v, "amplitude", [&](const Json& x) {
    s.amplitude = r.number(x, w + ".amplitude", 1.0);
  });
  r.opt(v, "time",
        [&](const Json& x) { s.time = read_time(r, x, w + ".time"); });
  return s;
}

Json write_source(const SourceProfile& s) {
  return {{"field", kSourceNames[s.dof]}, {"center", vec_json(s.center)},
          {"width", s.width},             {"amplitude", s.amplitude},
          {"time", write_time(s.time)}};
}

BoundaryCondition read_bc(Reader& r, const Json& v, const std::string& w) {
  using K = BoundaryCondition::Kind;
  BoundaryCondition bc;
  if (v.is_string()) {
    bc.kind = r.choice(v, w, kBcNames, K::TractionFree);
    return bc;
  }
  r.check_keys(v, w, {"kind", "values", "time", "center", "width"});
  if (!v.is_object() || !v.contains("kind")) {
    r.error(r.line, w, "requires a kind");
    return bc;
  }
  bc.kind = r.choice(v.at("kind"), w + ".kind", kBcNames, K::TractionFree);
  r.opt(v, "values",
        [&](const Json& x) { bc.values = r.numbers(x, w + ".values"); });
  r.opt(v, "time",
        [&](const Json& x) { bc.time = read_time(r, x, w + ".time"); });
  r.opt(v, "center", [&](const Json& x) { bc.center = r.vec3(x, w); });
  r.opt(v, "width",
        [&](const Json& x) { bc.width = r.number(x, w + ".width", 0.0); });
  return bc;
}

Json write_bc(const BoundaryCondition& bc) {
  return {{"kind", kBcNames[static_cast<int>(bc.kind)]},
          {"values", bc.values},
          {"time", write_time(bc.time)},
          {"center", vec_json(bc.center)},
          {"width", bc.width}};
}

BoundarySpec read_boundary(Reader& r, const Json& v) {
  BoundarySpec b;
  r.check_keys(v, "boundary", {"x_min", "x_max", "y_min", "y_max"});
  for (int s = 0; s < 4; ++s) {
    const std::string name = side_name(static_cast<Side>(s));
    r.opt(v, name.c_str(), [&](const Json& x) {
      const std::string w = "boundary." + name;
      if (x.is_string()) {
        b.sides[s][0] = read_bc(r, x, w);
        b.sides[s][1] = b.sides[s][0];
        return;
      }
      r.check_keys(x, w, {"u", "phi"});
      r.opt(x, "u",
            [&](const Json& y) { b.sides[s][0] = read_bc(r, y, w + ".u"); });
      r.opt(x, "phi", [&](const Json& y) {
        b.sides[s][1] = read_bc(r, y, w + ".phi");
      });
    });
  }
  return b;
}

Json write_boundary(const BoundarySpec& b, int dim) {
  Json j = Json::object();
  for (int s = 0; s < side_count(dim); ++s)
    j[side_name(static_cast<Side>(s))] = {{"u", write_bc(b.sides[s][0])},
                                          {"phi", write_bc(b.sides[s][1])}};
  return j;
}

RecordSpec read_record(Reader& r, const Json& v) {
  RecordSpec rec;
  const std::string w = "record";
  r.check_keys(v, w,
               {"energy_every", "snapshot_every", "snapshot_budget_mb",
                "write_snapshots", "power", "identities", "front", "r_grid",
                "r_count", "support_threshold", "front_threshold"});
  r.opt(v, "energy_every", [&](const Json& x) {
    rec.energy_every = r.integer(x, w + ".energy_every", rec.energy_every);
  });
  r.opt(v, "snapshot_every", [&](const Json& x) {
    rec.snapshot_every =
        r.integer(x, w + ".snapshot_every", rec.snapshot_every);
  });
  r.opt(v, "snapshot_budget_mb", [&](const Json& x) {
    rec.snapshot_budget_mb = r.number(x, w, rec.snapshot_budget_mb);
  });
  r.opt(v, "write_snapshots", [&](const Json& x) {
    rec.write_snapshots = r.boolean(x, w + ".write_snapshots");
  });
  r.opt(v, "power",
        [&](const Json& x) { rec.power = r.boolean(x, w + ".power"); });
  r.opt(v, "identities", [&](const Json& x) {
    rec.identities = r.boolean(x, w + ".identities");
  });
  r.opt(v, "front",
        [&](const Json& x) { rec.front = r.boolean(x, w + ".front"); });
  r.opt(v, "r_grid",
        [&](const Json& x) { rec.r_grid = r.numbers(x, w + ".r_grid"); });
  r.opt(v, "r_count", [&](const Json& x) {
    rec.r_count = r.integer(x, w + ".r_count", rec.r_count);
  });
  r.opt(v, "support_threshold", [&](const Json& x) {
    rec.support_threshold = r.number(x, w, rec.support_threshold);
  });
  r.opt(v, "front_threshold", [&](const Json& x) {
    rec.front_threshold = r.number(x, w, rec.front_threshold);
  });
  return rec;
}

Json write_record(const RecordSpec& rec) {
  return {{"energy_every", rec.energy_every},
          {"snapshot_every", rec.snapshot_every},
          {"snapshot_budget_mb", rec.snapshot_budget_mb},
          {"write_snapshots", rec.write_snapshots},
          {"power", rec.power},
          {"identities", rec.identities},
          {"front", rec.front},
          {"r_grid", rec.r_grid},
          {"r_count", rec.r_count},
          {"support_threshold", rec.support_threshold},
          {"front_threshold", rec.front_threshold}};
}

MaterialSource read_material_source(Reader& r, const Json& v) {
  MaterialSource m;
  if (v.is_string()) {
    m.path = v.get<std::string>();
    return m;
  }
  r.check_keys(v, "material", {"builtin", "seed", "coupling"});
  if (!v.is_object() || !v.contains("builtin")) {
    r.error(r.line, "material", "expected a path or {\"builtin\": name}");
    return m;
  }
  m.builtin = r.string(v.at("builtin"), "material.builtin");
  if (m.builtin != "identity" && m.builtin != "decoupled" &&
      m.builtin != "random" && m.builtin != "broad")
    r.error(r.line, "material.builtin", "unknown material '" + m.builtin + "'");
  r.opt(v, "seed", [&](const Json& x) {
    m.seed = r.integer(x, "material.seed", m.seed);
  });
  r.opt(v, "coupling", [&](const Json& x) {
    m.coupling = r.number(x, "material.coupling", m.coupling);
  });
  return m;
}

Json write_material_source(const MaterialSource& m) {
  if (m.builtin.empty()) return m.path;
  return {{"builtin", m.builtin}, {"seed", m.seed}, {"coupling", m.coupling}};
}

}  // namespace

MaterialConstants resolve_material(const MaterialSource& src,
                                   const std::string& base_dir) {
  if (src.builtin.empty()) {
    std::filesystem::path p(src.path);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_material(p.string());
  }
  if (src.builtin == "identity") return identity_material();
  if (src.builtin == "decoupled") return decoupled_material();
  Rng rng(src.seed);
  if (src.builtin == "random") return random_material(rng, src.coupling);
  if (src.builtin == "broad") return random_broad_material(rng);
  throw SchemaError("unknown material '" + src.builtin + "'");
}

RunConfig parse_config(const std::string& body, const std::string& base_dir,
                       const std::string& source) {
  const auto entries = text::parse(body, source);
  Reader r(source);
  RunConfig cfg;
  cfg.base_dir = base_dir;
  ProblemSpec& p = cfg.problem;
  bool have_grid = false, have_material = false;
  for (const auto& e : entries) {
    r.line = e.line;
    const Json& v = e.value;
    const std::string& k = e.key;
    if (k == "material") {
      cfg.material = read_material_source(r, v);
      have_material = true;
    } else if (k == "grid") {
      p.grid = read_grid(r, v);
      have_grid = true;
    } else if (k == "lambda") {
      p.lambda = r.number(v, k, p.lambda);
    } else if (k == "T") {
      p.T = r.number(v, k, p.T);
    } else if (k == "cfl") {
      p.cfl = r.number(v, k, p.cfl);
    } else if (k == "initial" || k == "sources") {
      const Json list = v.is_array() ? v : Json::array({v});
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string w = k + "[" + std::to_string(i) + "]";
        if (k == "initial") p.initial.push_back(read_initial(r, list[i], w));
        else p.sources.push_back(read_source(r, list[i], w));
      }
    } else if (k == "boundary") {
      p.boundary = read_boundary(r, v);
    } else if (k == "record") {
      p.record = read_record(r, v);
    } else if (k == "output") {
      cfg.output_dir = r.string(v, k);
    } else if (k == "suite") {
      cfg.suite = r.string(v, k);
      static const std::set<std::string> suites = {
          "constitutive", "identities", "decay",      "influence",
          "equipartition", "uniqueness", "all"};
      if (!suites.count(cfg.suite))
        r.error(e.line, k, "unknown suite '" + cfg.suite + "'");
    } else if (k == "seed") {
      cfg.seed = r.integer(v, k, cfg.seed);
    } else {
      r.error(e.line, k, "unknown key '" + k + "'");
    }
  }
  r.line = 0;
  if (!have_material) r.error(0, "material", "missing required key");
  if (!have_grid) r.error(0, "grid", "missing required key");
  r.finish();

  try {
    p.validate();
  } catch (const InvalidParameter& e) {
    throw SchemaError(source + ": " + e.what());
  }
  p.material = resolve_material(cfg.material, base_dir);
  p.material_path = cfg.material.path;
  return cfg;
}

RunConfig load_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_config(text::read_file(path), dir.empty() ? "." : dir.string(),
                      path);
}

std::string write_config(const RunConfig& cfg) {
  const ProblemSpec& p = cfg.problem;
  Json initial = Json::array(), sources = Json::array();
  for (const auto& x : p.initial) initial.push_back(write_initial(x));
  for (const auto& x : p.sources) sources.push_back(write_source(x));
  return text::write({
      {"material", write_material_source(cfg.material)},
      {"grid", write_grid(p.grid)},
      {"lambda", p.lambda},
      {"T", p.T},
      {"cfl", p.cfl},
      {"initial", initial},
      {"sources", sources},
      {"boundary", write_boundary(p.boundary, p.grid.dim)},
      {"record", write_record(p.record)},
      {"output", cfg.output_dir},
      {"suite", cfg.suite},
      {"seed", cfg.seed},
  });
}

// ------------------------------------------------------------- materials

namespace {

void flatten(const Json& v, std::vector<double>& out, bool& ok) {
  if (v.is_number()) out.push_back(v.get<double>());
  else if (v.is_array())
    for (const auto& x : v) flatten(x, out, ok);
  else ok = false;
}

}  // namespace

MaterialConstants parse_material(const std::string& body,
                                 const std::string& source) {
  const auto entries = text::parse(body, source);
  Reader r(source);
  MaterialConstants k;
  std::map<std::string, Tensor4*> t4 = {{"A", &k.A}, {"B", &k.B}, {"C", &k.C}};
  std::map<std::string, Mat3*> t2 = {
      {"D", &k.D},         {"E", &k.E},         {"M", &k.M},
      {"N", &k.N},         {"alpha", &k.alpha}, {"beta", &k.beta},
      {"gamma", &k.gamma}, {"a", &k.a},         {"b", &k.b},
      {"c", &k.c}};
  std::map<std::string, double*> sc = {
      {"zeta", &k.zeta}, {"mu", &k.mu},     {"tau", &k.tau},
      {"rho1", &k.rho1}, {"rho2", &k.rho2}, {"chi1", &k.chi1},
      {"chi2", &k.chi2}};
  for (const auto& e : entries) {
    r.line = e.line;
    std::vector<double> xs;
    bool ok = true;
    flatten(e.value, xs, ok);
    auto want = [&](std::size_t n) {
      if (!ok || xs.size() != n) {
        r.error(e.line, e.key, "expected " + std::to_string(n) + " numbers");
        return false;
      }
      return true;
    };
    if (auto it = t4.find(e.key); it != t4.end()) {
      if (want(81)) std::copy(xs.begin(), xs.end(), it->second->v.begin());
    } else if (auto it2 = t2.find(e.key); it2 != t2.end()) {
      if (want(9)) std::copy(xs.begin(), xs.end(), it2->second->v.begin());
    } else if (auto it3 = sc.find(e.key); it3 != sc.end()) {
      if (want(1)) *it3->second = xs[0];
    } else {
      r.error(e.line, e.key, "unknown key '" + e.key + "'");
    }
  }
  r.finish();
  return k;
}

MaterialConstants load_material(const std::string& path) {
  return parse_material(text::read_file(path), path);
}

std::string write_material(const MaterialConstants& k) {
  auto mat = [](const Mat3& m) {
    Json j = Json::array();
    for (int i = 0; i < 3; ++i)
      j.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return j;
  };
  auto ten = [](const Tensor4& t) {
    Json j = Json::array();
    for (int i = 0; i < 3; ++i) {
      Json ji = Json::array();
      for (int l = 0; l < 3; ++l) {
        Json jl = Json::array();
        for (int r = 0; r < 3; ++r)
          jl.push_back(Json::array({t(i, l, r, 0), t(i, l, r, 1), t(i, l, r, 2)}));
        ji.push_back(jl);
      }
      j.push_back(ji);
    }
    return j;
  };
  return text::write({
      {"A", ten(k.A)},           {"B", ten(k.B)},
      {"C", ten(k.C)},           {"D", mat(k.D)},
      {"E", mat(k.E)},           {"M", mat(k.M)},
      {"N", mat(k.N)},           {"alpha", mat(k.alpha)},
      {"beta", mat(k.beta)},     {"gamma", mat(k.gamma)},
      {"a", mat(k.a)},           {"b", mat(k.b)},
      {"c", mat(k.c)},           {"zeta", k.zeta},
      {"mu", k.mu},              {"tau", k.tau},
      {"rho1", k.rho1},          {"rho2", k.rho2},
      {"chi1", k.chi1},          {"chi2", k.chi2},
  });
}

}  // namespace poromix
