// Command line entry point: material checks, simulation runs and the
// verification suites.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "poromix/config.hpp"
#include "poromix/errors.hpp"
#include "poromix/output.hpp"
#include "poromix/run.hpp"
#include "poromix/verify.hpp"

namespace {

using namespace poromix;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

int material_check(const std::string& path, int dim) {
  const MaterialConstants m = load_material(path);
  const SymmetryReport sym = validate_symmetries(m, kSymmetryTolerance);
  for (const auto& v : sym.violations)
    std::printf("symmetry violated: %s (max deviation %.3g)\n",
                v.relation.c_str(), v.max_deviation);
  const QuadraticForm form = assemble_quadratic_form(m);
  std::printf("xi_min %.17g\nxi_max %.17g\n", form.xi_min, form.xi_max);
  if (!sym.ok()) return kCheckFailed;
  try {
    elastic_moduli_bounds(form);
  } catch (const NotPositiveDefinite& e) {
    std::printf("%s\n", e.what());
    return kCheckFailed;
  }
  const SpeedParams sp = wave_speed(m, form.xi_max, 1.0);
  std::printf("m %.17g\nc %.17g\n", sp.m_inertia, sp.c);
  std::printf("acoustic_speed %.17g\n", max_acoustic_speed(m, dim));
  std::printf("admissible yes\n");
  return kPass;
}

int generate_cmd(const MaterialSource& src, const std::string& out) {
  const std::string text = write_material(resolve_material(src, "."));
  if (out.empty()) std::fputs(text.c_str(), stdout);
  else write_file(out, text);
  return kPass;
}

int simulate_cmd(const std::string& config, const std::string& out_dir) {
  RunConfig cfg = load_config(config);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  const RunResult r = simulate(cfg.problem);
  write_run_outputs(cfg.output_dir, cfg, r);
  std::printf("steps %zu dt %.6g c %.6g\n", r.steps, r.dt, r.speed.c);
  std::printf("wrote %s\n",
              (std::filesystem::path(cfg.output_dir) / "manifest.txt")
                  .string()
                  .c_str());
  return kPass;
}

int verify_cmd(const std::string& config, std::string suite,
               const VerifyOptions& opt, const std::string& out_dir) {
  const RunConfig cfg = load_config(config);
  if (suite.empty()) suite = cfg.suite;
  std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
  const VerifyReport rep = verify(cfg, suite, opt);
  std::fputs(rep.text().c_str(), stdout);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/verify_" + suite + ".csv", rep.csv());
    write_file(out_dir + "/verify_" + suite + ".txt", rep.text());
  }
  return rep.pass() ? kPass : kCheckFailed;
}

int decay_cmd(const std::string& config, bool sweep, double tol,
              unsigned threads) {
  const RunConfig cfg = load_config(config);
  const auto lambdas =
      sweep ? lambda_sweep(cfg.problem) : std::vector{cfg.problem.lambda};
  const auto rows = decay_sweep(cfg.problem, lambdas, tol, threads);
  std::printf("lambda,t,slope,max_ratio,radii,bound_ok\n");
  bool ok = !rows.empty();
  for (const auto& r : rows) {
    std::printf("%s,%s,%s,%s,%zu,%d\n", csv_number(r.lambda).c_str(),
                csv_number(r.t).c_str(), csv_number(r.slope).c_str(),
                csv_number(r.bound.max_ratio).c_str(), r.bound.radii_checked,
                r.bound.ok ? 1 : 0);
    ok = ok && r.bound.ok;
  }
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poromix: porous elastic mixture dynamics"};
  app.require_subcommand(1);

  std::string material_path;
  int dim = 1;
  auto* mc = app.add_subcommand("material-check",
                                "Validate a material file and print moduli");
  mc->add_option("file", material_path, "material file")->required();
  mc->add_option("--dim", dim, "grid dimension for the acoustic speed")
      ->check(CLI::Range(1, 3));

  MaterialSource gen_src;
  gen_src.builtin = "random";
  std::string gen_out;
  auto* gen = app.add_subcommand("material-generate",
                                 "Write a built-in material as a file");
  gen->add_option("--builtin", gen_src.builtin,
                  "identity|decoupled|random|broad")
      ->check(CLI::IsMember({"identity", "decoupled", "random", "broad"}));
  gen->add_option("--seed", gen_src.seed, "seed for random materials");
  gen->add_option("--coupling", gen_src.coupling,
                  "coupling scale for the random material");
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  std::string config, out_dir;
  auto* sim = app.add_subcommand("simulate", "Run a configuration");
  sim->add_option("--config", config, "run configuration")->required();
  sim->add_option("--out", out_dir, "output directory (overrides config)");

  std::string suite;
  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--config", config, "run configuration")->required();
  ver->add_option("--suite", suite,
                  "constitutive|identities|decay|influence|equipartition|"
                  "uniqueness|all (default: from config)");
  ver->add_option("--seed", vopt.seed, "seed for randomized checks");
  ver->add_option("--samples", vopt.samples, "random constitutive samples");
  ver->add_option("--tol", vopt.tol_h, "discretization allowance");
  ver->add_option("--threads", vopt.threads, "worker threads");
  ver->add_option("--out", out_dir, "directory for the report files");

  bool sweep = false;
  double tol = 0.05;
  unsigned threads = 0;
  auto* dec = app.add_subcommand("decay-report",
                                 "Decay envelope of the surface power");
  dec->add_option("--config", config, "run configuration")->required();
  dec->add_flag("--lambda-sweep", sweep,
                "use lambda in {0.5, 1, 2} c / domain length");
  dec->add_option("--tol", tol, "discretization allowance");
  dec->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*mc) return material_check(material_path, dim);
    if (*gen) return generate_cmd(gen_src, gen_out);
    if (*sim) return simulate_cmd(config, out_dir);
    if (*ver) {
      // Read a seed given in the config unless one was passed explicitly.
      if (ver->count("--seed") == 0) vopt.seed = load_config(config).seed;
      return verify_cmd(config, suite, vopt, out_dir);
    }
    if (*dec) return decay_cmd(config, sweep, tol, threads);
  } catch (const NonFinite& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNumerical;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
