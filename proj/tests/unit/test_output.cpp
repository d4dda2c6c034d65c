#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "poromix/config.hpp"
#include "poromix/errors.hpp"
#include "poromix/output.hpp"
#include "poromix/run.hpp"

using namespace poromix;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("FNV-1a 64 reference vectors") {
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
  CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");
}

TEST_CASE("csv numbers round-trip") {
  for (double x : {0.0, 1.0 / 7.0, -3.25e-17, 12345678.9}) {
    CHECK(std::stod(csv_number(x)) == x);
  }
  std::vector<EnergySample> e(2);
  e[1].t = 0.5;
  e[1].total = 2.0;
  const std::string csv = energy_csv(e);
  CHECK(csv.rfind("t,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("snapshots encode and decode exactly") {
  Grid g;
  g.dim = 2;
  g.n = {4, 5};
  g.h = {0.1, 0.2};
  Snapshot s;
  s.t = 0.123456789;
  for (std::size_t i = 0; i < 8 * g.nodes(); ++i) {
    s.q.push_back(1.0 / (i + 1));
    s.v.push_back(-double(i) * 1e-300);
    s.load.push_back(std::sqrt(double(i)));
  }
  const std::string bytes = encode_snapshot(s, g);
  CHECK(bytes.find("end_header\n") != std::string::npos);
  const Snapshot d = decode_snapshot(bytes);
  CHECK(d.t == s.t);
  CHECK(d.q == s.q);
  CHECK(d.v == s.v);
  CHECK(d.load == s.load);
  CHECK(encode_snapshot(d, g) == bytes);
  CHECK_THROWS_AS(decode_snapshot("garbage"), ParseError);
  CHECK_THROWS_AS(decode_snapshot(bytes.substr(0, bytes.size() - 8)), ParseError);
}

TEST_CASE("run outputs are written and byte-identical across runs") {
  RunConfig cfg = load_config(std::string(POROMIX_CONFIG_DIR) + "/pulse_1d.txt");
  cfg.problem.T = 0.05;
  cfg.problem.record.write_snapshots = true;
  cfg.problem.record.snapshot_every = 20;
  const fs::path root = fs::temp_directory_path() / "poromix_output_test";
  fs::remove_all(root);
  const std::string m1 = write_run_outputs((root / "a").string(), cfg, simulate(cfg.problem));
  const std::string m2 = write_run_outputs((root / "b").string(), cfg, simulate(cfg.problem));
  CHECK(m1 == m2);
  CHECK(slurp(root / "a" / "manifest.txt") == m1);
  for (const char* f : {"energy.csv", "power.csv", "cesaro.csv", "residuals.csv",
                        "front.csv", "summary.txt", "config.txt"}) {
    CAPTURE(f);
    CHECK(fs::exists(root / "a" / f));
    CHECK(slurp(root / "a" / f) == slurp(root / "b" / f));
    CHECK(m1.find(std::string(f) + " " + hex64(fnv1a64(slurp(root / "a" / f)))) !=
          std::string::npos);
  }
  // The canonical config written alongside parses back to the same run.
  const RunConfig back = parse_config(slurp(root / "a" / "config.txt"),
                                      std::string(POROMIX_CONFIG_DIR));
  CHECK(back.problem == cfg.problem);
  bool snapshot = false;
  for (const auto& e : fs::directory_iterator(root / "a"))
    if (e.path().filename().string().find("snapshot") != std::string::npos) snapshot = true;
  CHECK(snapshot);
  fs::remove_all(root);
}

TEST_CASE("unwritable destinations raise IoError") {
  CHECK_THROWS_AS(write_file("/proc/definitely/not/here.txt", "x"), IoError);
}
