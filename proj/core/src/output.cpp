#include "poromix/output.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "poromix/errors.hpp"

namespace poromix {

namespace {

void row(std::string& out, std::initializer_list<double> xs) {
  bool first = true;
  for (double x : xs) {
    if (!first) out += ',';
    first = false;
    out += csv_number(x);
  }
  out += '\n';
}

void append_doubles(std::string& out, const std::vector<double>& xs) {
  static_assert(std::endian::native == std::endian::little,
                "snapshot writer assumes a little-endian host");
  const std::size_t at = out.size();
  out.resize(at + 8 * xs.size());
  if (!xs.empty()) std::memcpy(out.data() + at, xs.data(), 8 * xs.size());
}

}  // namespace

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string energy_csv(const std::vector<EnergySample>& e) {
  std::string out = "t,kinetic_u,kinetic_phi,strain,total\n";
  for (const auto& s : e)
    row(out, {s.t, s.kinetic_u, s.kinetic_phi, s.strain, s.total});
  return out;
}

std::string power_csv(const SurfacePowerSeries& p) {
  std::string out = "t,r,P,E_vol\n";
  for (std::size_t i = 0; i < p.t_grid.size(); ++i)
    for (std::size_t j = 0; j < p.r_grid.size(); ++j)
      row(out, {p.t_grid[i], p.r_grid[j], p.P[i][j], p.E_vol[i][j]});
  return out;
}

std::string cesaro_csv(const std::vector<CesaroSample>& c) {
  std::string out = "t,Kc_u,Kc_phi,Kc,Sc,gap\n";
  for (const auto& s : c) row(out, {s.t, s.Kc_u, s.Kc_phi, s.Kc, s.Sc, s.gap});
  return out;
}

std::string residuals_csv(const std::vector<ResidualSample>& r) {
  std::string out = "t,res_energy,res_virial,res_reciprocal\n";
  for (const auto& s : r) row(out, {s.t, s.res_energy, s.res_virial, s.res_reciprocal});
  return out;
}

std::string front_csv(const std::vector<FrontSample>& f) {
  std::string out = "t,r_front\n";
  for (const auto& s : f) row(out, {s.t, s.r_front});
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string encode_snapshot(const Snapshot& s, const Grid& grid) {
  std::string out = "poromix-snapshot 1\n";
  out += "time " + csv_number(s.t) + "\n";
  out += "grid dim " + std::to_string(grid.dim) + " n " +
         std::to_string(grid.n[0]) + " " + std::to_string(grid.n[1]) + "\n";
  const char* names[3] = {"q", "v", "load"};
  const std::vector<double>* fields[3] = {&s.q, &s.v, &s.load};
  for (int f = 0; f < 3; ++f)
    out += std::string("field ") + names[f] + " float64 shape " +
           std::to_string(fields[f]->size() / kDofsPerNode) + " " +
           std::to_string(kDofsPerNode) + "\n";
  out += "end_header\n";
  for (const auto* f : fields) append_doubles(out, *f);
  return out;
}

Snapshot decode_snapshot(const std::string& bytes) {
  const std::string marker = "end_header\n";
  const auto end = bytes.find(marker);
  if (end == std::string::npos) throw ParseError("snapshot header not closed");
  std::istringstream header(bytes.substr(0, end));
  std::string line, tag;
  Snapshot s;
  std::vector<std::pair<std::string, std::size_t>> fields;
  std::getline(header, line);
  if (line != "poromix-snapshot 1") throw ParseError("not a snapshot file");
  while (std::getline(header, line)) {
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "time") {
      ls >> s.t;
    } else if (tag == "field") {
      std::string name, dtype, shape;
      std::size_t rows = 0, cols = 0;
      ls >> name >> dtype >> shape >> rows >> cols;
      if (dtype != "float64") throw ParseError("unsupported dtype " + dtype);
      fields.emplace_back(name, rows * cols);
    }
  }
  std::size_t at = end + marker.size();
  for (const auto& [name, count] : fields) {
    if (at + 8 * count > bytes.size()) throw ParseError("snapshot truncated");
    std::vector<double> xs(count);
    if (count) std::memcpy(xs.data(), bytes.data() + at, 8 * count);
    at += 8 * count;
    if (name == "q") s.q = std::move(xs);
    else if (name == "v") s.v = std::move(xs);
    else if (name == "load") s.load = std::move(xs);
  }
  return s;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path);
}

std::string write_run_outputs(const std::string& dir, const RunConfig& cfg,
                              const RunResult& res) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());

  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("config.txt", write_config(cfg));
  files.emplace_back("energy.csv", energy_csv(res.energy));
  files.emplace_back("cesaro.csv", cesaro_csv(res.cesaro));
  if (cfg.problem.record.power)
    files.emplace_back("power.csv", power_csv(res.power));
  if (cfg.problem.record.identities)
    files.emplace_back("residuals.csv", residuals_csv(res.residuals));
  if (cfg.problem.record.front)
    files.emplace_back("front.csv", front_csv(res.front));

  std::string summary;
  auto kv = [&](const std::string& k, const std::string& v) {
    summary += k + " " + v + "\n";
  };
  kv("xi_min", csv_number(res.moduli.xi_min));
  kv("xi_max", csv_number(res.moduli.xi_max));
  kv("m", csv_number(res.speed.m_inertia));
  kv("c", csv_number(res.speed.c));
  kv("acoustic_speed", csv_number(res.acoustic_speed));
  kv("dt", csv_number(res.dt));
  kv("steps", std::to_string(res.steps));
  kv("L", csv_number(res.geometry.L));
  kv("support_fallback", res.geometry.fallback ? "true" : "false");
  kv("snapshot_every", std::to_string(res.snapshot_every));
  files.emplace_back("summary.txt", summary);

  for (std::size_t i = 0; i < res.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%06zu.bin", i);
    files.emplace_back(name, encode_snapshot(res.snapshots[i],
                                             cfg.problem.grid));
  }

  std::string manifest = "poromix-manifest 1\n";
  manifest += "input config " + hex64(fnv1a64(files[0].second)) + "\n";
  manifest += "input material " +
              hex64(fnv1a64(write_material(cfg.problem.material))) + "\n";
  for (const auto& [name, bytes] : files) {
    write_file((fs::path(dir) / name).string(), bytes);
    manifest += "output " + name + " " + hex64(fnv1a64(bytes)) + " " +
                std::to_string(bytes.size()) + "\n";
  }
  write_file((fs::path(dir) / "manifest.txt").string(), manifest);
  return manifest;
}

}  // namespace poromix
