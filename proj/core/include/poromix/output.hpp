#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "poromix/config.hpp"
#include "poromix/diagnostics.hpp"
#include "poromix/run.hpp"

namespace poromix {

/// Floats in every artifact use %.17g so identical runs give identical bytes.
std::string csv_number(double x);

std::string energy_csv(const std::vector<EnergySample>& e);
/// One row per (t, r).
std::string power_csv(const SurfacePowerSeries& p);
std::string cesaro_csv(const std::vector<CesaroSample>& c);
std::string residuals_csv(const std::vector<ResidualSample>& r);
std::string front_csv(const std::vector<FrontSample>& f);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Text header (format tag, time, grid, one line per field with its name,
/// dtype and shape) closed by an `end_header` line, then the fields as
/// little-endian float64 arrays in header order.
std::string encode_snapshot(const Snapshot& s, const Grid& grid);
Snapshot decode_snapshot(const std::string& bytes);

void write_file(const std::string& path, std::string_view bytes);

/// Writes energy.csv, power.csv, cesaro.csv, residuals.csv, front.csv,
/// summary.txt, config.txt (canonical), snapshots (when recorded) and a
/// manifest.txt holding FNV-1a hashes of the inputs and every artifact.
/// Returns the manifest text.
std::string write_run_outputs(const std::string& dir, const RunConfig& cfg,
                              const RunResult& result);

}  // namespace poromix
