#pragma once

#include <cstdint>
#include <string>

#include "poromix/material.hpp"
#include "poromix/problem.hpp"
#include "poromix/random_material.hpp"

namespace poromix {

/// Where the material constants come from: a material file, or a named
/// built-in ("identity", "decoupled", "random", "broad"; the random ones
/// take a seed and, for "random", a coupling scale).
struct MaterialSource {
  std::string path;
  std::string builtin;
  std::uint64_t seed = kDefaultSeed;
  double coupling = 0.2;

  friend bool operator==(const MaterialSource&,
                         const MaterialSource&) = default;
};

struct RunConfig {
  ProblemSpec problem;
  MaterialSource material;
  std::string output_dir = "out";
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  /// Directory relative material paths are resolved against.
  std::string base_dir = ".";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates a run configuration. All schema problems are
/// collected and reported together in one SchemaError, one per line with
/// its line reference. Relative material paths resolve against
/// `base_dir`.
RunConfig parse_config(const std::string& text, const std::string& base_dir,
                       const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Canonical text: every key written with its value, defaults included,
/// sorted keys, 17 significant digits.
std::string write_config(const RunConfig& cfg);

/// Resolves the material source to constants.
MaterialConstants resolve_material(const MaterialSource& src,
                                   const std::string& base_dir);

/// Material files use the same text format. Keys: A, B, C (3x3x3x3 nested
/// arrays, or 81 numbers in (i, j, r, s) order), D, E, M, N, alpha, beta,
/// gamma, a, b, c (3x3 nested, or 9 numbers row-major), zeta, mu, tau,
/// rho1, rho2, chi1, chi2. Omitted tensors are zero, omitted densities and
/// inertias 1. The writer emits nested arrays.
MaterialConstants parse_material(const std::string& text,
                                 const std::string& source = "<material>");
MaterialConstants load_material(const std::string& path);
std::string write_material(const MaterialConstants& consts);

}  // namespace poromix
