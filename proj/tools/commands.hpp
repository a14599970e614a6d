// Copyright 2026 The quaketail Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quaketail/catalog.hpp"
#include "quaketail/io.hpp"

namespace quaketail::app {

// Error in the command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-purpose stream ids derived from the master seed.
enum class Stream : std::uint64_t { kJitter = 1, kTies = 2, kImputation = 3, kSimulation = 4,
                                     kScatter = 5 };

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> pairs_path;
  std::optional<std::filesystem::path> fit_path;
  std::optional<std::filesystem::path> window_table;
  CatalogSchema schema;
  std::optional<Region> region;
  double catalog_floor = 4.0;
  double min_mainshock = 5.0;
  double censor = 4.0;
  double trunc_x = 4.95;
  double trunc_y = 4.55;
  int k = 40;
  double jitter_half_width = 0.05;
  std::uint64_t seed = 1;

  // Throws UsageError when floors and truncations are inconsistent.
  void validate() const;

  std::filesystem::path pairs() const { return pairs_path.value_or(out_dir / "pairs.csv"); }
  std::filesystem::path fit() const { return fit_path.value_or(out_dir / "fit.json"); }

  // Analysis settings only; paths are excluded so that the same analysis in
  // another directory hashes identically.
  Json settings_json() const;
  std::string config_hash() const;
  RngStream stream(Stream s) const { return RngStream(seed, static_cast<std::uint64_t>(s)); }
};

// {tool, version, seed, config_hash, rng}
Json artifact_meta(const RunConfig& cfg);
// Same information as CSV comment lines.
std::vector<std::string> artifact_comments(const RunConfig& cfg);

struct DeclusterSummary {
  std::size_t catalog_size = 0;
  std::size_t filtered_size = 0;
  std::size_t duplicates = 0;
  std::size_t n = 0;
  std::size_t n_observed = 0;
};

// events.json, pairs.csv, summary.json
DeclusterSummary cmd_decluster(const RunConfig& cfg, std::ostream& log);

// fit.json: both routes, goodness of fit and the seeds used.
Json cmd_fit(const RunConfig& cfg, std::ostream& log);

struct TailQuery {
  double s = 0.0;
  double t = 0.0;
};

// tailprob.csv. Without queries, uses the ten largest mainshocks that have
// an observed aftershock.
void cmd_tailprob(const RunConfig& cfg, std::vector<TailQuery> queries, std::ostream& log);

inline const std::vector<double> kDefaultLevels = {1e-3, 5e-4, 1e-4, 5e-5, 1e-5, 5e-6, 1e-6};

struct GridSpec {
  double lo = 5.0;
  double hi = 9.0;
  double step = 0.05;
  std::vector<double> values() const;
};

// level_curves_parametric.csv and level_curves_evt.csv.
void cmd_level_curves(const RunConfig& cfg, const std::vector<double>& probabilities,
                      const GridSpec& x_grid, std::ostream& log);

// k_diagnostic.csv (x, k, r_hat) and r_curve.csv (x, r_hat, r_hat_smoothed).
void cmd_diagnose_k(const RunConfig& cfg, const std::vector<double>& xs, int k_lo, int k_hi,
                    const GridSpec& r_grid, std::ostream& log);

struct SimulationSpec {
  double a = 0.0;
  double b = 1.0;
  double c = 1.0;
  double p = 2.0;
  std::optional<std::pair<double, double>> gompertz;  // (beta, C) overrides a and b
  double alpha = 2.3;
  std::size_t n = 180;
};

// simulated_pairs.csv, simulated_catalog.csv, manifest.json
void cmd_simulate(const RunConfig& cfg, const SimulationSpec& spec, std::ostream& log);

// gof.json, gof_scatter.csv, gof_samples.csv, gof_density.csv
Json cmd_gof(const RunConfig& cfg, std::ostream& log);

// Parses argv and dispatches. Returns 0 on success, 1 on runtime failures
// and 2 on usage or configuration errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quaketail::app
