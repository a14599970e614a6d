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

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "quaketail/csv.hpp"
#include "quaketail/decluster.hpp"
#include "quaketail/error.hpp"
#include "quaketail/evt.hpp"
#include "quaketail/parametric.hpp"
#include "quaketail/sim.hpp"
#include "quaketail/version.hpp"

namespace quaketail::app {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return in;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

Json read_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  return Json::parse(in);
}

CensoredPairs load_pairs(const RunConfig& cfg) {
  auto in = open_in(cfg.pairs());
  return read_pairs_csv(in);
}

struct LoadedFit {
  ParametricModel model;
  EvtFit evt;
};

LoadedFit load_fit(const RunConfig& cfg) {
  const Json j = read_json(cfg.fit());
  return {model_from_json(j.at("parametric").at("model")), evt_fit_from_json(j.at("evt").at("fit"))};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<double> observed_above(const CensoredPairs& pairs, double trunc) {
  std::vector<double> ys;
  for (const auto& p : pairs.pairs()) {
    if (p.y && *p.y > trunc) ys.push_back(*p.y);
  }
  return ys;
}

Json stream_json(const RngStream& r) { return {{"seed", r.seed()}, {"stream", r.stream()}}; }

struct GofRun {
  ParametricGof parametric;
  MarginGof margin_y;
};

// Fixed stream consumption order: jitter X, jitter gaps, jitter Y.
GofRun run_gof(const RunConfig& cfg, const CensoredPairs& pairs, const ParametricModel& model,
               const EvtFit& evt) {
  auto jit = cfg.stream(Stream::kJitter);
  auto imp = cfg.stream(Stream::kImputation);
  GofRun run;
  run.parametric = parametric_gof(pairs, model, jit, imp, cfg.jitter_half_width);
  run.margin_y = evt_margin_y_gof(pairs, evt, jit, cfg.jitter_half_width);
  return run;
}

}  // namespace

void RunConfig::validate() const {
  if (!(censor <= trunc_y + 0.5 + 1e-9)) {
    throw UsageError("censor threshold must not exceed the Y truncation by more than 0.5");
  }
  if (!(trunc_x <= min_mainshock)) throw UsageError("X truncation must not exceed the mainshock floor");
  if (!(catalog_floor <= censor)) throw UsageError("catalog floor must not exceed the censor threshold");
  if (k < 1) throw UsageError("k must be at least 1");
  if (!(jitter_half_width > 0.0)) throw UsageError("jitter half-width must be positive");
  if (region) {
    try {
      region->validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
}

Json RunConfig::settings_json() const {
  Json j;
  j["schema"] = {{"time", schema.time},
                 {"latitude", schema.latitude},
                 {"longitude", schema.longitude},
                 {"magnitude", schema.magnitude},
                 {"depth", schema.depth ? Json(*schema.depth) : Json(nullptr)},
                 {"id", schema.id ? Json(*schema.id) : Json(nullptr)}};
  j["region"] = region ? Json::array({region->lat_min, region->lat_max, region->lon_min,
                                      region->lon_max})
                       : Json(nullptr);
  j["catalog_floor"] = catalog_floor;
  j["min_mainshock"] = min_mainshock;
  j["censor"] = censor;
  j["trunc_x"] = trunc_x;
  j["trunc_y"] = trunc_y;
  j["k"] = k;
  j["jitter_half_width"] = jitter_half_width;
  j["seed"] = seed;
  return j;
}

std::string RunConfig::config_hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(settings_json().dump())));
  return buf;
}

Json artifact_meta(const RunConfig& cfg) {
  return {{"tool", "quaketail"},
          {"version", kVersion},
          {"seed", cfg.seed},
          {"config_hash", cfg.config_hash()},
          {"rng", RngStream::kRngAlgorithm}};
}

std::vector<std::string> artifact_comments(const RunConfig& cfg) {
  return {std::string("quaketail ") + kVersion + " seed=" + std::to_string(cfg.seed) +
          " config=" + cfg.config_hash() + " rng=" + RngStream::kRngAlgorithm};
}

std::vector<double> GridSpec::values() const {
  if (!(step > 0.0) || !(hi >= lo)) throw UsageError("grid needs step > 0 and hi >= lo");
  std::vector<double> v;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) v.push_back(lo + step * static_cast<double>(i));
  return v;
}

DeclusterSummary cmd_decluster(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const Catalog raw = read_catalog(cfg.input, cfg.schema);
  const Catalog filtered = filter_region(raw, cfg.region.value_or(Region{}), cfg.catalog_floor);
  WindowTable table = WindowTable::gardner_knopoff();
  if (cfg.window_table) {
    auto in = open_in(*cfg.window_table);
    table = WindowTable::from_csv(in);
  }
  const auto events = decluster(filtered, table, {cfg.min_mainshock, cfg.censor});
  const auto pairs = extract_pairs(events, cfg.censor);

  DeclusterSummary summary{raw.size(), filtered.size(), filtered.duplicate_count(), pairs.n(),
                           pairs.n_observed()};
  if (filtered.empty()) log << "warning: no shocks left after filtering\n";

  std::filesystem::create_directories(cfg.out_dir);
  Json ev = {{"meta", artifact_meta(cfg)}, {"events", Json::array()}};
  for (const auto& e : events) ev["events"].push_back(event_json(e));
  write_json(cfg.out_dir / "events.json", ev);
  {
    auto out = open_out(cfg.out_dir / "pairs.csv");
    write_pairs_csv(out, pairs, artifact_comments(cfg));
  }
  write_json(cfg.out_dir / "summary.json", {{"meta", artifact_meta(cfg)},
                                             {"catalog_size", summary.catalog_size},
                                             {"filtered_size", summary.filtered_size},
                                             {"duplicate_rows", summary.duplicates},
                                             {"n", summary.n},
                                             {"n_observed", summary.n_observed}});
  log << "events: n=" << summary.n << " n_observed=" << summary.n_observed << '\n';
  return summary;
}

Json cmd_fit(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto pairs = load_pairs(cfg);
  if (pairs.n_observed() == 0) {
    throw std::runtime_error("no observed aftershocks: the censored gap likelihood is uninformative");
  }
  const auto par = fit_parametric(pairs, cfg.trunc_x);
  auto ties = cfg.stream(Stream::kTies);
  const auto evt = fit_evt(pairs, ties, cfg.k, cfg.trunc_x, cfg.trunc_y);
  const auto gof = run_gof(cfg, pairs, par.model, evt);

  std::vector<double> xs;
  for (const auto& p : pairs.pairs()) xs.push_back(p.x);
  const auto ys = observed_above(pairs, cfg.trunc_y);

  Json j;
  j["meta"] = artifact_meta(cfg);
  j["n"] = pairs.n();
  j["n_observed"] = pairs.n_observed();
  j["censor_threshold"] = pairs.censor_threshold();
  j["parametric"] = {{"margin_x", fitted_json(par.model.margin_x, xs)},
                     {"gap", fitted_json(par.gap_fit, pairs.n())},
                     {"model", model_json(par.model)},
                     {"mean_gap", mean_gap(par.model)}};
  j["evt"] = {{"margin_x", fitted_json(evt.margin_x, xs)},
              {"margin_y", fitted_json(evt.margin_y, ys)},
              {"fit", evt_fit_json(evt)}};
  j["gof"] = {{"jitter_half_width", cfg.jitter_half_width},
              {"margin_x", ks_json(gof.parametric.margin_x)},
              {"gap", ks_json(gof.parametric.gap)},
              {"margin_y", ks_json(gof.margin_y.ks)}};
  j["seeds"] = {{"master", cfg.seed},
                {"jitter", stream_json(cfg.stream(Stream::kJitter))},
                {"ties", stream_json(cfg.stream(Stream::kTies))},
                {"imputation", stream_json(cfg.stream(Stream::kImputation))}};

  std::filesystem::create_directories(cfg.out_dir);
  write_json(cfg.fit(), j);
  if (!par.gap_fit.converged) log << "warning: gap fit did not converge\n";
  log << "alpha=" << par.model.margin_x.rate() << " beta=" << par.model.gap.beta()
      << " C=" << par.model.gap.c() << " alpha_y=" << evt.margin_y.rate() << '\n';
  return j;
}

void cmd_tailprob(const RunConfig& cfg, std::vector<TailQuery> queries, std::ostream& log) {
  cfg.validate();
  const auto fit = load_fit(cfg);
  if (queries.empty()) {
    auto pairs = load_pairs(cfg).pairs();
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const CensoredPair& a, const CensoredPair& b) { return a.x > b.x; });
    for (const auto& p : pairs) {
      if (p.y && queries.size() < 10) queries.push_back({p.x, *p.y});
    }
  }

  std::filesystem::create_directories(cfg.out_dir);
  auto out = open_out(cfg.out_dir / "tailprob.csv");
  for (const auto& c : artifact_comments(cfg)) out << "# " << c << '\n';
  out << "# probabilities are conditional on a mainshock above the mainshock floor occurring\n";
  out << "s,t,parametric,nonparametric,p1,p2,ratio_clamped,note\n";
  for (const auto& q : queries) {
    std::string par_s, evt_s, p1_s, p2_s, clamped_s, note;
    try {
      par_s = format_number(joint_tail_parametric(fit.model, q.s, q.t));
    } catch (const DomainError& e) {
      note += std::string("parametric: ") + e.what() + "; ";
    }
    try {
      const auto est = tail_prob_evt(fit.evt, q.s, q.t);
      evt_s = format_number(est.probability);
      p1_s = format_number(est.p1);
      p2_s = format_number(est.p2);
      clamped_s = est.clamped ? "1" : "0";
      if (est.clamped) note += "ratio clamped to [0.02, 5]; ";
    } catch (const DomainError& e) {
      note += std::string("nonparametric: ") + e.what() + "; ";
    }
    if (!note.empty()) note = "\"" + note.substr(0, note.size() - 2) + "\"";
    out << format_number(q.s) << ',' << format_number(q.t) << ',' << par_s << ',' << evt_s << ','
        << p1_s << ',' << p2_s << ',' << clamped_s << ',' << note << '\n';
  }
  log << "tail probabilities: " << queries.size() << " rows\n";
}

void cmd_level_curves(const RunConfig& cfg, const std::vector<double>& probabilities,
                      const GridSpec& x_grid, std::ostream& log) {
  cfg.validate();
  const auto fit = load_fit(cfg);
  const auto grid = x_grid.values();
  std::vector<LevelCurve> par, evt;
  for (const double p : probabilities) {
    if (!(p > 0.0 && p < 1.0)) throw UsageError("level probabilities must lie in (0, 1)");
    par.push_back(level_curve_parametric(fit.model, p, grid));
    evt.push_back(level_curve_evt(fit.evt, p, grid));
  }
  std::filesystem::create_directories(cfg.out_dir);
  const auto comments = artifact_comments(cfg);
  {
    auto out = open_out(cfg.out_dir / "level_curves_parametric.csv");
    write_curves_csv(out, "parametric", par, comments);
  }
  {
    auto out = open_out(cfg.out_dir / "level_curves_evt.csv");
    write_curves_csv(out, "evt", evt, comments);
  }
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    log << "p=" << probabilities[i] << ": parametric " << par[i].points.size() << " points ("
        << par[i].omitted.size() << " omitted), evt " << evt[i].points.size() << " points ("
        << evt[i].omitted.size() << " omitted)\n";
  }
}

void cmd_diagnose_k(const RunConfig& cfg, const std::vector<double>& xs, int k_lo, int k_hi,
                    const GridSpec& r_grid, std::ostream& log) {
  cfg.validate();
  const auto fit = load_fit(cfg);
  const auto rows = k_diagnostic(fit.evt.ranked, xs, k_lo, k_hi);
  std::filesystem::create_directories(cfg.out_dir);
  const auto comments = artifact_comments(cfg);
  {
    auto out = open_out(cfg.out_dir / "k_diagnostic.csv");
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "x,k,r_hat\n";
    for (const auto& r : rows) {
      out << format_number(r.x) << ',' << r.k << ',' << format_number(r.r_hat) << '\n';
    }
  }
  {
    const SmoothedTailDependence smoothed(fit.evt.ranked, fit.evt.k);
    auto out = open_out(cfg.out_dir / "r_curve.csv");
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "# k=" << fit.evt.k << '\n';
    out << "x,r_hat,r_hat_smoothed\n";
    for (const double x : r_grid.values()) {
      out << format_number(x) << ',' << format_number(r_hat(fit.evt.ranked, x, fit.evt.k)) << ','
          << format_number(smoothed(x)) << '\n';
    }
  }
  log << "k diagnostic: " << rows.size() << " rows\n";
}

void cmd_simulate(const RunConfig& cfg, const SimulationSpec& spec, std::ostream& log) {
  cfg.validate();
  if (spec.n < 1) throw UsageError("simulation needs n >= 1");
  std::optional<AftershockLaw> law;
  try {
    law = spec.gompertz
              ? AftershockLaw::from_gompertz(spec.gompertz->first, spec.gompertz->second, spec.c,
                                             spec.p)
              : AftershockLaw(spec.a, spec.b, spec.c, spec.p);
    (void)TruncExp(spec.alpha, cfg.trunc_x);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid aftershock law: ") + e.what());
  }
  const TruncExp margin(spec.alpha, cfg.trunc_x);
  auto rng = cfg.stream(Stream::kSimulation);
  const auto pairs = simulate_pairs(*law, margin, spec.n, cfg.censor, rng);

  std::filesystem::create_directories(cfg.out_dir);
  const auto comments = artifact_comments(cfg);
  {
    auto out = open_out(cfg.out_dir / "simulated_pairs.csv");
    write_pairs_csv(out, pairs, comments);
  }
  {
    auto out = open_out(cfg.out_dir / "simulated_catalog.csv");
    write_catalog(out, pairs_to_catalog(pairs), cfg.schema, comments);
  }
  write_json(cfg.out_dir / "manifest.json",
             {{"meta", artifact_meta(cfg)},
              {"law", law_json(*law)},
              {"margin_x", {{"rate", margin.rate()}, {"truncation", margin.truncation()}}},
              {"n", pairs.n()},
              {"n_observed", pairs.n_observed()},
              {"censor_threshold", pairs.censor_threshold()},
              {"simulation_stream", stream_json(cfg.stream(Stream::kSimulation))}});
  log << "simulated " << pairs.n() << " pairs, " << pairs.n_observed() << " observed\n";
}

Json cmd_gof(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const auto pairs = load_pairs(cfg);
  const auto fit = load_fit(cfg);
  const auto gof = run_gof(cfg, pairs, fit.model, fit.evt);

  Json j = {{"meta", artifact_meta(cfg)},
            {"jitter_half_width", cfg.jitter_half_width},
            {"margin_x", ks_json(gof.parametric.margin_x)},
            {"gap", ks_json(gof.parametric.gap)},
            {"margin_y", ks_json(gof.margin_y.ks)},
            {"mean_gap", mean_gap(fit.model)}};
  std::filesystem::create_directories(cfg.out_dir);
  write_json(cfg.out_dir / "gof.json", j);
  const auto comments = artifact_comments(cfg);
  {
    auto jit = cfg.stream(Stream::kScatter);
    std::vector<double> ys;
    for (const auto& c : gof.parametric.completed) ys.push_back(c.y);
    const auto ys_j = jitter(ys, jit, cfg.jitter_half_width);
    auto out = open_out(cfg.out_dir / "gof_scatter.csv");
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "x,y,imputed\n";
    for (std::size_t i = 0; i < ys_j.size(); ++i) {
      out << format_number(gof.parametric.jittered_x[i]) << ',' << format_number(ys_j[i]) << ','
          << (gof.parametric.completed[i].imputed ? 1 : 0) << '\n';
    }
  }
  {
    auto out = open_out(cfg.out_dir / "gof_samples.csv");
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "kind,value\n";
    for (const double v : gof.parametric.jittered_x) out << "x," << format_number(v) << '\n';
    for (const double v : gof.parametric.jittered_gaps) out << "gap," << format_number(v) << '\n';
    for (const double v : gof.margin_y.jittered) out << "y," << format_number(v) << '\n';
  }
  {
    auto out = open_out(cfg.out_dir / "gof_density.csv");
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "kind,value,pdf\n";
    for (int i = 0; i <= 400; ++i) {
      const double v = fit.model.margin_x.truncation() + 0.01 * i;
      out << "x," << format_number(v) << ',' << format_number(fit.model.margin_x.pdf(v)) << '\n';
    }
    for (int i = 0; i <= 400; ++i) {
      const double z = 0.01 * i;
      out << "gap," << format_number(z) << ',' << format_number(fit.model.gap.pdf(z)) << '\n';
    }
    for (int i = 0; i <= 400; ++i) {
      const double v = fit.evt.margin_y.truncation() + 0.01 * i;
      out << "y," << format_number(v) << ',' << format_number(fit.evt.margin_y.pdf(v)) << '\n';
    }
  }
  log << "KS p-values: x=" << gof.parametric.margin_x.p_value << " gap=" << gof.parametric.gap.p_value
      << " y=" << gof.margin_y.ks.p_value << '\n';
  return j;
}

namespace {

TailQuery parse_query(const std::string& text) {
  const auto fields = csv::split(text);
  if (fields.size() != 2) throw UsageError("query must be 's,t': '" + text + "'");
  auto number = [&](const std::string& f) {
    const std::string v = csv::trim(f);
    if (v == "-inf" || v == "-Inf") return -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("query must be 's,t': '" + text + "'");
    return d;
  };
  return {number(fields[0]), number(fields[1])};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mainshock and largest-aftershock joint tail estimation", "quaketail"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string input, out_dir = ".", pairs, fit, window_table;
  std::vector<double> region;
  std::string depth_col = "depth", id_col;
  app.add_option("--input", input, "Catalog CSV");
  app.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  app.add_option("--pairs", pairs, "Pairs CSV (default <out-dir>/pairs.csv)");
  app.add_option("--fit", fit, "Fit JSON (default <out-dir>/fit.json)");
  app.add_option("--window-table", window_table, "Window table CSV: mag_lo,mag_hi,L_km,T_days");
  app.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  app.add_option("--k", cfg.k, "Number of upper order statistics")->capture_default_str();
  app.add_option("--trunc-x", cfg.trunc_x, "Mainshock truncation point")->capture_default_str();
  app.add_option("--trunc-y", cfg.trunc_y, "Aftershock truncation point")->capture_default_str();
  app.add_option("--censor", cfg.censor, "Aftershock censoring threshold")->capture_default_str();
  app.add_option("--min-magnitude", cfg.catalog_floor, "Catalog magnitude floor")
      ->capture_default_str();
  app.add_option("--min-mainshock", cfg.min_mainshock, "Mainshock magnitude floor")
      ->capture_default_str();
  app.add_option("--jitter", cfg.jitter_half_width, "Jitter half-width")->capture_default_str();
  app.add_option("--region", region, "lat_min,lat_max,lon_min,lon_max")
      ->expected(4)
      ->delimiter(',');
  app.add_option("--schema.col.time", cfg.schema.time, "Time column")->capture_default_str();
  app.add_option("--schema.col.latitude", cfg.schema.latitude, "Latitude column")
      ->capture_default_str();
  app.add_option("--schema.col.longitude", cfg.schema.longitude, "Longitude column")
      ->capture_default_str();
  app.add_option("--schema.col.magnitude", cfg.schema.magnitude, "Magnitude column")
      ->capture_default_str();
  app.add_option("--schema.col.depth", depth_col, "Depth column (empty for none)")
      ->capture_default_str();
  app.add_option("--schema.col.id", id_col, "Event id column (empty for row ordinals)");

  auto* decl = app.add_subcommand("decluster", "Split the catalog into mainshock events");
  auto* fit_cmd = app.add_subcommand("fit", "Fit the parametric and extreme-value models");

  auto* tail = app.add_subcommand("tailprob", "Joint tail probabilities P(X > s, Y > t)");
  std::vector<std::string> query_text;
  tail->add_option("--query", query_text, "s,t (repeatable; -inf allowed for t)");

  auto* curves = app.add_subcommand("level-curves", "Level curves of the joint tail");
  std::vector<double> levels = kDefaultLevels;
  GridSpec x_grid;
  curves->add_option("--levels", levels, "Probabilities")->delimiter(',')->capture_default_str();
  curves->add_option("--x-lo", x_grid.lo)->capture_default_str();
  curves->add_option("--x-hi", x_grid.hi)->capture_default_str();
  curves->add_option("--x-step", x_grid.step)->capture_default_str();

  auto* diag = app.add_subcommand("diagnose-k", "Rank estimator against k");
  std::vector<double> diag_xs = {0.5, 1.0, 2.0};
  int k_lo = 1, k_hi = 150;
  GridSpec r_grid{0.02, 5.0, 0.02};
  diag->add_option("--x", diag_xs, "x values")->delimiter(',')->capture_default_str();
  diag->add_option("--k-lo", k_lo)->capture_default_str();
  diag->add_option("--k-hi", k_hi)->capture_default_str();
  diag->add_option("--r-lo", r_grid.lo)->capture_default_str();
  diag->add_option("--r-hi", r_grid.hi)->capture_default_str();
  diag->add_option("--r-step", r_grid.step)->capture_default_str();

  auto* sim = app.add_subcommand("simulate", "Synthetic pairs and catalog from an aftershock law");
  SimulationSpec spec;
  std::vector<double> gompertz;
  sim->add_option("--a", spec.a)->capture_default_str();
  sim->add_option("--b", spec.b)->capture_default_str();
  sim->add_option("--c", spec.c, "Omori c")->capture_default_str();
  sim->add_option("--p", spec.p, "Omori p")->capture_default_str();
  sim->add_option("--gompertz", gompertz, "beta,C (overrides a and b)")
      ->expected(2)
      ->delimiter(',');
  sim->add_option("--alpha", spec.alpha, "Mainshock exponential rate")->capture_default_str();
  sim->add_option("--n", spec.n, "Number of events")->capture_default_str();

  auto* gof = app.add_subcommand("gof", "Goodness-of-fit tables");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.input = input;
    cfg.out_dir = out_dir;
    if (!pairs.empty()) cfg.pairs_path = pairs;
    if (!fit.empty()) cfg.fit_path = fit;
    if (!window_table.empty()) cfg.window_table = window_table;
    if (!region.empty()) cfg.region = Region{region[0], region[1], region[2], region[3]};
    cfg.schema.depth = depth_col.empty() ? std::nullopt : std::optional<std::string>(depth_col);
    cfg.schema.id = id_col.empty() ? std::nullopt : std::optional<std::string>(id_col);

    if (decl->parsed()) {
      if (input.empty()) throw UsageError("decluster needs --input");
      cmd_decluster(cfg, err);
    } else if (fit_cmd->parsed()) {
      cmd_fit(cfg, err);
    } else if (tail->parsed()) {
      std::vector<TailQuery> queries;
      for (const auto& q : query_text) queries.push_back(parse_query(q));
      cmd_tailprob(cfg, std::move(queries), err);
    } else if (curves->parsed()) {
      cmd_level_curves(cfg, levels, x_grid, err);
    } else if (diag->parsed()) {
      cmd_diagnose_k(cfg, diag_xs, k_lo, k_hi, r_grid, err);
    } else if (sim->parsed()) {
      if (!gompertz.empty()) spec.gompertz = std::make_pair(gompertz[0], gompertz[1]);
      cmd_simulate(cfg, spec, err);
    } else if (gof->parsed()) {
      cmd_gof(cfg, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace quaketail::app
