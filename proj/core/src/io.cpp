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

#include "quaketail/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "quaketail/csv.hpp"
#include "quaketail/error.hpp"

namespace quaketail {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

Json shock_json(const ShockRecord& s) {
  Json j;
  j["id"] = s.id;
  j["time"] = format_iso8601(s.time);
  j["latitude"] = s.latitude;
  j["longitude"] = s.longitude;
  j["depth"] = s.depth ? Json(*s.depth) : Json(nullptr);
  j["magnitude"] = s.magnitude;
  return j;
}

Json event_json(const MainshockEvent& ev) {
  Json j;
  j["mainshock"] = shock_json(ev.mainshock);
  j["aftershock_count"] = ev.aftershocks.size();
  j["largest_aftershock"] = ev.largest_aftershock ? Json(*ev.largest_aftershock) : Json(nullptr);
  j["window"] = {{"L", ev.window.length_km}, {"T", ev.window.duration_days}};
  return j;
}

Json fitted_json(const TruncExp& d, std::span<const double> data) {
  double ll = 0.0;
  for (const double x : data) ll += d.log_pdf(x);
  Json j;
  j["family"] = "truncated_exponential";
  j["params"] = {{"rate", d.rate()}};
  j["truncation"] = d.truncation();
  j["n"] = data.size();
  j["loglik"] = ll;
  return j;
}

Json fitted_json(const GompertzFit& fit, std::size_t n) {
  Json j;
  j["family"] = "gompertz";
  j["params"] = {{"beta", fit.gap.beta()}, {"C", fit.gap.c()}};
  j["truncation"] = nullptr;
  j["n"] = n;
  j["loglik"] = fit.loglik;
  j["optimizer"] = {{"method", "nelder-mead(log beta, log C)"},
                    {"starts", fit.starts},
                    {"iterations", fit.iterations},
                    {"converged", fit.converged},
                    {"degenerate", fit.degenerate}};
  return j;
}

Json ks_json(const KsResult& r) {
  return {{"statistic", r.statistic}, {"p_value", r.p_value}, {"n", r.n}};
}

Json model_json(const ParametricModel& m) {
  return {{"margin_x", {{"rate", m.margin_x.rate()}, {"truncation", m.margin_x.truncation()}}},
          {"gap", {{"beta", m.gap.beta()}, {"C", m.gap.c()}}}};
}

ParametricModel model_from_json(const Json& j) {
  return {TruncExp(j.at("margin_x").at("rate").get<double>(),
                   j.at("margin_x").at("truncation").get<double>()),
          Gompertz(j.at("gap").at("beta").get<double>(), j.at("gap").at("C").get<double>())};
}

Json evt_fit_json(const EvtFit& fit) {
  Json j;
  j["k"] = fit.k;
  j["margin_x"] = {{"rate", fit.margin_x.rate()}, {"truncation", fit.margin_x.truncation()}};
  j["margin_y"] = {{"rate", fit.margin_y.rate()}, {"truncation", fit.margin_y.truncation()}};
  j["y_exceedance"] = fit.y_exceedance;
  j["ranks"] = {{"n", fit.ranked.n},
                {"n_observed", fit.ranked.n_observed},
                {"tie_seed", fit.ranked.tie_seed},
                {"tie_stream", fit.ranked.tie_stream},
                {"x", fit.ranked.ranks_x},
                {"y", fit.ranked.ranks_y}};
  return j;
}

EvtFit evt_fit_from_json(const Json& j) {
  EvtFit fit;
  fit.k = j.at("k").get<int>();
  fit.margin_x = TruncExp(j.at("margin_x").at("rate").get<double>(),
                          j.at("margin_x").at("truncation").get<double>());
  fit.margin_y = TruncExp(j.at("margin_y").at("rate").get<double>(),
                          j.at("margin_y").at("truncation").get<double>());
  fit.y_exceedance = j.at("y_exceedance").get<double>();
  const auto& r = j.at("ranks");
  fit.ranked.n = r.at("n").get<std::size_t>();
  fit.ranked.n_observed = r.at("n_observed").get<std::size_t>();
  fit.ranked.tie_seed = r.at("tie_seed").get<std::uint64_t>();
  fit.ranked.tie_stream = r.at("tie_stream").get<std::uint64_t>();
  fit.ranked.ranks_x = r.at("x").get<std::vector<std::int32_t>>();
  fit.ranked.ranks_y = r.at("y").get<std::vector<std::int32_t>>();
  if (fit.ranked.ranks_x.size() != fit.ranked.n || fit.ranked.ranks_y.size() != fit.ranked.n) {
    throw DomainError("EVT fit ranks do not match n");
  }
  return fit;
}

Json law_json(const AftershockLaw& law) {
  return {{"a", law.a()},
          {"b", law.b()},
          {"c", law.c()},
          {"p", law.p()},
          {"beta", law.beta()},
          {"C", law.gompertz_c()},
          {"series_sum", law.series().sum},
          {"series_cutoff_day", law.series().cutoff_day}};
}

AftershockLaw law_from_json(const Json& j) {
  return AftershockLaw(j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>(),
                       j.at("p").get<double>());
}

void write_pairs_csv(std::ostream& out, const CensoredPairs& pairs,
                     std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "# censor_threshold=" << format_number(pairs.censor_threshold()) << '\n';
  out << "x,y\n";
  for (const auto& p : pairs.pairs()) {
    out << format_number(p.x) << ',';
    if (p.y) out << format_number(*p.y);
    out << '\n';
  }
}

CensoredPairs read_pairs_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<double> threshold;
  bool header = false;
  std::vector<CensoredPair> pairs;
  auto number = [&](const std::string& s, const char* field) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw ParseError(line_no, field, "not a number: '" + s + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = csv::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string key = "censor_threshold=";
      const auto pos = t.find(key);
      if (pos != std::string::npos) {
        threshold = number(csv::trim(t.substr(pos + key.size())), "censor_threshold");
      }
      continue;
    }
    const auto f = csv::split(t);
    if (!header) {
      if (f.size() != 2 || f[0] != "x" || f[1] != "y") throw SchemaError("pairs header must be x,y");
      header = true;
      continue;
    }
    if (f.size() != 2) throw ParseError(line_no, "row", "expected 2 fields");
    CensoredPair p{number(f[0], "x"), std::nullopt};
    if (!f[1].empty()) p.y = number(f[1], "y");
    pairs.push_back(p);
  }
  if (!header) throw SchemaError("pairs file has no x,y header");
  if (!threshold) throw SchemaError("pairs file lacks a '# censor_threshold=' line");
  return CensoredPairs(std::move(pairs), *threshold);
}

void write_curves_csv(std::ostream& out, const std::string& route,
                      std::span<const LevelCurve> curves, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "route,p,x,y,adjusted\n";
  for (const auto& curve : curves) {
    for (const auto& pt : curve.points) {
      out << route << ',' << format_number(curve.probability) << ',' << format_number(pt.x) << ','
          << format_number(pt.y) << ',' << (pt.adjusted ? 1 : 0) << '\n';
    }
  }
}

}  // namespace quaketail
