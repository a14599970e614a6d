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

#include "quaketail/decluster.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <string>

#include "quaketail/csv.hpp"
#include "quaketail/error.hpp"

namespace quaketail {

namespace {

constexpr double kMagEps = 1e-9;

}  // namespace

WindowTable::WindowTable(std::vector<WindowRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("window table has no rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (!(r.length_km > 0.0) || !(r.duration_days > 0.0) || !(r.mag_hi >= r.mag_lo)) {
      throw DomainError("window table row " + std::to_string(i + 1) + " is malformed");
    }
    if (i == 0) continue;
    const auto& prev = rows_[i - 1];
    if (std::fabs(r.mag_lo - prev.mag_lo - 0.5) > 1e-6 ||
        std::fabs(r.mag_lo - prev.mag_hi - 0.1) > 1e-6) {
      throw DomainError("window table bins must be contiguous and 0.5 wide");
    }
    if (!(r.length_km > prev.length_km) || !(r.duration_days > prev.duration_days)) {
      throw DomainError("window table L and T must increase strictly");
    }
  }
}

WindowTable WindowTable::gardner_knopoff() {
  return WindowTable({{5.0, 5.4, 40.0, 155.0},
                      {5.5, 5.9, 47.0, 290.0},
                      {6.0, 6.4, 54.0, 510.0},
                      {6.5, 6.9, 61.0, 790.0},
                      {7.0, 7.4, 70.0, 915.0},
                      {7.5, 7.9, 81.0, 960.0},
                      {8.0, 8.4, 94.0, 985.0}});
}

WindowTable WindowTable::from_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<WindowRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv::trim(line).empty() || csv::trim(line)[0] == '#') continue;
    const auto f = csv::split(line);
    if (!header_seen) {
      header_seen = true;
      if (f.size() != 4 || f[0] != "mag_lo" || f[1] != "mag_hi" || f[2] != "L_km" ||
          f[3] != "T_days") {
        throw SchemaError("window table header must be mag_lo,mag_hi,L_km,T_days");
      }
      continue;
    }
    if (f.size() != 4) throw ParseError(line_no, "row", "expected 4 fields");
    WindowRow r;
    double* dst[] = {&r.mag_lo, &r.mag_hi, &r.length_km, &r.duration_days};
    static const char* names[] = {"mag_lo", "mag_hi", "L_km", "T_days"};
    for (int i = 0; i < 4; ++i) {
      try {
        std::size_t used = 0;
        *dst[i] = std::stod(f[i], &used);
        if (used != f[i].size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError(line_no, names[i], "not a number: '" + f[i] + "'");
      }
    }
    rows.push_back(r);
  }
  return WindowTable(std::move(rows));
}

Window WindowTable::lookup(double mag) const {
  if (mag < rows_.front().mag_lo - kMagEps) {
    throw DomainError("magnitude " + std::to_string(mag) + " is below the first window bin");
  }
  const WindowRow* hit = &rows_.front();
  for (const auto& r : rows_) {
    if (mag >= r.mag_lo - kMagEps) hit = &r;
  }
  return {hit->length_km, hit->duration_days};
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) noexcept {
  constexpr double rad = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * rad;
  const double dlon = (lon2 - lon1) * rad;
  const double s1 = std::sin(0.5 * dlat);
  const double s2 = std::sin(0.5 * dlon);
  const double h = s1 * s1 + std::cos(lat1 * rad) * std::cos(lat2 * rad) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double epicentral_distance(const ShockRecord& a, const ShockRecord& b) noexcept {
  return haversine_km(a.latitude, a.longitude, b.latitude, b.longitude);
}

std::vector<MainshockEvent> decluster(const Catalog& catalog, const WindowTable& table,
                                      const DeclusterOptions& opts) {
  const auto& shocks = catalog.shocks();
  if (!std::is_sorted(shocks.begin(), shocks.end(), time_order)) {
    throw DomainError("decluster requires a time-sorted catalog");
  }
  const double min_mag = std::max(opts.min_mainshock, table.min_magnitude());

  enum class Role { kNone, kMainshock, kAftershock };
  std::vector<Role> role(shocks.size(), Role::kNone);

  // Visits every shock after `origin` inside its window.
  auto for_each_in_window = [&](std::size_t origin, auto&& visit) {
    const auto win = table.lookup(shocks[origin].magnitude);
    const double t_end = shocks[origin].time + win.duration_days;
    // Arc length is at least the latitude difference; the margin keeps the
    // cut strictly outside the window.
    const double max_dlat = win.length_km / kEarthRadiusKm * 180.0 / std::numbers::pi + 1e-9;
    for (std::size_t j = origin + 1; j < shocks.size() && shocks[j].time <= t_end; ++j) {
      if (std::abs(shocks[j].latitude - shocks[origin].latitude) > max_dlat) continue;
      if (epicentral_distance(shocks[origin], shocks[j]) <= win.length_km) visit(j);
    }
  };

  std::vector<std::size_t> mainshocks;
  for (std::size_t i = 0; i < shocks.size(); ++i) {
    if (role[i] != Role::kNone || shocks[i].magnitude < min_mag - kMagEps) continue;

    std::size_t current = i;
    for (;;) {
      std::optional<std::size_t> larger;
      for_each_in_window(current, [&](std::size_t j) {
        const double mj = shocks[j].magnitude;
        if (mj > shocks[current].magnitude + kMagEps &&
            (!larger || mj > shocks[*larger].magnitude + kMagEps)) {
          larger = j;
        }
      });
      if (!larger) break;
      current = *larger;
    }
    if (role[current] != Role::kNone) continue;

    role[current] = Role::kMainshock;
    mainshocks.push_back(current);
    for_each_in_window(current, [&](std::size_t j) {
      if (role[j] == Role::kNone) role[j] = Role::kAftershock;
    });
  }

  // Bodies are assembled in time order so the earliest mainshock wins a shock
  // that falls in overlapping windows.
  std::sort(mainshocks.begin(), mainshocks.end());
  std::vector<MainshockEvent> events;
  events.reserve(mainshocks.size());
  std::vector<bool> taken(shocks.size(), false);
  for (const std::size_t m : mainshocks) taken[m] = true;
  for (const std::size_t m : mainshocks) {
    MainshockEvent ev;
    ev.mainshock = shocks[m];
    ev.window = table.lookup(shocks[m].magnitude);
    for_each_in_window(m, [&](std::size_t j) {
      if (role[j] == Role::kAftershock && !taken[j]) {
        taken[j] = true;
        ev.aftershocks.push_back(shocks[j]);
      }
    });
    double largest = -1.0;
    for (const auto& a : ev.aftershocks) largest = std::max(largest, a.magnitude);
    if (!ev.aftershocks.empty() && largest >= opts.censor_threshold - kMagEps) {
      ev.largest_aftershock = largest;
    }
    events.push_back(std::move(ev));
  }
  return events;
}

CensoredPairs::CensoredPairs(std::vector<CensoredPair> pairs, double censor_threshold)
    : pairs_(std::move(pairs)), censor_threshold_(censor_threshold) {
  for (const auto& p : pairs_) {
    if (!std::isfinite(p.x)) throw DomainError("pair x must be finite");
    if (!p.y) continue;
    if (*p.y < censor_threshold_ - kMagEps) {
      throw DomainError("observed y below the censor threshold");
    }
    if (*p.y > p.x + kMagEps) throw DomainError("observed y exceeds its mainshock x");
    ++n_observed_;
  }
}

CensoredPairs extract_pairs(const std::vector<MainshockEvent>& events, double censor_threshold) {
  std::vector<CensoredPair> pairs;
  pairs.reserve(events.size());
  for (const auto& ev : events) {
    CensoredPair p{ev.mainshock.magnitude, std::nullopt};
    double largest = -1.0;
    for (const auto& a : ev.aftershocks) largest = std::max(largest, a.magnitude);
    if (!ev.aftershocks.empty() && largest >= censor_threshold - kMagEps) p.y = largest;
    pairs.push_back(p);
  }
  return CensoredPairs(std::move(pairs), censor_threshold);
}

}  // namespace quaketail
