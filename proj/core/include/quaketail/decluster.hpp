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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "quaketail/catalog.hpp"

namespace quaketail {

// One magnitude bin of a space-time window law.
struct WindowRow {
  double mag_lo = 0.0;
  double mag_hi = 0.0;
  double length_km = 0.0;
  double duration_days = 0.0;
};

struct Window {
  double length_km = 0.0;
  double duration_days = 0.0;
};

// Magnitude-dependent aftershock windows: contiguous 0.5-wide bins with
// strictly increasing L and T.
class WindowTable {
 public:
  // Throws DomainError if the rows violate the table invariants.
  explicit WindowTable(std::vector<WindowRow> rows);

  // Gardner & Knopoff (1974) windows for M 5.0 to 8.4.
  static WindowTable gardner_knopoff();

  // CSV with header mag_lo,mag_hi,L_km,T_days.
  static WindowTable from_csv(std::istream& in);

  const std::vector<WindowRow>& rows() const noexcept { return rows_; }
  double min_magnitude() const noexcept { return rows_.front().mag_lo; }

  // Window of the bin containing mag; magnitudes above the last bin use the
  // last row. Throws DomainError below the first bin.
  Window lookup(double mag) const;

 private:
  std::vector<WindowRow> rows_;
};

inline constexpr double kEarthRadiusKm = 6371.0;

// Great-circle distance in km between two epicentres (haversine).
double haversine_km(double lat1, double lon1, double lat2, double lon2) noexcept;
double epicentral_distance(const ShockRecord& a, const ShockRecord& b) noexcept;

struct MainshockEvent {
  ShockRecord mainshock;
  std::vector<ShockRecord> aftershocks;
  // Largest aftershock magnitude when it reaches the censor threshold.
  std::optional<double> largest_aftershock;
  Window window;
};

struct DeclusterOptions {
  double min_mainshock = 5.0;
  double censor_threshold = 4.0;
};

// Window declustering. Each shock of magnitude >= min_mainshock, taken in
// time order, scans its forward window (time in [t, t + T], distance <= L).
// If a strictly larger shock is found, the scan restarts from the largest
// one (earliest on ties). A shock whose window holds nothing larger becomes
// a mainshock and claims every unclaimed shock in the window. Shocks already
// claimed, or already mainshocks, never start a new event.
//
// Events come back in mainshock time order. Throws DomainError if the
// catalog is not time-sorted.
std::vector<MainshockEvent> decluster(const Catalog& catalog,
                                      const WindowTable& table = WindowTable::gardner_knopoff(),
                                      const DeclusterOptions& opts = {});

// (mainshock, largest aftershock) with the aftershock left-censored.
struct CensoredPair {
  double x = 0.0;
  std::optional<double> y;  // nullopt when censored

  friend bool operator==(const CensoredPair&, const CensoredPair&) = default;
};

// Pairs sharing one censor threshold. Observed y satisfy
// censor_threshold <= y <= x.
class CensoredPairs {
 public:
  CensoredPairs() = default;
  // Throws DomainError if an observed y is below the threshold or above x.
  CensoredPairs(std::vector<CensoredPair> pairs, double censor_threshold);

  const std::vector<CensoredPair>& pairs() const noexcept { return pairs_; }
  double censor_threshold() const noexcept { return censor_threshold_; }
  std::size_t n() const noexcept { return pairs_.size(); }
  std::size_t n_observed() const noexcept { return n_observed_; }
  bool empty() const noexcept { return pairs_.empty(); }

  friend bool operator==(const CensoredPairs&, const CensoredPairs&) = default;

 private:
  std::vector<CensoredPair> pairs_;
  double censor_threshold_ = 4.0;
  std::size_t n_observed_ = 0;
};

CensoredPairs extract_pairs(const std::vector<MainshockEvent>& events,
                            double censor_threshold = 4.0);

}  // namespace quaketail
