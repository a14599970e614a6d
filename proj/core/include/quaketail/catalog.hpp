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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <span>
#include <vector>

namespace quaketail {

// Closed latitude/longitude box in degrees.
struct Region {
  double lat_min = -90.0;
  double lat_max = 90.0;
  double lon_min = -180.0;
  double lon_max = 180.0;

  // Throws DomainError unless min < max on both axes.
  void validate() const;
  bool contains(double latitude, double longitude) const noexcept;

  friend bool operator==(const Region&, const Region&) = default;
};

struct ShockRecord {
  std::int64_t id = 0;
  double time = 0.0;  // fractional days since 1970-01-01T00:00Z
  double latitude = 0.0;
  double longitude = 0.0;
  std::optional<double> depth;  // km
  double magnitude = 0.0;       // on the 0.1 grid

  friend bool operator==(const ShockRecord&, const ShockRecord&) = default;
};

// Orders by time, then id.
bool time_order(const ShockRecord& a, const ShockRecord& b) noexcept;

// Column names for each field. depth and id are optional; when mapped they
// must be present in the header.
struct CatalogSchema {
  std::string time = "time";
  std::string latitude = "latitude";
  std::string longitude = "longitude";
  std::string magnitude = "magnitude";
  std::optional<std::string> depth = std::string("depth");
  std::optional<std::string> id;
};

// An immutable, time-sorted set of shocks together with the filters that
// were applied to it.
class Catalog {
 public:
  Catalog() = default;
  // Sorts the shocks by (time, id).
  explicit Catalog(std::vector<ShockRecord> shocks, std::optional<Region> bounds = std::nullopt,
                   std::optional<double> min_magnitude = std::nullopt);

  const std::vector<ShockRecord>& shocks() const noexcept { return shocks_; }
  const std::optional<Region>& bounds() const noexcept { return bounds_; }
  const std::optional<double>& min_magnitude() const noexcept { return min_magnitude_; }
  std::size_t size() const noexcept { return shocks_.size(); }
  bool empty() const noexcept { return shocks_.empty(); }

  // Rows sharing (time, latitude, longitude, magnitude) with an earlier row.
  // Duplicates are kept; this only reports them.
  std::size_t duplicate_count() const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<ShockRecord> shocks_;
  std::optional<Region> bounds_;
  std::optional<double> min_magnitude_;
};

// Snaps a magnitude to the 0.1 grid if it lies within 0.005 of it.
std::optional<double> snap_magnitude(double magnitude) noexcept;

// ISO-8601 date or date-time ("1999-08-17", "1999-08-17T00:01:39Z",
// "1999-08-17 00:01:39.250+03:00") to fractional days since the Unix epoch.
// Sub-second parts are rounded to the millisecond.
double parse_iso8601(std::string_view text);

// Inverse of parse_iso8601 at millisecond resolution, always in UTC ("Z").
std::string format_iso8601(double days);

// Blank lines and lines starting with '#' are skipped.
Catalog parse_catalog(std::istream& in, const CatalogSchema& schema = {});
Catalog read_catalog(const std::filesystem::path& path, const CatalogSchema& schema = {});

// Writes the catalog with the given column names; id and depth columns are
// written when the schema maps them.
void write_catalog(std::ostream& out, const Catalog& catalog, const CatalogSchema& schema = {},
                   std::span<const std::string> comments = {});

// Keeps the shocks inside the closed box with magnitude >= min_magnitude.
Catalog filter_region(const Catalog& catalog, const Region& bounds, double min_magnitude);

}  // namespace quaketail
