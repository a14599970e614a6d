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

#include "quaketail/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_map>

#include "quaketail/csv.hpp"
#include "quaketail/error.hpp"

namespace quaketail {

namespace {

constexpr double kMsPerDay = 86'400'000.0;
constexpr double kMagnitudeSnap = 0.005;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
  int v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

[[noreturn]] void bad_time(std::string_view text) {
  throw DomainError("invalid ISO-8601 time '" + std::string(text) + "'");
}

double parse_double(std::string_view text, std::size_t line, const std::string& field) {
  const std::string s = csv::trim(text);
  if (s.empty()) throw ParseError(line, field, "empty value");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, field, "not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

void Region::validate() const {
  if (!(lat_min < lat_max) || !(lon_min < lon_max)) {
    throw DomainError("region bounds must satisfy min < max on both axes");
  }
}

bool Region::contains(double latitude, double longitude) const noexcept {
  return latitude >= lat_min && latitude <= lat_max && longitude >= lon_min &&
         longitude <= lon_max;
}

bool time_order(const ShockRecord& a, const ShockRecord& b) noexcept {
  return std::tie(a.time, a.id) < std::tie(b.time, b.id);
}

Catalog::Catalog(std::vector<ShockRecord> shocks, std::optional<Region> bounds,
                 std::optional<double> min_magnitude)
    : shocks_(std::move(shocks)), bounds_(bounds), min_magnitude_(min_magnitude) {
  std::stable_sort(shocks_.begin(), shocks_.end(), time_order);
}

std::size_t Catalog::duplicate_count() const {
  std::set<std::tuple<double, double, double, double>> seen;
  std::size_t dups = 0;
  for (const auto& s : shocks_) {
    if (!seen.emplace(s.time, s.latitude, s.longitude, s.magnitude).second) ++dups;
  }
  return dups;
}

std::optional<double> snap_magnitude(double magnitude) noexcept {
  if (!std::isfinite(magnitude)) return std::nullopt;
  const double tenths = std::round(magnitude * 10.0);
  if (std::fabs(magnitude * 10.0 - tenths) > kMagnitudeSnap * 10.0 + 1e-12) return std::nullopt;
  return tenths / 10.0;
}

double parse_iso8601(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') bad_time(text);
  const auto ys = s.substr(0, 4), ms = s.substr(5, 2), ds = s.substr(8, 2);
  if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds)) bad_time(text);

  using namespace std::chrono;
  const year_month_day ymd{year{to_int(ys)}, month{static_cast<unsigned>(to_int(ms))},
                           day{static_cast<unsigned>(to_int(ds))}};
  if (!ymd.ok()) bad_time(text);
  const long long day_count = sys_days{ymd}.time_since_epoch().count();

  long long ms_of_day = 0;
  std::string_view rest = s.substr(10);
  if (!rest.empty()) {
    if (rest[0] != 'T' && rest[0] != 't' && rest[0] != ' ') bad_time(text);
    rest.remove_prefix(1);
    if (rest.size() < 5 || rest[2] != ':') bad_time(text);
    const auto hh = rest.substr(0, 2), mm = rest.substr(3, 2);
    if (!all_digits(hh) || !all_digits(mm)) bad_time(text);
    int hours = to_int(hh), minutes = to_int(mm), seconds = 0;
    double fraction = 0.0;
    rest.remove_prefix(5);
    if (!rest.empty() && rest[0] == ':') {
      if (rest.size() < 3 || !all_digits(rest.substr(1, 2))) bad_time(text);
      seconds = to_int(rest.substr(1, 2));
      rest.remove_prefix(3);
      if (!rest.empty() && rest[0] == '.') {
        std::size_t n = 1;
        while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9') ++n;
        if (n == 1) bad_time(text);
        fraction = std::stod("0" + std::string(rest.substr(0, n)));
        rest.remove_prefix(n);
      }
    }
    if (hours > 23 || minutes > 59 || seconds > 60) bad_time(text);
    long long offset_minutes = 0;
    if (rest == "Z" || rest == "z") {
      rest = {};
    } else if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      const int sign = rest[0] == '+' ? 1 : -1;
      if (rest.size() != 6 || rest[3] != ':' || !all_digits(rest.substr(1, 2)) ||
          !all_digits(rest.substr(4, 2))) {
        bad_time(text);
      }
      offset_minutes = sign * (to_int(rest.substr(1, 2)) * 60 + to_int(rest.substr(4, 2)));
      rest = {};
    }
    if (!rest.empty()) bad_time(text);
    ms_of_day = ((hours * 60LL + minutes - offset_minutes) * 60LL + seconds) * 1000LL +
                std::llround(fraction * 1000.0);
  }
  const long long total_ms = day_count * 86'400'000LL + ms_of_day;
  return static_cast<double>(total_ms) / kMsPerDay;
}

std::string format_iso8601(double days) {
  using namespace std::chrono;
  const long long total_ms = std::llround(days * kMsPerDay);
  long long day_count = total_ms / 86'400'000LL;
  long long ms_of_day = total_ms % 86'400'000LL;
  if (ms_of_day < 0) {
    ms_of_day += 86'400'000LL;
    --day_count;
  }
  const year_month_day ymd{sys_days{std::chrono::days{day_count}}};
  const long long secs = ms_of_day / 1000, millis = ms_of_day % 1000;
  char buf[64];
  if (millis == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()), secs / 3600, (secs / 60) % 60,
                  secs % 60);
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()), secs / 3600, (secs / 60) % 60,
                  secs % 60, millis);
  }
  return buf;
}

Catalog parse_catalog(std::istream& in, const CatalogSchema& schema) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = csv::trim(line);
    if (!t.empty() && t[0] != '#') {
      header = csv::split(line);
      break;
    }
  }
  if (header.empty()) throw ParseError(line_no, "header", "empty catalog stream");

  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < header.size(); ++i) columns.emplace(csv::trim(header[i]), i);
  auto column = [&](const std::string& name) {
    const auto it = columns.find(name);
    if (it == columns.end()) throw SchemaError("mapped column '" + name + "' not found in header");
    return it->second;
  };
  const std::size_t c_time = column(schema.time);
  const std::size_t c_lat = column(schema.latitude);
  const std::size_t c_lon = column(schema.longitude);
  const std::size_t c_mag = column(schema.magnitude);
  const std::optional<std::size_t> c_depth =
      schema.depth ? std::optional(column(*schema.depth)) : std::nullopt;
  const std::optional<std::size_t> c_id =
      schema.id ? std::optional(column(*schema.id)) : std::nullopt;

  std::vector<ShockRecord> shocks;
  std::int64_t ordinal = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = csv::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = csv::split(line);
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "row", "expected " + std::to_string(header.size()) +
                                           " fields, found " + std::to_string(fields.size()));
    }
    ++ordinal;
    ShockRecord rec;
    try {
      rec.time = parse_iso8601(fields[c_time]);
    } catch (const DomainError& e) {
      throw ParseError(line_no, schema.time, e.what());
    }
    rec.latitude = parse_double(fields[c_lat], line_no, schema.latitude);
    rec.longitude = parse_double(fields[c_lon], line_no, schema.longitude);
    if (rec.latitude < -90.0 || rec.latitude > 90.0) {
      throw ParseError(line_no, schema.latitude, "latitude outside [-90, 90]");
    }
    if (rec.longitude < -180.0 || rec.longitude > 180.0) {
      throw ParseError(line_no, schema.longitude, "longitude outside [-180, 180]");
    }
    const double raw_mag = parse_double(fields[c_mag], line_no, schema.magnitude);
    const auto mag = snap_magnitude(raw_mag);
    if (!mag) throw ParseError(line_no, schema.magnitude, "magnitude is off the 0.1 grid");
    if (*mag < 0.0) throw ParseError(line_no, schema.magnitude, "negative magnitude");
    rec.magnitude = *mag;
    if (c_depth && !csv::trim(fields[*c_depth]).empty()) {
      rec.depth = parse_double(fields[*c_depth], line_no, *schema.depth);
    }
    if (c_id) {
      const std::string s = csv::trim(fields[*c_id]);
      std::int64_t id = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line_no, *schema.id, "not an integer: '" + s + "'");
      }
      rec.id = id;
    } else {
      rec.id = ordinal;
    }
    shocks.push_back(rec);
  }
  return Catalog(std::move(shocks));
}

Catalog read_catalog(const std::filesystem::path& path, const CatalogSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path.string() + "'");
  return parse_catalog(in, schema);
}

void write_catalog(std::ostream& out, const Catalog& catalog, const CatalogSchema& schema,
                   std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  std::vector<std::string> head;
  if (schema.id) head.push_back(*schema.id);
  head.insert(head.end(), {schema.time, schema.latitude, schema.longitude});
  if (schema.depth) head.push_back(*schema.depth);
  head.push_back(schema.magnitude);
  out << csv::join(head) << '\n';
  char buf[64];
  for (const auto& s : catalog.shocks()) {
    if (schema.id) out << s.id << ',';
    out << format_iso8601(s.time) << ',';
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", s.latitude, s.longitude);
    out << buf << ',';
    if (schema.depth) {
      if (s.depth) {
        std::snprintf(buf, sizeof buf, "%.17g", *s.depth);
        out << buf;
      }
      out << ',';
    }
    std::snprintf(buf, sizeof buf, "%.1f", s.magnitude);
    out << buf << '\n';
  }
}

Catalog filter_region(const Catalog& catalog, const Region& bounds, double min_magnitude) {
  bounds.validate();
  std::vector<ShockRecord> kept;
  for (const auto& s : catalog.shocks()) {
    if (bounds.contains(s.latitude, s.longitude) && s.magnitude >= min_magnitude - 1e-9) {
      kept.push_back(s);
    }
  }
  return Catalog(std::move(kept), bounds, min_magnitude);
}

}  // namespace quaketail
