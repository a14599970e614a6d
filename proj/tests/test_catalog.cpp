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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quaketail/catalog.hpp"
#include "quaketail/error.hpp"
#include "quaketail/rng.hpp"

namespace quaketail {
namespace {

Catalog parse(const std::string& text, const CatalogSchema& schema = {}) {
  std::istringstream in(text);
  return parse_catalog(in, schema);
}

const char* kHeader = "time,latitude,longitude,depth,magnitude\n";

TEST(ParseCatalog, SingleRow) {
  const auto c = parse(std::string(kHeader) + "1999-08-17T00:01:39Z,40.76,29.97,17.0,7.6\n");
  ASSERT_EQ(c.size(), 1u);
  const auto& s = c.shocks()[0];
  EXPECT_DOUBLE_EQ(s.magnitude, 7.6);
  EXPECT_DOUBLE_EQ(s.latitude, 40.76);
  EXPECT_DOUBLE_EQ(s.longitude, 29.97);
  ASSERT_TRUE(s.depth.has_value());
  EXPECT_DOUBLE_EQ(*s.depth, 17.0);
  EXPECT_NEAR(s.time, 10820.0 + (60.0 + 39.0) / 86400.0, 1e-9);
}

TEST(ParseCatalog, SortsByTime) {
  const auto c = parse(std::string(kHeader) +
                       "2000-01-02,40,30,,5.0\n"
                       "2000-01-01,40,30,,6.0\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_LT(c.shocks()[0].time, c.shocks()[1].time);
  EXPECT_DOUBLE_EQ(c.shocks()[0].magnitude, 6.0);
}

TEST(ParseCatalog, BadMagnitudeNamesLine) {
  try {
    parse(std::string(kHeader) + "2000-01-01,40,30,,abc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.field(), "magnitude");
  }
}

TEST(ParseCatalog, OffGridMagnitudeRejectedNearGridSnapped) {
  EXPECT_THROW(parse(std::string(kHeader) + "2000-01-01,40,30,,5.03\n"), ParseError);
  const auto c = parse(std::string(kHeader) + "2000-01-01,40,30,,5.0999999\n");
  EXPECT_DOUBLE_EQ(c.shocks()[0].magnitude, 5.1);
}

TEST(ParseCatalog, CoordinateRange) {
  EXPECT_THROW(parse(std::string(kHeader) + "2000-01-01,91,30,,5.0\n"), ParseError);
  EXPECT_THROW(parse(std::string(kHeader) + "2000-01-01,40,-181,,5.0\n"), ParseError);
  EXPECT_THROW(parse(std::string(kHeader) + "2000-01-01,40,30,,-1.0\n"), ParseError);
}

TEST(ParseCatalog, MissingColumnIsSchemaError) {
  CatalogSchema schema;
  schema.magnitude = "mag";
  EXPECT_THROW(parse(std::string(kHeader) + "2000-01-01,40,30,,5.0\n", schema), SchemaError);
}

TEST(ParseCatalog, CustomSchemaAndIds) {
  CatalogSchema schema;
  schema.time = "origin";
  schema.latitude = "lat";
  schema.longitude = "lon";
  schema.magnitude = "mw";
  schema.depth = std::nullopt;
  schema.id = "eid";
  const auto c = parse(
      "eid,mw,lon,lat,origin,extra\n"
      "9,5.5,29,40,2000-01-01T00:00:00Z,x\n"
      "3,5.5,29,40,2000-01-01T00:00:00Z,y\n",
      schema);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.shocks()[0].id, 3);
  EXPECT_EQ(c.shocks()[1].id, 9);
  EXPECT_FALSE(c.shocks()[0].depth.has_value());
  EXPECT_EQ(c.duplicate_count(), 1u);
}

TEST(ParseCatalog, CommentsSkipped) {
  const auto c = parse(std::string("# made by hand\n") + kHeader + "# mid\n2000-01-01,40,30,,5.0\n");
  EXPECT_EQ(c.size(), 1u);
  std::ostringstream out;
  const std::vector<std::string> notes = {"seed=1"};
  write_catalog(out, c, {}, notes);
  EXPECT_EQ(out.str().rfind("# seed=1\n", 0), 0u);
  EXPECT_EQ(parse(out.str()), c);
}

TEST(Iso8601, Formats) {
  EXPECT_DOUBLE_EQ(parse_iso8601("1970-01-01"), 0.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("1970-01-02T00:00:00Z"), 1.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("1970-01-01T03:00:00+03:00"), 0.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("1970-01-01 12:00:00"), 0.5);
  EXPECT_NEAR(parse_iso8601("1970-01-01T00:00:00.250Z"), 0.25 / 86400.0, 1e-15);
  EXPECT_LT(parse_iso8601("1965-01-01"), 0.0);
  EXPECT_THROW(parse_iso8601("1999-13-01"), DomainError);
  EXPECT_THROW(parse_iso8601("yesterday"), DomainError);
}

TEST(Iso8601, RoundTripMilliseconds) {
  RngStream rng(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double ms = std::floor(rng.uniform(-2e12, 2e12));
    const double days = ms / 86400000.0;
    const std::string text = format_iso8601(days);
    EXPECT_NEAR(parse_iso8601(text) * 86400000.0, ms, 1e-3) << text;
  }
  EXPECT_EQ(format_iso8601(0.0), "1970-01-01T00:00:00Z");
  EXPECT_EQ(format_iso8601(0.25 / 86400.0), "1970-01-01T00:00:00.250Z");
}

TEST(SnapMagnitude, Grid) {
  EXPECT_EQ(snap_magnitude(4.0000001), 4.0);
  EXPECT_EQ(snap_magnitude(4.004), 4.0);
  EXPECT_FALSE(snap_magnitude(4.006).has_value());
  EXPECT_FALSE(snap_magnitude(4.05).has_value());
}

Catalog random_catalog(RngStream& rng, int n) {
  std::vector<ShockRecord> shocks;
  for (int i = 0; i < n; ++i) {
    ShockRecord s;
    s.id = i;
    s.time = std::floor(rng.uniform(-20000.0, 20000.0) * 86400000.0) / 86400000.0;
    s.latitude = rng.uniform(-90.0, 90.0);
    s.longitude = rng.uniform(-180.0, 180.0);
    if (rng.uniform() < 0.5) s.depth = std::round(rng.uniform(0.0, 700.0) * 10.0) / 10.0;
    s.magnitude = static_cast<double>(rng.below(90)) / 10.0;
    shocks.push_back(s);
  }
  return Catalog(std::move(shocks));
}

TEST(CatalogProperty, SerializeParseRoundTrip) {
  CatalogSchema schema;
  schema.id = "id";
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RngStream rng(seed, 0);
    const auto c = random_catalog(rng, 50);
    std::ostringstream out;
    write_catalog(out, c, schema);
    const auto back = parse(out.str(), schema);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& a = c.shocks()[i];
      const auto& b = back.shocks()[i];
      EXPECT_EQ(a.id, b.id);
      EXPECT_NEAR(a.time, b.time, 1e-9);
      EXPECT_EQ(a.latitude, b.latitude);
      EXPECT_EQ(a.longitude, b.longitude);
      EXPECT_EQ(a.depth, b.depth);
      EXPECT_EQ(a.magnitude, b.magnitude);
    }
    std::ostringstream again;
    write_catalog(again, back, schema);
    EXPECT_EQ(again.str(), out.str());
    EXPECT_EQ(parse(again.str(), schema), back);
  }
}

TEST(FilterRegion, Examples) {
  const Region box{39.0, 42.0, 26.0, 40.0};
  auto one = [](double lat, double lon, double m) {
    ShockRecord s;
    s.latitude = lat;
    s.longitude = lon;
    s.magnitude = m;
    return Catalog({s});
  };
  EXPECT_EQ(filter_region(one(40.0, 30.0, 5.1), box, 4.0).size(), 1u);
  EXPECT_EQ(filter_region(one(38.9, 30.0, 6.0), box, 4.0).size(), 0u);
  EXPECT_EQ(filter_region(one(40.0, 30.0, 3.9), box, 4.0).size(), 0u);
  EXPECT_EQ(filter_region(one(42.0, 40.0, 4.0), box, 4.0).size(), 1u);
  EXPECT_THROW(filter_region(one(40.0, 30.0, 5.0), Region{42.0, 39.0, 26.0, 40.0}, 4.0),
               DomainError);
}

TEST(FilterRegionProperty, IdempotentSubset) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RngStream rng(seed, 1);
    const auto c = random_catalog(rng, 200);
    const double a = rng.uniform(-90.0, 0.0), b = rng.uniform(0.0, 90.0);
    const double lo = rng.uniform(-180.0, 0.0), hi = rng.uniform(0.0, 180.0);
    const Region box{a, b, lo, hi};
    const double floor = static_cast<double>(rng.below(60)) / 10.0;
    const auto once = filter_region(c, box, floor);
    const auto twice = filter_region(once, box, floor);
    EXPECT_EQ(once, twice);
    EXPECT_LE(once.size(), c.size());
    for (const auto& s : once.shocks()) {
      EXPECT_NE(std::find(c.shocks().begin(), c.shocks().end(), s), c.shocks().end());
      EXPECT_TRUE(box.contains(s.latitude, s.longitude));
      EXPECT_GE(s.magnitude, floor);
    }
    ASSERT_TRUE(once.bounds().has_value());
    EXPECT_EQ(*once.bounds(), box);
    EXPECT_EQ(once.min_magnitude(), floor);
  }
}

}  // namespace
}  // namespace quaketail
