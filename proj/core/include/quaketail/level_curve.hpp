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

#include <vector>

namespace quaketail {

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  // Set when the point was moved by the monotone clean-up pass and no longer
  // solves the level equation exactly.
  bool adjusted = false;
};

// Points (x, y) with P(X > x, Y > y) = probability.
struct LevelCurve {
  double probability = 0.0;
  std::vector<CurvePoint> points;
  // Grid values where the level is not attainable.
  std::vector<double> omitted;
};

// Pool-adjacent-violators fit making y non-increasing in x. Points whose y
// changes are flagged as adjusted.
void make_non_increasing(LevelCurve& curve);

}  // namespace quaketail
