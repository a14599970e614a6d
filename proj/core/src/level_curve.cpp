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

#include "quaketail/level_curve.hpp"

#include <algorithm>
#include <cmath>

namespace quaketail {

void make_non_increasing(LevelCurve& curve) {
  auto& pts = curve.points;
  std::stable_sort(pts.begin(), pts.end(),
                   [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  struct Block {
    double sum;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (const auto& p : pts) {
    blocks.push_back({p.y, 1});
    while (blocks.size() > 1) {
      const auto& last = blocks.back();
      const auto& prev = blocks[blocks.size() - 2];
      if (prev.sum / prev.count >= last.sum / last.count) break;
      blocks[blocks.size() - 2] = {prev.sum + last.sum, prev.count + last.count};
      blocks.pop_back();
    }
  }
  std::size_t i = 0;
  for (const auto& b : blocks) {
    const double level = b.sum / b.count;
    for (std::size_t j = 0; j < b.count; ++j, ++i) {
      if (b.count > 1 && std::fabs(pts[i].y - level) > 1e-12) {
        pts[i].y = level;
        pts[i].adjusted = true;
      }
    }
  }
}

}  // namespace quaketail
