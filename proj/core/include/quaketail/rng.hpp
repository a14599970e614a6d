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

#include <array>
#include <cstdint>

namespace quaketail {

// Counter-based random stream built on Philox4x32-10 (Salmon, Moraes, Dror
// and Shaw, SC'11). The 64-bit seed is the Philox key; the 128-bit counter
// holds a 64-bit block index (low words) and the 64-bit stream id (high
// words). Streams with different ids never share a counter value, so they are
// independent by construction, and the output depends on nothing but
// (seed, stream, number of draws so far).
//
// Algorithm version: kRngAlgorithm. Changing the block layout or the
// double conversion below requires bumping it.
class RngStream {
 public:
  static constexpr const char* kRngAlgorithm = "philox4x32-10/v1";

  RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  // Number of 64-bit words consumed so far.
  std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next_u64() noexcept;

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() noexcept;

  // Uniform on (lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) noexcept;

  // Standard exponential by inversion.
  double exponential() noexcept;

  // Poisson variate. Inversion for mean < 10, PTRS (Hormann 1993) otherwise.
  std::uint64_t poisson(double mean) noexcept;

  // Raw Philox4x32-10 block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> counter,
                                             std::array<std::uint32_t, 2> key) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int used_ = 2;
  std::uint64_t draws_ = 0;
};

}  // namespace quaketail
