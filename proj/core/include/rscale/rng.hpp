// Copyright 2026 The rscale Authors
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
#include <limits>

namespace rscale {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
/// easy as 1, 2, 3"). Pure: the same counter and key always give the same block.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer, used to decorrelate derived stream identifiers.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based random stream.
///
/// The key is the 64-bit seed; the 128-bit Philox counter is the pair
/// (block counter, stream id). Two streams with the same seed and stream id
/// produce bit-identical output; streams with different ids never share a
/// counter block. A stream must not be shared between concurrent callers.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  /// Number of 128-bit blocks consumed so far.
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  std::uint64_t operator()() noexcept { return next_u64(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept {
    return std::numeric_limits<std::uint64_t>::max();
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }
  /// Unit-rate exponential.
  double exponential() noexcept;
  /// Standard normal (Box-Muller, one variate per call).
  double normal() noexcept;
  /// Uniform integer in [0, n), unbiased (Lemire's multiply-shift rejection).
  std::uint64_t uniform_index(std::uint64_t n) noexcept;

  /// Child stream with the same seed and a stream id derived from this
  /// stream's id and `child`. Independent of how far this stream has advanced.
  RngStream substream(std::uint64_t child) const noexcept {
    return RngStream(seed_, derive_stream_id(stream_id_, child));
  }

  static std::uint64_t derive_stream_id(std::uint64_t parent, std::uint64_t child) noexcept {
    return mix64(mix64(parent) ^ (child * 0xd1b54a32d192ed03ull + 0x8bb84b93962eacc9ull));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace rscale
