// Copyright 2026 The Sanitizer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SANITIZER_RNG_HPP_
#define SANITIZER_RNG_HPP_

#include <array>
#include <cstdint>
#include <vector>

namespace sanitizer {

// Stream-id domains. Every component derives its streams as
// (domain << 48) | index, so concurrent workers get disjoint counter
// prefixes without coordination.
enum class RngDomain : std::uint64_t {
  kDataGen = 1,
  kSplit = 2,
  kNetworkInit = 3,
  kTraining = 4,
  kMechanism = 5,
  kEval = 6,
  kSweep = 7,
  kTest = 15,
};

constexpr std::uint64_t stream_id(RngDomain domain, std::uint64_t index) {
  return (static_cast<std::uint64_t>(domain) << 48) | index;
}

/// Counter-based random stream (Philox-4x32-10). A stream is fully
/// determined by (seed, stream-id): identical pairs replay the identical
/// sample sequence, distinct stream-ids give statistically independent
/// streams, which is what lets data generation and sweeps shard freely.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);
  RngStream(std::uint64_t seed, RngDomain domain, std::uint64_t index)
      : RngStream(seed, stream_id(domain, index)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Unbiased draw from [0, bound).
  std::uint64_t next_below(std::uint64_t bound);
  /// 53-bit uniform in [0, 1).
  double next_double();
  /// Standard normal via Box-Muller (second value cached).
  double next_gaussian();
  /// Lap(0, scale) via inverse CDF on uniform(-1/2, 1/2).
  double next_laplace(double scale);

  std::vector<double> gaussian_vector(std::size_t n);
  std::vector<double> laplace_vector(double scale, std::size_t n);

  /// Fisher-Yates shuffle of [0, n) indices.
  std::vector<std::size_t> permutation(std::size_t n);
  /// Weighted category draw; weights need not be normalized.
  std::size_t next_category(const std::vector<double>& weights);

 private:
  std::array<std::uint32_t, 4> next_block();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // exhausted
  bool have_spare_gaussian_ = false;
  double spare_gaussian_ = 0.0;
};

}  // namespace sanitizer

#endif  // SANITIZER_RNG_HPP_
