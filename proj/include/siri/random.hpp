// Copyright 2026 The siri-bandits Authors.
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

// Counter-based random streams.
//
// A Stream is addressed by (key, stream_id): the key is the 64-bit master
// seed and the stream id is a pair of 32-bit words, typically (budget,
// replication). The Philox4x32-10 block function maps the 128-bit counter
// {block_lo, block_hi, id_lo, id_hi} to four output words, so distinct ids
// never share a block and any replication can be regenerated on its own.

#ifndef SIRI_RANDOM_HPP_
#define SIRI_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace siri {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Philox4x32 with 10 rounds (Salmon et al., Random123).
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

struct StreamId {
  std::uint32_t hi = 0;
  std::uint32_t lo = 0;

  friend bool operator==(const StreamId&, const StreamId&) = default;
};

class Stream {
 public:
  using result_type = std::uint64_t;

  Stream() = default;
  Stream(std::uint64_t seed, StreamId id) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform on (0, 1); never returns 0.
  double uniform_open() noexcept;
  double normal() noexcept;
  // Marsaglia-Tsang; shape > 0.
  double gamma(double shape) noexcept;
  bool bernoulli(double p) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  StreamId id() const noexcept { return id_; }
  std::uint64_t blocks_used() const noexcept { return block_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_ = 0;
  StreamId id_{};
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int cursor_ = 4;  // index into buffer_ in 32-bit words; 4 means empty
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace siri

#endif  // SIRI_RANDOM_HPP_
