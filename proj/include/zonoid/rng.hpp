// Copyright (c) 2026 The zonoid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Counter-based random stream. The i-th draw of a stream is a pure function
/// of (key, i), so chunked parallel sampling reproduces the serial stream.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace zonoid {

  constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Independent sub-stream key for (seed, index).
  constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ull));
  }

  class CounterStream {
   public:
    explicit constexpr CounterStream(std::uint64_t key) noexcept : key_(splitmix64(key)) {}

    constexpr std::uint64_t next_u64() noexcept { return splitmix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal() noexcept {
      if (has_spare_) {
        has_spare_ = false;
        return spare_;
      }
      const double r = std::sqrt(-2.0 * std::log(uniform()));
      const double theta = 2.0 * std::numbers::pi * uniform();
      spare_ = r * std::sin(theta);
      has_spare_ = true;
      return r * std::cos(theta);
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
  };

} // namespace zonoid
