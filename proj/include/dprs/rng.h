// Copyright 2026 The dprs Authors
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

// Portable, counter-based random streams.
//
// Every draw is a pure function of (key, counter), so results do not depend
// on the platform's <random> distributions or on evaluation order.

#ifndef DPRS_RNG_H_
#define DPRS_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace dprs {

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Derives a stream key from a seed and a sequence of stream labels.
std::uint64_t DeriveKey(std::uint64_t seed,
                        std::initializer_list<std::uint64_t> labels);

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t NextU64() { return Mix64(key_ + ++counter_ * kGolden); }

  // Uniform on [0, 1), 53-bit resolution.
  double Uniform01() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }
  // Uniform on the open interval (0, 1).
  double UniformOpen01() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform integer on [lo, hi], by rejection.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dprs

#endif  // DPRS_RNG_H_
