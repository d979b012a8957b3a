// Copyright 2026 The ResolveKit Authors.
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

#ifndef RESOLVEKIT_RNG_H_
#define RESOLVEKIT_RNG_H_

#include <cstdint>
#include <random>

namespace resolvekit {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stateless counter-based draw: the same (seed, stream, counter) always
// yields the same word, independent of evaluation order.
constexpr std::uint64_t CounterBits(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t counter) {
  return Mix64(Mix64(seed ^ Mix64(stream)) ^ Mix64(counter + 0x632be59bd9b4e019ULL));
}

// Top 53 bits mapped to [0, 1).
constexpr double ToUnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Seed for one work item of an experiment, e.g. (method, graph, replicate).
constexpr std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a,
                                   std::uint64_t b, std::uint64_t c) {
  return base ^ Mix64(Mix64(Mix64(a) ^ b) ^ c);
}

// Sequential generator for the randomized baselines. The bounded draw is
// implemented here rather than through std::uniform_int_distribution so
// results do not depend on the standard library vendor.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double Uniform01() { return ToUnitInterval(engine_()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace resolvekit

#endif  // RESOLVEKIT_RNG_H_
