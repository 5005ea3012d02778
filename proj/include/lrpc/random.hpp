// Copyright 2026 the lrpc authors.
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

#ifndef LRPC_RANDOM_HPP_
#define LRPC_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace lrpc {

// splitmix64 finalizer. Used to derive independent child seeds from a master
// seed; the mixing is part of the reproducibility contract and must not change.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed for stream (a, b) under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
  std::uint64_t h = splitmix64(master ^ 0x243f6a8885a308d3ULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return h;
}

// Uniform integer in [0, bound) by rejection from the top 32 bits.
inline std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = (bound & (bound - 1)) == 0
                                 ? bound - 1
                                 : (std::uint64_t{2} << (63 - __builtin_clzll(bound))) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return static_cast<std::uint32_t>(v);
  }
}

}  // namespace lrpc

#endif  // LRPC_RANDOM_HPP_
