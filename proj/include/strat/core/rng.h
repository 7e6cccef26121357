// Copyright 2026 The Strat Harness Authors
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

#ifndef STRAT_CORE_RNG_H_
#define STRAT_CORE_RNG_H_

#include <cstdint>
#include <random>

namespace strat {

// splitmix64 finalizer; used to derive statistically independent child seeds
// from (master seed, counter...) tuples so that parallel workers can be
// seeded order-independently.
inline uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t DeriveSeed(uint64_t master, uint64_t a) {
  return MixSeed(master ^ MixSeed(a));
}

inline uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b) {
  return MixSeed(DeriveSeed(master, a) ^ MixSeed(b + 0x51ed2700b95148a1ULL));
}

inline uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b,
                           uint64_t c) {
  return MixSeed(DeriveSeed(master, a, b) ^ MixSeed(c + 0xd6e8feb86659fd93ULL));
}

inline std::mt19937_64 MakeRng(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace strat

#endif  // STRAT_CORE_RNG_H_
