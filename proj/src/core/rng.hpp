// Copyright 2026 the sl2sr authors
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

#ifndef SL2SR_CORE_RNG_HPP
#define SL2SR_CORE_RNG_HPP

#include <cstdint>
#include <random>

namespace sl2sr {

// Deterministic uniform sampler.  The double is built from the raw engine
// output instead of std::uniform_real_distribution, whose mapping is
// implementation-defined; verify reports must be reproducible per seed
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1) with 53-bit resolution
  double next01() { return (double)(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sl2sr

#endif
