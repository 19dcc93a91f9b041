// Copyright 2025 The cvdvsim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace cvdv {

/// Seedable random stream. All sampling goes through uniform() so that a
/// fixed seed gives byte-identical outputs on any platform (the mt19937_64
/// sequence is pinned by the standard; the double conversion is ours).
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t raw() { return gen_(); }

    /// Derived stream for shot number `i`, independent of draws taken so far.
    static Rng for_shot(std::uint64_t seed, std::uint64_t i) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ull * (i + 1)));
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace cvdv
