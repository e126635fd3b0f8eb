// Copyright 2026 The entmon Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace entmon {

/// Seedable pseudo-random source with a fixed, documented algorithm so that
/// the same seed reproduces the same draws on every platform.
///
/// Engine: std::mt19937_64, seeded through std::seed_seq (both fully specified
/// by the C++ standard). Uniforms take the top 53 bits of one engine output;
/// normals use the Box-Muller transform. Library distributions from <random>
/// are not used because their algorithms are implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed);
    /// Independent stream for (seed, stream, index); used to give every audit
    /// trial its own generator.
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    double normal();
    /// Circular complex Gaussian with E|z|^2 = 1.
    std::complex<double> complex_normal();

   private:
    std::mt19937_64 engine_;
};

}  // namespace entmon
