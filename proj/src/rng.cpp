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

#include "entmon/rng.hpp"

#include <cmath>
#include <numbers>

namespace entmon {

namespace {

std::mt19937_64 seeded(std::initializer_list<std::uint64_t> words) {
    std::vector<std::uint32_t> parts;
    for (auto w : words) {
        parts.push_back(static_cast<std::uint32_t>(w));
        parts.push_back(static_cast<std::uint32_t>(w >> 32));
    }
    std::seed_seq seq(parts.begin(), parts.end());
    return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seeded({seed})) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) : engine_(seeded({seed, stream, index})) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() { return complex_normal().real() * std::numbers::sqrt2; }

std::complex<double> Rng::complex_normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-std::log(u1));
    double theta = 2 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace entmon
