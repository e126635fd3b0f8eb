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

#include <stdexcept>
#include <string>

namespace entmon {

/// Instance would exceed the dense-tensor entry cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shapes, labels or dimensions do not fit together.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file or text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A measure or projector was requested for a state it does not apply to.
struct InapplicableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// State norm violates the strict normalization policy, or is zero.
struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace entmon
