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

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "entmon/audit.hpp"
#include "entmon/measures.hpp"
#include "entmon/projectors.hpp"
#include "entmon/singlets.hpp"

namespace entmon {

inline constexpr std::string_view kToolName = "entmon";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// 17 significant digits in exponent form, e.g. "5.0000000000000000e-01".
std::string fixed17(double x);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

// Numeric fields are written twice: as JSON numbers (shortest round-trip
// form) and as fixed17 strings under "fixed".
nlohmann::json to_json(const MeasureReport &r);
nlohmann::json to_json(const Decomposition &d);
nlohmann::json to_json(const AuditReport &r);
nlohmann::json to_json(const SingletTensor &s);

/// Envelope shared by every CLI command.
struct Report {
    std::vector<std::string> command;
    std::string input_digest;
    nlohmann::json results = nlohmann::json::array();
    std::vector<std::string> warnings;

    /// Pretty-printed JSON followed by a newline.
    std::string dump() const;
};

}  // namespace entmon
