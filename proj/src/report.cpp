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

#include "entmon/report.hpp"

#include <cstdio>

#include <openssl/evp.h>

namespace entmon {

namespace {

using nlohmann::json;

json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

// Adds `key` as a number and its fixed17 text under "fixed".
void put(json &obj, const std::string &key, double value) {
    obj[key] = value;
    obj["fixed"][key] = fixed17(value);
}

}  // namespace

std::string fixed17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::string out;
    char hex[3];
    for (unsigned int k = 0; k < len; k++) {
        std::snprintf(hex, sizeof(hex), "%02x", digest[k]);
        out += hex;
    }
    return out;
}

json to_json(const MeasureReport &r) {
    json j;
    j["measure"] = r.name;
    j["q"] = r.q;
    if (r.raw) {
        j["raw"] = complex_json(*r.raw);
        j["fixed"]["raw"] = json::array({fixed17(r.raw->real()), fixed17(r.raw->imag())});
    }
    put(j, "magnitude", r.magnitude);
    if (r.monotone) {
        put(j, "monotone", *r.monotone);
    }
    json details = json::object();
    for (const auto &[k, v] : r.details) {
        put(details, k, v);
    }
    j["details"] = details;
    j["flags"] = r.flags;
    return j;
}

json to_json(const Decomposition &d) {
    json rows = json::array();
    for (const auto &row : d.rows) {
        json entry;
        entry["selectors"] = row.spec.describe();
        put(entry, "squared_norm", row.squared_norm);
        rows.push_back(entry);
    }
    json j;
    j["q"] = d.q;
    j["rows"] = rows;
    put(j, "total", d.total);
    put(j, "completeness_deviation", std::abs(d.total - 1));
    return j;
}

json to_json(const AuditReport &r) {
    json entries = json::array();
    for (const auto &e : r.entries) {
        json entry;
        entry["check"] = e.check;
        entry["quantity"] = e.quantity;
        entry["state"] = e.state;
        entry["trials"] = e.trials;
        put(entry, "reference", e.reference);
        put(entry, "max_deviation", e.max_deviation);
        put(entry, "tolerance", e.tolerance);
        entry["pass"] = e.pass;
        entries.push_back(entry);
    }
    json config;
    config["seed"] = r.config.seed;
    config["trials"] = r.config.trials;
    put(config, "lu_tolerance", r.config.lu_tolerance);
    put(config, "slocc_tolerance", r.config.slocc_tolerance);
    put(config, "condition_cap", r.config.condition_cap);
    json j;
    j["config"] = config;
    j["rng"] = "mt19937_64 via std::seed_seq(seed, stream, trial); Box-Muller normals";
    j["entries"] = entries;
    j["passed"] = r.all_passed();
    return j;
}

json to_json(const SingletTensor &s) {
    json j;
    j["name"] = s.name;
    j["order"] = s.order;
    j["local_dim"] = s.local_dim;
    json signs = json::array();
    for (std::size_t k = 0; k < s.exchange_signs.size(); k++) {
        signs.push_back({{"copies", json::array({k, k + 1})}, {"sign", std::string(to_string(s.exchange_signs[k]))}});
    }
    j["exchange_signs"] = signs;
    put(j, "norm", norm(s.data));
    if (!s.note.empty()) {
        j["note"] = s.note;
    }
    return j;
}

std::string Report::dump() const {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["results"] = results;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

}  // namespace entmon
