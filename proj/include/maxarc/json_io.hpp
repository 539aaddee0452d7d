/*
   Copyright 2026 The maxarc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXARC_JSON_IO_HPP
#define MAXARC_JSON_IO_HPP

// Serialization of reports. Needs nlohmann/json (json.hpp) on the include path.

#include <sstream>
#include <string>

#include "json.hpp"
#include "maxarc/analysis.hpp"
#include "maxarc/charsum.hpp"

namespace maxarc {

using Json = nlohmann::ordered_json;

/// {"n": n, "counts": {"i": "A_i", ...}} with nonzero A_i only, as decimal strings.
inline Json to_json(const WeightDistribution& w) {
    Json counts = Json::object();
    for (std::size_t i = 0; i < w.counts.size(); ++i) {
        if (w.counts[i] != 0) counts[std::to_string(i)] = w.counts[i].str();
    }
    return Json{{"n", w.n}, {"counts", counts}};
}

inline WeightDistribution weight_distribution_from_json(const Json& j) {
    WeightDistribution w(j.at("n").get<std::size_t>());
    for (const auto& [key, value] : j.at("counts").items()) {
        const std::size_t i = std::stoul(key);
        if (i > w.n) throw std::invalid_argument("weight " + key + " exceeds the length");
        w.counts[i] = BigInt(value.get<std::string>());
    }
    return w;
}

inline Json to_json(const SpherePackingVerdict& v) {
    return Json{{"holds_at_d", v.holds_at_d},
                {"fails_at_d_plus_1", v.fails_at_d_plus_1},
                {"distance_optimal", v.distance_optimal},
                {"perfect", v.perfect}};
}

inline Json to_json(const StageRecord& s) {
    Json j{{"name", s.name}, {"field", s.field}, {"n", s.n}, {"k", s.k}};
    j["d"] = s.d ? Json(*s.d) : Json(nullptr);
    j["d_method"] = s.d_method;
    j["weight_distribution"] = s.distribution ? to_json(*s.distribution) : Json("not enumerated");
    j["verdict"] = s.verdict ? to_json(*s.verdict) : Json(nullptr);
    return j;
}

inline Json to_json(const Check& c) {
    return Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
}

inline Json to_json(const RateComparison& r) {
    const bool d = r.family == Family::denniston;
    Json j{{d ? "R1" : "R1'", r.r1.str()}, {d ? "R2" : "R2'", r.r2.str()}};
    if (r.r2_exceeds_r1) j["R2_exceeds_R1"] = *r.r2_exceeds_r1;
    return j;
}

inline Json to_json(const Provenance& p) {
    Json j{{"family", family_name(p.family)}, {"m", p.m}};
    j[p.family == Family::denniston ? "s" : "h"] = p.parameter;
    j["modulus"] = p.modulus;
    if (p.beta) j["beta"] = *p.beta;
    if (p.family == Family::denniston) {
        j["subgroup_basis"] = p.subgroup_basis;
        j["subgroup"] = p.subgroup;
    }
    j["expansion_basis"] = p.expansion_basis;
    j["column_order"] = p.column_order;
    return j;
}

inline Json to_json(const CodeReport& r) {
    Json j{{"parameters", to_json(r.provenance)}, {"verdicts_enabled", r.verdicts_enabled}};
    j["diagnostics"] = r.diagnostics;
    Json stages = Json::array();
    for (const auto& s : r.stages) stages.push_back(to_json(s));
    j["stages"] = stages;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    j["rates"] = to_json(r.rate);
    j["all_pass"] = r.all_pass();
    if (r.timing) j["timing_seconds"] = *r.timing;
    return j;
}

inline Json to_json(const CharSumReport& r) {
    return Json{{"m", r.m},
                {"h", r.h},
                {"e", r.e},
                {"a", r.a.bits},
                {"b", r.b.bits},
                {"brute_value", r.brute_value},
                {"predicted_set", r.predicted.values},
                {"ambiguous", r.predicted.ambiguous},
                {"branch", r.predicted.branch},
                {"agrees", r.agrees},
                {"N", r.count_n},
                {"N_identity", r.count_identity}};
}

inline Json to_json(const SuiteResult& s) {
    Json checks = Json::array();
    Json failures = Json::array();
    for (const auto& c : s.checks) {
        checks.push_back(to_json(c));
        if (!c.pass) failures.push_back(to_json(c));
    }
    return Json{{"checks", checks}, {"failures", failures}, {"notes", s.notes}};
}

// ---------------------------------------------------------------------------
// Markdown views (lossy)

inline std::string to_markdown(const CodeReport& r) {
    std::ostringstream out;
    const auto& p = r.provenance;
    out << "## " << family_name(p.family) << " m=" << p.m << (p.family == Family::denniston ? " s=" : " h=")
        << p.parameter << " modulus=" << p.modulus << "\n\n";
    for (const auto& d : r.diagnostics) out << "> " << d << "\n\n";
    out << "| code | field | n | k | d | method | sphere packing |\n|---|---|---|---|---|---|---|\n";
    for (const auto& s : r.stages) {
        std::string verdict = "-";
        if (s.verdict) {
            verdict = s.verdict->perfect ? "perfect" : s.verdict->distance_optimal ? "distance-optimal" : "not certified";
        }
        out << "| " << s.name << " | " << s.field << " | " << s.n << " | " << s.k << " | "
            << (s.d ? std::to_string(*s.d) : "?") << " | " << s.d_method << " | " << verdict << " |\n";
    }
    for (const auto& s : r.stages) {
        if (s.distribution) out << "\n" << s.name << ": " << s.distribution->polynomial() << "\n";
    }
    out << "\n| check | expected | actual | status |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
        out << "| " << c.name << " | " << c.expected << " | " << c.actual << " | " << (c.pass ? "pass" : "FAIL") << " |\n";
    }
    out << "\nrates: " << to_json(r.rate).dump() << "\n";
    return out.str();
}

inline std::string to_markdown(const SuiteResult& s) {
    std::ostringstream out;
    out << "| check | expected | actual | status |\n|---|---|---|---|\n";
    for (const auto& c : s.checks) {
        out << "| " << c.name << " | " << c.expected << " | " << c.actual << " | " << (c.pass ? "pass" : "FAIL") << " |\n";
    }
    for (const auto& n : s.notes) out << "\nnote: " << n << "\n";
    return out.str();
}

}  // namespace maxarc

#endif  // MAXARC_JSON_IO_HPP
