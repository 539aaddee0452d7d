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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "maxarc/maxarc.hpp"

namespace {

using namespace maxarc;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

// Runtime limits in seconds, one per criterion.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 5.0;
constexpr double kLimit3 = 600.0;
constexpr double kLimit4 = 5.0;
constexpr double kLimit5 = 300.0;
constexpr double kLimit7 = 120.0;

ReportOptions options() {
    ReportOptions o;
    o.enumeration.threads = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

std::string params_of(const StageRecord* s) { return s ? detail::params(s->n, s->k, s->d) : "missing"; }

bool optimal(const StageRecord* s) { return s && s->verdict && s->verdict->distance_optimal; }

void require_checks(Outcome& o, const CodeReport& r, const std::string& label) {
    for (const auto& c : r.checks) o.require(c.pass, label + " " + c.name + " expected " + c.expected + " got " + c.actual);
}

// Reports built in criteria 1-5, reused by 2, 6, 8 and 9. Criterion 1 times the full
// report, so its limit also bounds the work checked by criterion 2.
struct Built {
    std::vector<std::pair<std::string, CodeReport>> reports;
};

Outcome criterion1(Built& b) {
    Outcome o;
    const Field f = Field::build(5, 37);
    const CodeReport r = denniston_report(make_denniston_spec(f, 3), options());
    const StageRecord* ca = r.stage("C(A)");
    o.require(params_of(ca) == "[232, 3, 224]", "C(A) parameters " + params_of(ca));
    const std::string poly = ca && ca->distribution ? ca->distribution->polynomial() : "none";
    o.require(poly == "1 + 29667z^224 + 3100z^232", "enumerator " + poly);
    o.detail << "C(A) = " << params_of(ca) << ", " << poly;
    b.reports.emplace_back("denniston m=5 s=3", r);
    return o;
}

Outcome criterion2(const Built& b) {
    Outcome o;
    const CodeReport& r = b.reports.at(0).second;
    const StageRecord* sub = r.stage("C~(A)^(2)");
    const StageRecord* dual_stage = r.stage("C~(A)^(2)perp");
    o.require(params_of(sub) == "[232, 12, 8]", "subfield code " + params_of(sub));
    o.require(params_of(dual_stage) == "[232, 220, 4]", "dual " + params_of(dual_stage));
    o.require(optimal(dual_stage), "dual verdict");
    o.require(sphere_packing_verdict(232, 220, 4, 2).distance_optimal, "sphere_packing_verdict(232, 220, 4, 2)");
    o.detail << "subfield " << params_of(sub) << ", dual " << params_of(dual_stage) << " distance-optimal";
    return o;
}

Outcome criterion3(Built& b) {
    Outcome o;
    std::size_t instances = 0;
    for (int m = 4; m <= 7; ++m) {
        const Field f = Field::build(m);
        for (int s = 2; s <= m - 1; ++s) {
            const DennistonSpec first = make_denniston_spec(f, s);
            const DennistonSpec second = alternate_denniston_spec(f, s);
            o.require(first.beta != second.beta && first.subgroup_basis != second.subgroup_basis,
                      "parameter choices not distinct at m=" + std::to_string(m));
            int choice = 0;
            for (const auto& spec : {first, second}) {
                const std::string label =
                    "denniston m=" + std::to_string(m) + " s=" + std::to_string(s) + " choice " + std::to_string(++choice);
                const CodeReport r = denniston_report(spec, options());
                const std::size_t k = 2 * static_cast<std::size_t>(m) + 2;
                const StageRecord* sub = r.stage("C~(A)^(2)");
                const StageRecord* dual_stage = r.stage("C~(A)^(2)perp");
                o.require(sub && sub->k == k, label + " subfield dimension");
                o.require(dual_stage && dual_stage->d == std::optional<std::size_t>{4}, label + " dual distance");
                o.require(optimal(dual_stage), label + " verdict");
                require_checks(o, r, label);
                b.reports.emplace_back(label, r);
                ++instances;
            }
        }
    }
    o.detail << instances << " instances: dimension 2m+2, dual d = 4, distance-optimal";
    return o;
}

Outcome criterion4(Built& b) {
    Outcome o;
    const Field f = Field::build(5, 37);
    const CodeReport r = pg3_report(make_pg3_spec(f, 1), options());
    const StageRecord* ca = r.stage("C(A)");
    const std::string poly = ca && ca->distribution ? ca->distribution->polynomial() : "none";
    o.require(params_of(ca) == "[33, 4, 30]", "C(A) " + params_of(ca));
    o.require(poly == "1 + 169136z^30 + 32736z^31 + 508431z^32 + 338272z^33", "enumerator " + poly);
    o.require(params_of(r.stage("C(A)^(2)")) == "[33, 11, 12]", "subfield code");
    o.require(params_of(r.stage("C(A)^(2)perp")) == "[33, 22, 5]", "dual");
    o.require(params_of(r.stage("C(A)^(2)perp-bar")) == "[34, 22, 6]", "extended dual");
    o.require(optimal(r.stage("C(A)^(2)perp-bar")), "extended dual verdict");
    o.detail << "C(A) = " << params_of(ca) << ", extended dual " << params_of(r.stage("C(A)^(2)perp-bar"))
             << " distance-optimal";
    b.reports.emplace_back("pg3 m=5 h=1", r);
    return o;
}

Outcome criterion5(Built& b) {
    Outcome o;
    std::size_t instances = 0;
    for (int m : {5, 6, 7}) {
        const Field f = Field::build(m);
        const std::size_t q = f.size();
        const std::size_t mm = static_cast<std::size_t>(m);
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            const std::string label = "pg3 m=" + std::to_string(m) + " h=" + std::to_string(h);
            const CodeReport r = pg3_report(make_pg3_spec(f, h), options());
            const StageRecord* sub = r.stage("C(A)^(2)");
            const StageRecord* ext = r.stage("C(A)^(2)perp-bar");
            o.require(sub && sub->k == 2 * mm + 1, label + " subfield dimension");
            o.require(params_of(ext) == detail::params(q + 2, q - 2 * mm, 6), label + " extended dual " + params_of(ext));
            o.require(optimal(ext), label + " verdict");
            require_checks(o, r, label);
            b.reports.emplace_back(label, r);
            ++instances;
        }
    }
    o.detail << instances << " instances: dimension 2m+1, extended dual [2^m+2, 2^m-2m, 6] distance-optimal";
    return o;
}

Outcome criterion6(const Built& b) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& [label, r] : b.reports) {
        std::size_t here = 0;
        for (const auto& c : r.checks) {
            if (c.name.find("expansion equals trace form") == std::string::npos) continue;
            o.require(c.pass, label + " " + c.name);
            ++here;
        }
        o.require(here == 2, label + " missing equivalence checks");
        checked += here;
    }
    o.detail << checked << " comparisons over " << b.reports.size() << " codes (polynomial and normal bases)";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t pairs = 0;
    std::size_t ambiguous = 0;
    for (int m = 2; m <= 5; ++m) {
        const Field f = Field::build(m);
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            for (auto a : f.elements()) {
                for (auto b : f.elements()) {
                    if (a.is_zero()) {
                        const auto n = static_cast<std::int64_t>(pg3_count_N(f, a, b, h));
                        o.require(2 * n == static_cast<std::int64_t>(f.size()) + coulter_sum(f, a, b, h), "N identity at a = 0");
                        continue;
                    }
                    const CharSumReport r = coulter_report(f, a, b, h);
                    ++pairs;
                    ambiguous += r.predicted.ambiguous;
                    if (!r.predicted.ambiguous) {
                        o.require(r.agrees, "m=" + std::to_string(m) + " h=" + std::to_string(h) + " a=" +
                                                std::to_string(a.bits) + " b=" + std::to_string(b.bits));
                    }
                    o.require(r.count_identity, "N identity");
                }
            }
        }
    }
    std::size_t tuples = 0;
    for (auto [m, s] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        const Field f = Field::build(m);
        const auto spec = make_denniston_spec(f, s);
        const auto subgroup = subgroup_span(f, spec.subgroup_basis);
        const std::uint64_t full = std::uint64_t{f.size()} * (subgroup.size() - 1);
        for (auto a1 : f.elements()) {
            for (auto a2 : f.elements()) {
                for (unsigned bit : {0u, 1u}) {
                    const bool zero = a1.is_zero() && a2.is_zero() && bit == 0;
                    o.require((denniston_count_N(f, subgroup, spec.beta, a1, a2, bit) == full) == zero,
                              "maximum count iff zero tuple at m=" + std::to_string(m));
                    ++tuples;
                }
            }
        }
    }
    o.detail << pairs << " (a, b) pairs (" << ambiguous << " in the ambiguous case), " << tuples << " Denniston tuples";
    return o;
}

template <class Code>
bool both_sides_enumerable(const Code& c, std::uint64_t q, std::uint64_t budget) {
    return detail::within_budget(q, c.dimension(), budget) && detail::within_budget(q, c.length() - c.dimension(), budget);
}

Outcome criterion8(const Built& b) {
    Outcome o;
    const auto opts = options();
    std::size_t transforms = 0;
    auto compare_binary = [&](const BinaryCode& c, const std::string& label) {
        if (!both_sides_enumerable(c, 2, opts.enumeration.budget)) return;
        const auto w = weight_distribution(c, opts.enumeration);
        const auto wd = weight_distribution(dual(c), opts.enumeration);
        o.require(macwilliams_transform(w, 2, c.dimension()).counts == wd.counts, label);
        ++transforms;
    };
    auto compare_q = [&](const LinearCodeQ& c, const std::string& label) {
        const std::uint64_t q = c.field().size();
        if (!both_sides_enumerable(c, q, opts.enumeration.budget)) return;
        const auto w = weight_distribution(c, opts.enumeration);
        const auto wd = weight_distribution(dual(c), opts.enumeration);
        o.require(macwilliams_transform(w, q, c.dimension()).counts == wd.counts, label);
        ++transforms;
    };
    for (int m = 2; m <= 4; ++m) {
        const Field f = Field::build(m);
        for (int s = 1; s < m; ++s) {
            const auto spec = make_denniston_spec(f, s);
            const auto arc = denniston_arc(spec);
            const std::string label = "denniston m=" + std::to_string(m) + " s=" + std::to_string(s);
            compare_q(arc.code, label + " C(A)");
            compare_q(arc.augmented, label + " augmented");
            compare_binary(denniston_trace_code(spec), label + " subfield");
        }
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            const auto spec = make_pg3_spec(f, h);
            const std::string label = "pg3 m=" + std::to_string(m) + " h=" + std::to_string(h);
            compare_q(pg3_arc(spec).code, label + " C(A)");
            const BinaryCode sub = pg3_trace_code(spec);
            compare_binary(sub, label + " subfield");
            compare_binary(extend(dual(sub)), label + " extended dual");
        }
    }
    o.require(transforms >= 10, "too few enumerable code pairs");

    std::size_t profiles = 0;
    for (int m = 2; m <= 5; ++m) {
        const Field f = Field::build(m);
        for (int s = 1; s < m; ++s) {
            const auto arc = denniston_arc(make_denniston_spec(f, s));
            for (const auto& [meet, lines] : line_intersection_profile(f, arc.points)) {
                o.require(meet == 0 || meet == arc.h(), "line profile at m=" + std::to_string(m) + " s=" + std::to_string(s));
            }
            ++profiles;
        }
    }
    std::size_t positions = 0;
    for (int m = 2; m <= 5; ++m) {
        const Field f = Field::build(m);
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            o.require(general_position_check(f, pg3_arc(make_pg3_spec(f, h)).points),
                      "general position at m=" + std::to_string(m));
            ++positions;
        }
    }
    std::size_t closed = 0;
    for (const auto& [label, r] : b.reports) {
        if (r.provenance.family != Family::denniston) continue;
        std::size_t here = 0;
        for (const auto& c : r.checks) {
            if (c.name == "C(A) A_{n-h}" || c.name == "C(A) A_n") {
                o.require(c.pass, label + " " + c.name);
                ++here;
            }
        }
        o.require(here == 2, label + " closed forms not evaluated");
        closed += here;
    }
    o.detail << transforms << " MacWilliams pairs, " << profiles << " line profiles, " << positions
             << " general-position checks, " << closed << " closed-form counts";
    return o;
}

Outcome criterion9(const Built& b) {
    Outcome o;
    std::size_t swept = 0;
    for (const auto& [label, r] : b.reports) {
        if (r.provenance.family != Family::denniston) continue;
        o.require(r.rate.r2_exceeds_r1.value_or(false), label + " R2 > R1");
        ++swept;
    }
    o.detail << swept << " Denniston instances with R2 > R1; PG(3):";
    for (int m : {5, 6, 7}) {
        const auto r = rate_comparison(Family::pg3, m);
        o.detail << " m=" << m << " R1'=" << r.r1.str() << " R2'=" << r.r2.str();
    }
    const auto r5 = rate_comparison(Family::pg3, 5);
    o.require(r5.r1.str() == "21/32" && r5.r2.str() == "22/34", "m = 5 PG(3) rates");
    return o;
}

}  // namespace

int main() {
    Built built;
    int failures = 0;
    auto run = [&](int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = body();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit > 0 && secs > limit) {
            o.pass = false;
            o.detail << "runtime " << secs << " s exceeds " << limit << " s; ";
        }
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << t.str() << " s): " << o.detail.str()
                  << std::endl;
        failures += !o.pass;
    };
    run(1, "Denniston golden", kLimit1, [&] { return criterion1(built); });
    run(2, "Denniston subfield golden", kLimit2, [&] { return criterion2(built); });
    run(3, "Denniston theorem sweep", kLimit3, [&] { return criterion3(built); });
    run(4, "PG(3) golden", kLimit4, [&] { return criterion4(built); });
    run(5, "PG(3) theorem sweep", kLimit5, [&] { return criterion5(built); });
    run(6, "construction equivalence", 0, [&] { return criterion6(built); });
    run(7, "character-sum oracle", kLimit7, [] { return criterion7(); });
    run(8, "structural invariants", 0, [&] { return criterion8(built); });
    run(9, "rate comparisons", 0, [&] { return criterion9(built); });
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
