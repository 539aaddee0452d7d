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

#ifndef MAXARC_ANALYSIS_HPP
#define MAXARC_ANALYSIS_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxarc/arcs.hpp"
#include "maxarc/code.hpp"
#include "maxarc/low_weight.hpp"

namespace maxarc {

enum class Family { denniston, pg3 };

inline const char* family_name(Family f) { return f == Family::denniston ? "denniston" : "pg3"; }

/// One derived code in a pipeline.
struct StageRecord {
    std::string name;
    std::string field;  // "GF(2)" or "GF(2^m)"
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;
    std::string d_method;  // every reported d names the exact method behind it
    std::optional<WeightDistribution> distribution;
    std::optional<SpherePackingVerdict> verdict;
};

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// An unreduced fraction, kept exactly as the formula produces it.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
    }
};

struct RateComparison {
    Family family = Family::denniston;
    Rational r1;  // the comparison family
    Rational r2;  // the family built here
    std::optional<bool> r2_exceeds_r1;  // reported for the Denniston family
};

/// Everything needed to rebuild a report.
struct Provenance {
    Family family = Family::denniston;
    int m = 0;
    int parameter = 0;  // s for Denniston, h for PG(3)
    std::uint32_t modulus = 0;
    std::optional<std::uint32_t> beta;
    std::vector<std::uint32_t> subgroup_basis;
    std::vector<std::uint32_t> subgroup;
    std::vector<std::uint32_t> expansion_basis;
    std::string column_order;
};

struct CodeReport {
    Provenance provenance;
    std::vector<StageRecord> stages;
    std::vector<Check> checks;
    RateComparison rate;
    bool verdicts_enabled = false;
    std::vector<std::string> diagnostics;
    std::optional<std::map<std::string, double>> timing;  // seconds per stage

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    const StageRecord* stage(const std::string& name) const {
        for (const auto& s : stages) {
            if (s.name == name) return &s;
        }
        return nullptr;
    }
};

struct ReportOptions {
    EnumerationOptions enumeration;
    bool timing = false;
};

namespace detail {

inline bool within_budget(std::uint64_t q, std::size_t k, std::uint64_t budget) {
    try {
        check_budget(q, k, budget);
        return true;
    } catch (const BudgetExceeded&) {
        return false;
    }
}

inline std::string field_label(int m) { return m == 1 ? "GF(2)" : "GF(2^" + std::to_string(m) + ")"; }

inline std::string params(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + (d ? std::to_string(*d) : "?") + "]";
}

inline std::string opt_str(std::optional<std::size_t> v) { return v ? std::to_string(*v) : "none"; }

inline Check check_eq(std::string name, const std::string& expected, const std::string& actual) {
    return Check{std::move(name), expected, actual, expected == actual};
}

inline Check check_bool(std::string name, bool value) {
    return Check{std::move(name), "true", value ? "true" : "false", value};
}

class Stopwatch {
public:
    explicit Stopwatch(std::optional<std::map<std::string, double>>& sink) : sink_(sink) {}
    void lap(const std::string& label) {
        const auto now = std::chrono::steady_clock::now();
        if (sink_) (*sink_)[label] = std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

private:
    std::optional<std::map<std::string, double>>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::vector<std::uint32_t> bits_of(const std::vector<FieldElement>& xs) {
    std::vector<std::uint32_t> out;
    out.reserve(xs.size());
    for (auto x : xs) out.push_back(x.bits);
    return out;
}

/// Binary stage whose own distribution is enumerated.
inline StageRecord enumerated_binary_stage(std::string name, const BinaryCode& c, const EnumerationOptions& opts) {
    StageRecord s{std::move(name), field_label(1), c.length(), c.dimension(), {}, "", {}, {}};
    if (within_budget(2, c.dimension(), opts.budget)) {
        s.distribution = weight_distribution(c, opts);
        s.d = s.distribution->min_distance();
        s.d_method = "enumeration";
    } else {
        s.d_method = "not computed (over budget)";
    }
    return s;
}

/// Binary dual stage: d from MacWilliams on the parent's distribution and,
/// independently, from a column-dependency search on the parent's generator.
inline StageRecord dual_binary_stage(std::string name, const BinaryCode& parent, const StageRecord& parent_stage,
                                     std::vector<Check>& checks) {
    const std::size_t n = parent.length();
    StageRecord s{std::move(name), field_label(1), n, n - parent.dimension(), {}, "", {}, {}};
    std::optional<std::size_t> mw;
    if (parent_stage.distribution) mw = dual_min_distance(*parent_stage.distribution, 2, parent.dimension());
    const auto lw = low_weight_search(parent.generator(), 6);
    if (mw && lw) {
        checks.push_back(check_eq(s.name + ": MacWilliams and column search agree", opt_str(mw), opt_str(lw)));
    }
    if (mw) {
        s.d = mw;
        s.d_method = lw ? "MacWilliams, low-weight search" : "MacWilliams";
    } else if (lw) {
        s.d = lw;
        s.d_method = "low-weight search";
    } else {
        s.d_method = "not computed (d > 6 and parent not enumerated)";
    }
    return s;
}

inline void attach_verdict(StageRecord& s) {
    if (s.d && s.k > 0) s.verdict = sphere_packing_verdict(s.n, s.k, *s.d, 2);
}

/// Subfield-code construction equivalence under two bases and the trace form.
inline void equivalence_checks(const std::string& label, const LinearCodeQ& c, const BinaryCode& reference,
                               const BinaryCode& closed_form, std::vector<Check>& checks) {
    const Field& f = c.field();
    checks.push_back(check_bool(label + ": polynomial-basis expansion equals trace form",
                                subfield_expand(c, polynomial_basis(f)) == trace_subfield(c)));
    checks.push_back(check_bool(label + ": normal-basis expansion equals trace form",
                                subfield_expand(c, normal_basis(f)) == trace_subfield(c)));
    checks.push_back(check_bool(label + ": closed-form trace code equals expansion", closed_form == reference));
}

}  // namespace detail

/// R1 = (2^m - m - 1)/2^m (extended Hamming), R2 = (n - 2m - 2)/n.
/// PG(3): R1' = (2^m - 2m - 1)/2^m, R2' = (2^m - 2m)/(2^m + 2).
inline RateComparison rate_comparison(Family family, int m, int s = 0) {
    const std::uint64_t q = std::uint64_t{1} << m;
    const std::uint64_t mm = static_cast<std::uint64_t>(m);
    RateComparison r;
    r.family = family;
    if (family == Family::denniston) {
        const std::uint64_t hs = std::uint64_t{1} << s;
        const std::uint64_t n = q * hs + hs - q;
        r.r1 = Rational{q - mm - 1, q};
        r.r2 = Rational{n - 2 * mm - 2, n};
        r.r2_exceeds_r1 = r.r1 < r.r2;
    } else {
        r.r1 = Rational{q - 2 * mm - 1, q};
        r.r2 = Rational{q - 2 * mm, q + 2};
    }
    return r;
}

/// Construct -> subfield -> dual for the Denniston family. Theorem checks are
/// emitted for 1 < s < m only; the two-weight checks for every 1 <= s < m.
inline CodeReport denniston_report(const DennistonSpec& spec, const ReportOptions& opts = {}) {
    const Field& f = spec.field;
    const int m = f.degree();
    const int s = spec.s;
    CodeReport rep;
    if (opts.timing) rep.timing.emplace();
    detail::Stopwatch clock(rep.timing);

    const DennistonArc arc = denniston_arc(spec);
    const std::uint64_t q = f.size();
    const std::size_t n = arc.length();
    const std::size_t h = arc.h();
    rep.verdicts_enabled = s > 1 && s < m;
    if (!rep.verdicts_enabled) rep.diagnostics.push_back("outside theorem hypothesis 1 < s < m; verdicts disabled");

    auto& pv = rep.provenance;
    pv.family = Family::denniston;
    pv.m = m;
    pv.parameter = s;
    pv.modulus = f.modulus();
    pv.beta = spec.beta.bits;
    pv.subgroup_basis = detail::bits_of(spec.subgroup_basis);
    pv.subgroup = detail::bits_of(arc.subgroup);
    pv.expansion_basis = detail::bits_of(polynomial_basis(f).elements());
    pv.column_order =
        "(l^(-q/2), 1, 0) for l in H* ascending; (l^(-q/2)(y + beta^(q/2) y^(q/2) + 1), y, 1) for y ascending, "
        "l in H* ascending; (1, 0, 0)";
    clock.lap("construct");

    // C(A) over GF(q)
    StageRecord ca{"C(A)", detail::field_label(m), n, arc.code.dimension(), {}, "", {}, {}};
    if (detail::within_budget(q, ca.k, opts.enumeration.budget)) {
        ca.distribution = weight_distribution(arc.code, opts.enumeration);
        ca.d = ca.distribution->min_distance();
        ca.d_method = "enumeration";
        const std::uint64_t secants = n * (q + 1) / h;
        rep.checks.push_back(detail::check_eq("C(A) parameters", detail::params(n, 3, n - h),
                                              detail::params(ca.n, ca.k, ca.d)));
        rep.checks.push_back(detail::check_eq("C(A) A_{n-h}", std::to_string((q - 1) * secants),
                                              ca.distribution->counts[n - h].str()));
        rep.checks.push_back(detail::check_eq("C(A) A_n", std::to_string((q - 1) * (q * q + q + 1 - secants)),
                                              ca.distribution->counts[n].str()));
        rep.checks.push_back(detail::check_eq("C(A) weight count", "2", std::to_string(ca.distribution->nonzero_weights())));
    } else {
        ca.d_method = "not computed (over budget)";
    }
    rep.stages.push_back(ca);

    StageRecord cad{"C(A)^perp", detail::field_label(m), n, n - ca.k, {}, "", {}, {}};
    if (ca.distribution) {
        cad.d = dual_min_distance(*ca.distribution, q, ca.k);
        cad.d_method = "MacWilliams";
        rep.checks.push_back(detail::check_eq("C(A)^perp minimum distance", s == 1 ? "4" : "3", detail::opt_str(cad.d)));
    } else {
        cad.d_method = "not computed (C(A) over budget)";
    }
    rep.stages.push_back(cad);
    clock.lap("C(A)");

    StageRecord aug{"C~(A)", detail::field_label(m), n, arc.augmented.dimension(), {}, "not computed", {}, {}};
    rep.stages.push_back(aug);
    rep.checks.push_back(detail::check_eq("C~(A) dimension", "4", std::to_string(aug.k)));

    // binary subfield code of C~(A) and its dual
    const BinaryCode sub = subfield_expand(arc.augmented, polynomial_basis(f));
    detail::equivalence_checks("C~(A)^(2)", arc.augmented, sub, denniston_trace_code(spec), rep.checks);
    clock.lap("subfield");

    StageRecord subs = detail::enumerated_binary_stage("C~(A)^(2)", sub, opts.enumeration);
    rep.stages.push_back(subs);
    clock.lap("subfield distribution");

    StageRecord dual_stage = detail::dual_binary_stage("C~(A)^(2)perp", sub, subs, rep.checks);
    detail::attach_verdict(dual_stage);
    rep.stages.push_back(dual_stage);
    clock.lap("dual");

    if (rep.verdicts_enabled) {
        const std::size_t k_expected = 2 * static_cast<std::size_t>(m) + 2;
        rep.checks.push_back(detail::check_eq("subfield code dimension 2m+2", std::to_string(k_expected),
                                              std::to_string(sub.dimension())));
        rep.checks.push_back(detail::check_eq("dual parameters", detail::params(n, n - k_expected, 4),
                                              detail::params(dual_stage.n, dual_stage.k, dual_stage.d)));
        rep.checks.push_back(detail::check_bool("dual distance-optimal (sphere packing)",
                                                dual_stage.verdict && dual_stage.verdict->distance_optimal));
    }

    rep.rate = rate_comparison(Family::denniston, m, s);
    if (rep.verdicts_enabled && m >= 4) {
        rep.checks.push_back(detail::check_bool("rate R2 > R1", rep.rate.r2_exceeds_r1.value_or(false)));
    }
    return rep;
}

/// Construct -> subfield -> dual -> extended dual for the (q+1)-arc in PG(3, q).
/// Theorem checks are emitted for m >= 5.
inline CodeReport pg3_report(const PG3ArcSpec& spec, const ReportOptions& opts = {}) {
    const Field& f = spec.field;
    const int m = f.degree();
    CodeReport rep;
    if (opts.timing) rep.timing.emplace();
    detail::Stopwatch clock(rep.timing);

    const PG3Arc arc = pg3_arc(spec);
    const std::uint64_t q = f.size();
    const std::size_t n = arc.points.size();
    rep.verdicts_enabled = m >= 5;
    if (!rep.verdicts_enabled) rep.diagnostics.push_back("outside theorem hypothesis m >= 5; verdicts disabled");

    auto& pv = rep.provenance;
    pv.family = Family::pg3;
    pv.m = m;
    pv.parameter = spec.h;
    pv.modulus = f.modulus();
    pv.expansion_basis = detail::bits_of(polynomial_basis(f).elements());
    pv.column_order = "(x^(2^h+1), x^(2^h), x, 1) for x ascending; (1, 0, 0, 0)";
    clock.lap("construct");

    if (m <= 6) {
        rep.checks.push_back(detail::check_bool("arc points in general position", general_position_check(f, arc.points)));
    }

    StageRecord ca{"C(A)", detail::field_label(m), n, arc.code.dimension(), {}, "", {}, {}};
    if (detail::within_budget(q, ca.k, opts.enumeration.budget)) {
        ca.distribution = weight_distribution(arc.code, opts.enumeration);
        ca.d = ca.distribution->min_distance();
        ca.d_method = "enumeration";
        rep.checks.push_back(detail::check_eq("C(A) MDS parameters", detail::params(n, 4, n - 3),
                                              detail::params(ca.n, ca.k, ca.d)));
    } else {
        ca.d_method = "not computed (over budget)";
    }
    rep.stages.push_back(ca);
    clock.lap("C(A)");

    const BinaryCode sub = subfield_expand(arc.code, polynomial_basis(f));
    detail::equivalence_checks("C(A)^(2)", arc.code, sub, pg3_trace_code(spec), rep.checks);
    StageRecord subs = detail::enumerated_binary_stage("C(A)^(2)", sub, opts.enumeration);
    rep.stages.push_back(subs);
    clock.lap("subfield");

    StageRecord dual_stage = detail::dual_binary_stage("C(A)^(2)perp", sub, subs, rep.checks);
    detail::attach_verdict(dual_stage);
    rep.stages.push_back(dual_stage);
    clock.lap("dual");

    // extension of the dual; its own dual is enumerated for a second opinion
    const BinaryCode ext = extend(dual(sub));
    const BinaryCode ext_dual = dual(ext);
    StageRecord ext_dual_stage = detail::enumerated_binary_stage("C(A)^(2)perp-bar perp", ext_dual, opts.enumeration);
    StageRecord ext_stage = detail::dual_binary_stage("C(A)^(2)perp-bar", ext_dual, ext_dual_stage, rep.checks);
    detail::attach_verdict(ext_stage);
    rep.stages.push_back(ext_stage);
    clock.lap("extended dual");

    if (rep.verdicts_enabled) {
        const std::size_t mm = static_cast<std::size_t>(m);
        rep.checks.push_back(detail::check_eq("subfield code dimension 2m+1", std::to_string(2 * mm + 1),
                                              std::to_string(sub.dimension())));
        rep.checks.push_back(detail::check_bool("dual distance at least 5", dual_stage.d && *dual_stage.d >= 5));
        rep.checks.push_back(detail::check_eq("extended dual parameters", detail::params(q + 2, q - 2 * mm, 6),
                                              detail::params(ext_stage.n, ext_stage.k, ext_stage.d)));
        rep.checks.push_back(detail::check_bool("extended dual distance-optimal (sphere packing)",
                                                ext_stage.verdict && ext_stage.verdict->distance_optimal));
    }
    rep.rate = rate_comparison(Family::pg3, m);
    return rep;
}

/// Second admissible beta in increasing encoding order, or the first if only one exists.
inline FieldElement alternate_beta(const Field& f) {
    std::optional<FieldElement> first;
    for (auto b : f.elements()) {
        if (b.is_zero() || !quadratic_irreducible(f, b)) continue;
        if (first) return b;
        first = b;
    }
    return first.value();
}

/// A second Denniston parameter choice: alternate beta and H = span{w^{m-s}, ..., w^{m-1}}.
inline DennistonSpec alternate_denniston_spec(const Field& f, int s) {
    std::vector<FieldElement> basis;
    for (int i = f.degree() - s; i < f.degree(); ++i) basis.emplace_back(1u << i);
    return make_denniston_spec(f, s, basis, alternate_beta(f));
}

struct SuiteResult {
    std::vector<Check> checks;
    std::vector<std::string> notes;  // claims that no implemented bound can certify

    std::vector<Check> failures() const {
        std::vector<Check> out;
        for (const auto& c : checks) {
            if (!c.pass) out.push_back(c);
        }
        return out;
    }
};

/// Both m = 5 worked examples with modulus x^5 + x^2 + 1, compared number by number.
inline SuiteResult paper_example_suite(const ReportOptions& opts = {}) {
    SuiteResult out;
    const Field f = Field::build(5, 37);
    auto add = [&](std::string name, std::string expected, std::string actual) {
        out.checks.push_back(detail::check_eq(std::move(name), std::move(expected), std::move(actual)));
    };
    auto params_of = [](const StageRecord* s) { return s ? detail::params(s->n, s->k, s->d) : std::string("missing"); };
    auto poly_of = [](const StageRecord* s) {
        return s && s->distribution ? s->distribution->polynomial() : std::string("not enumerated");
    };

    const CodeReport d = denniston_report(make_denniston_spec(f, 3), opts);
    add("denniston C(A) parameters", "[232, 3, 224]", params_of(d.stage("C(A)")));
    add("denniston C(A) weight enumerator", "1 + 29667z^224 + 3100z^232", poly_of(d.stage("C(A)")));
    add("denniston subfield code parameters", "[232, 12, 8]", params_of(d.stage("C~(A)^(2)")));
    const StageRecord* dd = d.stage("C~(A)^(2)perp");
    add("denniston dual parameters", "[232, 220, 4]", params_of(dd));
    add("denniston dual distance-optimal", "true",
        dd && dd->verdict && dd->verdict->distance_optimal ? "true" : "false");
    add("denniston rates", "26/32 < 220/232", d.rate.r1.str() + (d.rate.r2_exceeds_r1.value_or(false) ? " < " : " >= ") +
                                                  d.rate.r2.str());
    for (const auto& c : d.checks) {
        if (!c.pass) out.checks.push_back(Check{"denniston " + c.name, c.expected, c.actual, false});
    }

    const CodeReport p = pg3_report(make_pg3_spec(f, 1), opts);
    add("pg3 C(A) parameters", "[33, 4, 30]", params_of(p.stage("C(A)")));
    add("pg3 C(A) weight enumerator", "1 + 169136z^30 + 32736z^31 + 508431z^32 + 338272z^33",
        poly_of(p.stage("C(A)")));
    add("pg3 subfield code parameters", "[33, 11, 12]", params_of(p.stage("C(A)^(2)")));
    add("pg3 dual parameters", "[33, 22, 5]", params_of(p.stage("C(A)^(2)perp")));
    const StageRecord* pe = p.stage("C(A)^(2)perp-bar");
    add("pg3 extended dual parameters", "[34, 22, 6]", params_of(pe));
    add("pg3 extended dual distance-optimal", "true",
        pe && pe->verdict && pe->verdict->distance_optimal ? "true" : "false");
    add("pg3 rates", "21/32, 22/34", p.rate.r1.str() + ", " + p.rate.r2.str());
    for (const auto& c : p.checks) {
        if (!c.pass) out.checks.push_back(Check{"pg3 " + c.name, c.expected, c.actual, false});
    }

    const auto v11 = sphere_packing_verdict(33, 11, 12, 2);
    if (!v11.fails_at_d_plus_1) {
        out.notes.push_back("[33, 11, 12] optimality is not certified by the sphere-packing bound (d = 13 also fits)");
    }
    const auto v22 = sphere_packing_verdict(33, 22, 5, 2);
    if (!v22.distance_optimal) {
        out.notes.push_back("[33, 22, 5] near-optimality is not certified by the sphere-packing bound");
    }
    return out;
}

}  // namespace maxarc

#endif  // MAXARC_ANALYSIS_HPP
