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

#ifndef MAXARC_TOOLS_CLI_HPP
#define MAXARC_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "maxarc/json_io.hpp"
#include "maxarc/maxarc.hpp"

namespace maxarc::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kVerificationFailed = 2 };

struct CliConfig {
    std::string subcommand;
    std::optional<int> m;
    std::optional<int> s;
    int h = 1;
    std::optional<std::uint32_t> modulus;
    std::optional<std::uint32_t> beta;
    std::optional<std::string> basis;  // comma-separated element encodings
    std::optional<std::uint64_t> budget;
    unsigned threads = 0;  // 0: all cores
    std::string format = "json";
    std::optional<std::string> output;
    bool timing = false;
    // charsum
    std::optional<std::uint32_t> a;
    std::optional<std::uint32_t> b;
    // dump-arc
    std::string family = "denniston";
    std::optional<std::string> matrix;
};

/// Parsed and defaulted parameters, ready for dispatch.
struct Normalized {
    std::optional<Field> field;
    std::optional<DennistonSpec> denniston;
    std::optional<PG3ArcSpec> pg3;
    ReportOptions options;
    std::vector<std::string> notes;
};

struct Validation {
    Normalized value;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

inline std::vector<FieldElement> parse_basis(const std::string& text) {
    std::vector<FieldElement> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used, 0);
        if (used != item.size()) throw std::invalid_argument("bad element encoding '" + item + "'");
        out.emplace_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

/// Budget precedence: --budget, then MAXARC_BUDGET, then the library default.
inline std::optional<std::uint64_t> budget_from_env(std::vector<std::string>& errors) {
    const char* env = std::getenv("MAXARC_BUDGET");
    if (env == nullptr || *env == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const std::string text(env);
        const auto v = std::stoull(text, &used, 0);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    errors.push_back(std::string("MAXARC_BUDGET = '") + env + "' is not a positive integer");
    return std::nullopt;
}

/// Fills defaults and collects every violation instead of stopping at the first.
inline Validation validate(const CliConfig& c) {
    Validation v;
    auto& errs = v.errors;
    const std::string& sub = c.subcommand;
    const bool needs_field = sub == "denniston" || sub == "pg3" || sub == "charsum" || sub == "dump-arc";
    const bool is_denniston = sub == "denniston" || (sub == "dump-arc" && c.family == "denniston");
    const bool is_pg3 = sub == "pg3" || (sub == "dump-arc" && c.family == "pg3");

    if (sub == "dump-arc" && c.family != "denniston" && c.family != "pg3") {
        errs.push_back("--family must be denniston or pg3, got '" + c.family + "'");
    }
    if (c.format != "json" && c.format != "markdown") errs.push_back("--format must be json or markdown");

    v.value.options.enumeration.threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
    if (auto env = budget_from_env(errs)) v.value.options.enumeration.budget = *env;
    if (c.budget) {
        if (*c.budget == 0) {
            errs.push_back("--budget must be positive");
        } else {
            v.value.options.enumeration.budget = *c.budget;
        }
    }
    v.value.options.timing = c.timing;

    if (!needs_field) return v;
    if (!c.m) {
        errs.push_back("--m is required");
        return v;
    }
    const int m = *c.m;
    if (m < 2 || m > 16) {
        errs.push_back("--m must lie in [2, 16], got " + std::to_string(m));
        return v;
    }
    try {
        v.value.field = Field::build(m, c.modulus);
    } catch (const std::exception& e) {
        errs.push_back(std::string("modulus: ") + e.what());
    }
    if (!c.modulus && v.value.field) {
        v.value.notes.push_back("modulus defaulted to " + std::to_string(v.value.field->modulus()));
    }

    if (is_denniston) {
        const std::size_t before = errs.size();
        if (!c.s) {
            errs.push_back("--s is required for denniston");
        } else if (*c.s == m) {
            errs.push_back("s = m rejected: the subgroup would be the whole field");
        } else if (*c.s < 1 || *c.s > m) {
            errs.push_back("--s must satisfy 1 <= s < m, got " + std::to_string(*c.s));
        } else if (*c.s == 1) {
            v.value.notes.push_back("outside theorem hypothesis 1 < s < m; verdicts disabled");
        }
        const Field* f = v.value.field ? &*v.value.field : nullptr;
        std::optional<FieldElement> beta;
        if (c.beta) {
            beta = FieldElement{*c.beta};
            if (f && (!f->contains(*beta) || !quadratic_irreducible(*f, *beta))) {
                errs.push_back("--beta " + std::to_string(*c.beta) + " does not make x^2 + beta x + 1 irreducible");
            }
        } else if (f) {
            v.value.notes.push_back("beta defaulted to " + std::to_string(default_beta(*f).bits));
        }
        std::optional<std::vector<FieldElement>> basis;
        if (c.basis) {
            try {
                basis = parse_basis(*c.basis);
                if (c.s && static_cast<int>(basis->size()) != *c.s) {
                    errs.push_back("--basis needs exactly s = " + std::to_string(*c.s) + " elements");
                }
                for (auto x : *basis) {
                    if (f && !f->contains(x)) errs.push_back("--basis element " + std::to_string(x.bits) + " outside the field");
                }
                if (f && errs.size() == before) subgroup_span(*f, *basis);
            } catch (const std::exception& e) {
                errs.push_back(std::string("--basis: ") + e.what());
            }
        } else {
            v.value.notes.push_back("subgroup basis defaulted to {1, w, ..., w^(s-1)}");
        }
        if (f && errs.size() == before) {
            try {
                v.value.denniston = make_denniston_spec(*f, *c.s, basis, beta);
            } catch (const std::exception& e) {
                errs.push_back(e.what());
            }
        }
    } else if (c.beta || c.basis) {
        errs.push_back("--beta and --basis apply to the Denniston family only");
    }

    if (is_pg3 || sub == "charsum") {
        if (c.h < 1) errs.push_back("--h must be positive, got " + std::to_string(c.h));
    }
    if (is_pg3 && v.value.field && c.h >= 1) {
        try {
            v.value.pg3 = make_pg3_spec(*v.value.field, c.h);
        } catch (const std::exception& e) {
            errs.push_back(e.what());
        }
    }

    if (sub == "charsum" && v.value.field) {
        if (c.a && (*c.a == 0 || !v.value.field->contains(FieldElement{*c.a}))) {
            errs.push_back("--a must be a nonzero field element");
        }
        if (c.b && !v.value.field->contains(FieldElement{*c.b})) errs.push_back("--b must be a field element");
    }
    return v;
}

namespace detail {

inline int run_charsum(const CliConfig& c, const Normalized& n, std::ostream& out) {
    const Field& f = *n.field;
    std::vector<FieldElement> as;
    std::vector<FieldElement> bs;
    for (auto x : f.elements()) {
        if (!x.is_zero() && (!c.a || x.bits == *c.a)) as.push_back(x);
        if (!c.b || x.bits == *c.b) bs.push_back(x);
    }
    bool ok = true;
    if (c.format == "markdown") out << "| a | b | S_h(a,b) | predicted | ambiguous | agrees |\n|---|---|---|---|---|---|\n";
    for (auto a : as) {
        for (auto b : bs) {
            const CharSumReport r = coulter_report(f, a, b, c.h);
            ok = ok && r.count_identity && (r.agrees || r.predicted.ambiguous);
            if (c.format == "json") {
                out << to_json(r).dump() << "\n";
            } else {
                out << "| " << a.bits << " | " << b.bits << " | " << r.brute_value << " | "
                    << Json(r.predicted.values).dump() << " | " << (r.predicted.ambiguous ? "yes" : "no") << " | "
                    << (r.agrees ? "yes" : "no") << " |\n";
            }
        }
    }
    return ok ? kOk : kVerificationFailed;
}

inline int run_dump(const CliConfig& c, const Normalized& n, std::ostream& out, std::ostream& err) {
    const Field& f = *n.field;
    std::vector<ProjPoint> points;
    BinaryCode sub;
    if (n.denniston) {
        const auto arc = denniston_arc(*n.denniston);
        points = arc.points;
        sub = subfield_expand(arc.augmented, polynomial_basis(f));
    } else {
        const auto arc = pg3_arc(*n.pg3);
        points = arc.points;
        sub = subfield_expand(arc.code, polynomial_basis(f));
    }
    write_arc_dump(out, f, points);
    if (c.matrix) {
        std::ofstream m(*c.matrix);
        if (!m) {
            err << "error: cannot write " << *c.matrix << "\n";
            return kInvalid;
        }
        m << sub.generator().to_text();
    }
    return kOk;
}

}  // namespace detail

/// Dispatches a validated config. Output goes to `out`, diagnostics to `err`.
inline int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const Validation v = validate(c);
    if (!v.ok()) {
        for (const auto& e : v.errors) err << "error: " << e << "\n";
        return kInvalid;
    }
    std::ostringstream buffer;
    int code = kOk;
    try {
        if (c.subcommand == "denniston" || c.subcommand == "pg3") {
            CodeReport r = c.subcommand == "denniston" ? denniston_report(*v.value.denniston, v.value.options)
                                                       : pg3_report(*v.value.pg3, v.value.options);
            for (const auto& note : v.value.notes) {
                if (std::find(r.diagnostics.begin(), r.diagnostics.end(), note) == r.diagnostics.end()) {
                    r.diagnostics.push_back(note);
                }
            }
            buffer << (c.format == "json" ? to_json(r).dump(2) + "\n" : to_markdown(r));
            code = r.all_pass() ? kOk : kVerificationFailed;
        } else if (c.subcommand == "verify-paper") {
            const SuiteResult s = paper_example_suite(v.value.options);
            buffer << (c.format == "json" ? to_json(s).dump(2) + "\n" : to_markdown(s));
            code = s.failures().empty() ? kOk : kVerificationFailed;
        } else if (c.subcommand == "charsum") {
            code = detail::run_charsum(c, v.value, buffer);
        } else if (c.subcommand == "dump-arc") {
            code = detail::run_dump(c, v.value, buffer, err);
            if (code != kOk) return code;
        } else {
            err << "error: unknown subcommand '" << c.subcommand << "'\n";
            return kInvalid;
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    if (c.output) {
        std::ofstream file(*c.output);
        if (!file || !(file << buffer.str()) || !file.flush()) {
            err << "error: cannot write " << *c.output << "\n";
            return kInvalid;
        }
    } else {
        out << buffer.str();
    }
    return code;
}

/// Parses argv with CLI11 and runs; usage errors map to exit code 1.
inline int main_with(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"maxarc: binary codes from maximal arcs and arcs in PG(3, 2^m)"};
    app.set_help_flag("--help", "print this help");  // -h is taken by the exponent option
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool field) {
        if (field) {
            sub->add_option("--m", c.m, "field degree: GF(2^m)");
            sub->add_option("--modulus", c.modulus, "defining polynomial as an integer (default: smallest irreducible)");
        }
        sub->add_option("--budget", c.budget, "maximum number of enumerated messages");
        sub->add_option("--threads", c.threads, "worker threads (default: all cores)");
        sub->add_option("--format", c.format, "json or markdown");
        sub->add_option("--output", c.output, "write to this file instead of stdout");
        sub->add_flag("--timing", c.timing, "include per-stage timings in reports");
    };
    auto* den = app.add_subcommand("denniston", "analyze a Denniston maximal arc code");
    common(den, true);
    den->add_option("--s", c.s, "subgroup H has 2^s elements");
    den->add_option("--beta", c.beta, "x^2 + beta x + 1 must be irreducible");
    den->add_option("--basis", c.basis, "comma-separated GF(2)-basis of H");

    auto* pg3 = app.add_subcommand("pg3", "analyze the (q+1)-arc in PG(3, q)");
    common(pg3, true);
    pg3->add_option("--h", c.h, "exponent in x^(2^h+1), gcd(m, h) = 1");

    auto* cs = app.add_subcommand("charsum", "brute-force S_h(a, b) against its closed form, one JSON line per pair");
    common(cs, true);
    cs->add_option("--h", c.h, "exponent in x^(2^h+1)");
    cs->add_option("--a", c.a, "fix a (default: all nonzero a)");
    cs->add_option("--b", c.b, "fix b (default: all b)");

    auto* vp = app.add_subcommand("verify-paper", "recompute the worked m = 5 examples");
    common(vp, false);

    auto* dump = app.add_subcommand("dump-arc", "write arc points and optionally the binary generator matrix");
    common(dump, true);
    dump->add_option("--family", c.family, "denniston or pg3");
    dump->add_option("--s", c.s, "Denniston subgroup exponent");
    dump->add_option("--h", c.h, "PG(3) exponent");
    dump->add_option("--beta", c.beta, "Denniston beta");
    dump->add_option("--basis", c.basis, "Denniston subgroup basis");
    dump->add_option("--matrix", c.matrix, "write the binary subfield generator here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalid;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

}  // namespace maxarc::cli

#endif  // MAXARC_TOOLS_CLI_HPP
