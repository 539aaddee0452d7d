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

#ifndef MAXARC_ARCS_HPP
#define MAXARC_ARCS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxarc/code.hpp"
#include "maxarc/gf2m.hpp"

namespace maxarc {

/// A point of PG(2, q) or PG(3, q), scaled so its last nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FieldElement> coords;

    static ProjPoint normalized(const Field& f, std::vector<FieldElement> coords) {
        auto last = std::find_if(coords.rbegin(), coords.rend(), [](FieldElement x) { return !x.is_zero(); });
        if (last == coords.rend()) throw std::invalid_argument("the zero vector is not a projective point");
        const FieldElement s = f.inv(*last);
        for (auto& x : coords) x = f.mul(x, s);
        return ProjPoint{std::move(coords)};
    }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// All normalized points of PG(dim, q), ordered by their last nonzero position
/// and then lexicographically.
inline std::vector<ProjPoint> all_points(const Field& f, std::size_t dim) {
    std::vector<ProjPoint> out;
    const std::size_t len = dim + 1;
    for (std::size_t lead = 0; lead < len; ++lead) {
        // coordinates 0..lead-1 free, coordinate lead = 1, the rest zero
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < lead; ++i) total *= f.size();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<FieldElement> c(len, f.zero());
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < lead; ++i) {
                c[i] = FieldElement{static_cast<std::uint32_t>(rest % f.size())};
                rest /= f.size();
            }
            c[lead] = f.one();
            out.push_back(ProjPoint{std::move(c)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard pencil and Denniston arcs

/// Points of F_lambda = {lambda x^2 + y^2 + beta y z + z^2 = 0}. An empty
/// `lambda` stands for lambda = infinity, the line x = 0.
inline std::vector<ProjPoint> standard_pencil(const Field& f, std::optional<FieldElement> lambda, FieldElement beta) {
    if (!quadratic_irreducible(f, beta)) {
        throw std::invalid_argument("x^2 + beta x + 1 must be irreducible, beta = " + std::to_string(beta.bits));
    }
    std::vector<ProjPoint> pts;
    if (!lambda) {
        pts.push_back(ProjPoint{{f.zero(), f.one(), f.zero()}});
        for (auto y : f.elements()) pts.push_back(ProjPoint{{f.zero(), y, f.one()}});
        return pts;
    }
    if (lambda->is_zero()) return {ProjPoint{{f.one(), f.zero(), f.zero()}}};
    const FieldElement scale = f.sqrt(f.inv(*lambda));  // lambda^{-q/2}
    const FieldElement root_beta = f.sqrt(beta);
    pts.push_back(ProjPoint{{scale, f.one(), f.zero()}});
    for (auto y : f.elements()) {
        const FieldElement t = f.add(f.add(y, f.mul(root_beta, f.sqrt(y))), f.one());
        pts.push_back(ProjPoint{{f.mul(scale, t), y, f.one()}});
    }
    return pts;
}

/// All 2^s GF(2)-combinations of `basis`, sorted by integer encoding.
inline std::vector<FieldElement> subgroup_span(const Field& f, const std::vector<FieldElement>& basis) {
    std::vector<FieldElement> span{f.zero()};
    for (auto b : basis) {
        if (!f.contains(b)) throw std::invalid_argument("subgroup generator outside the field");
        const std::size_t before = span.size();
        for (std::size_t i = 0; i < before; ++i) span.push_back(f.add(span[i], b));
    }
    std::sort(span.begin(), span.end());
    if (std::adjacent_find(span.begin(), span.end()) != span.end()) {
        throw std::invalid_argument("subgroup generators are linearly dependent over GF(2)");
    }
    return span;
}

struct DennistonSpec {
    Field field;
    int s = 0;
    std::vector<FieldElement> subgroup_basis;
    FieldElement beta;
};

/// Checks 1 <= s <= m, an independent subgroup basis of size s, and an
/// admissible beta. Defaults: basis {1, w, ..., w^{s-1}}, smallest admissible beta.
inline DennistonSpec make_denniston_spec(const Field& f, int s,
                                         std::optional<std::vector<FieldElement>> basis = std::nullopt,
                                         std::optional<FieldElement> beta = std::nullopt) {
    if (s < 1 || s > f.degree()) {
        throw std::invalid_argument("subgroup exponent s = " + std::to_string(s) + " outside [1, m]");
    }
    DennistonSpec spec{f, s, {}, beta.value_or(default_beta(f))};
    if (basis) {
        spec.subgroup_basis = *basis;
    } else {
        for (int i = 0; i < s; ++i) spec.subgroup_basis.emplace_back(1u << i);
    }
    if (static_cast<int>(spec.subgroup_basis.size()) != s) {
        throw std::invalid_argument("subgroup basis needs exactly s = " + std::to_string(s) + " elements");
    }
    subgroup_span(f, spec.subgroup_basis);  // throws on dependence
    if (!f.contains(spec.beta) || !quadratic_irreducible(f, spec.beta)) {
        throw std::invalid_argument("beta = " + std::to_string(spec.beta.bits) +
                                    " does not make x^2 + beta x + 1 irreducible");
    }
    return spec;
}

struct DennistonArc {
    std::vector<FieldElement> subgroup;  // H in integer-encoding order
    std::vector<ProjPoint> points;       // the arc in generator column order
    LinearCodeQ code;                    // C(A), generated by G_A
    LinearCodeQ augmented;               // C~(A), generated by G~_A

    std::size_t h() const { return subgroup.size(); }
    std::size_t length() const { return points.size(); }
};

namespace detail {

inline FieldGrid columns_to_rows(const Field& f, const std::vector<ProjPoint>& points, std::size_t dim) {
    FieldGrid rows(dim, FieldRow(points.size(), f.zero()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) rows[i][j] = points[j].coords[i];
    }
    return rows;
}

}  // namespace detail

/// The Denniston arc: union of F_lambda over lambda in H. Columns of G_A are
/// the points (lambda^{-q/2}, 1, 0) for lambda in H*, then for each y the
/// points (lambda^{-q/2}(y + beta^{q/2} y^{q/2} + 1), y, 1) over H*, then
/// (1, 0, 0). G~_A adds the all-ones row.
inline DennistonArc denniston_arc(const DennistonSpec& spec) {
    const Field& f = spec.field;
    if (spec.s < 1 || spec.s >= f.degree()) {
        throw std::invalid_argument("Denniston arcs need 1 <= s < m, got s = " + std::to_string(spec.s));
    }
    if (!quadratic_irreducible(f, spec.beta)) throw std::invalid_argument("beta is not admissible");
    auto subgroup = subgroup_span(f, spec.subgroup_basis);
    if (subgroup.size() != (std::size_t{1} << spec.s)) throw std::invalid_argument("subgroup basis size differs from s");

    std::vector<FieldElement> scales;  // lambda^{-q/2} for lambda in H*
    for (auto lambda : subgroup) {
        if (!lambda.is_zero()) scales.push_back(f.sqrt(f.inv(lambda)));
    }
    const FieldElement root_beta = f.sqrt(spec.beta);

    std::vector<ProjPoint> pts;
    for (auto sc : scales) pts.push_back(ProjPoint{{sc, f.one(), f.zero()}});
    for (auto y : f.elements()) {
        const FieldElement t = f.add(f.add(y, f.mul(root_beta, f.sqrt(y))), f.one());
        for (auto sc : scales) pts.push_back(ProjPoint{{f.mul(sc, t), y, f.one()}});
    }
    pts.push_back(ProjPoint{{f.one(), f.zero(), f.zero()}});

    FieldGrid rows = detail::columns_to_rows(f, pts, 3);
    LinearCodeQ code(f, rows, pts.size());
    rows.emplace_back(pts.size(), f.one());
    LinearCodeQ augmented(f, std::move(rows), pts.size());
    return DennistonArc{std::move(subgroup), std::move(pts), std::move(code), std::move(augmented)};
}

/// Closed-form trace representation of the binary subfield code of C~(A):
/// words ((Tr(a1 l^{-q/2} + a2) + c)_l, (Tr(a1 l^{-q/2}(y + beta^{q/2} y^{q/2} + 1) + a2 y) + b + c)_{y,l},
/// Tr(a1) + c), spanned over a1, a2 in GF(q) and b, c in GF(2).
inline BinaryCode denniston_trace_code(const DennistonSpec& spec) {
    const Field& f = spec.field;
    const auto subgroup = subgroup_span(f, spec.subgroup_basis);
    std::vector<FieldElement> scales;
    for (auto lambda : subgroup) {
        if (!lambda.is_zero()) scales.push_back(f.sqrt(f.inv(lambda)));
    }
    const FieldElement root_beta = f.sqrt(spec.beta);
    const std::size_t n = (scales.size()) * (f.size() + 1) + 1;
    const int m = f.degree();

    auto word = [&](FieldElement a1, FieldElement a2, unsigned b, unsigned c, BitMatrix& g, std::size_t r) {
        std::size_t col = 0;
        for (auto sc : scales) g.set(r, col++, (f.trace(f.add(f.mul(a1, sc), a2)) ^ c) & 1u);
        for (auto y : f.elements()) {
            const FieldElement t = f.add(f.add(y, f.mul(root_beta, f.sqrt(y))), f.one());
            for (auto sc : scales) {
                const unsigned v = f.trace(f.add(f.mul(a1, f.mul(sc, t)), f.mul(a2, y))) ^ b ^ c;
                g.set(r, col++, v & 1u);
            }
        }
        g.set(r, col, (f.trace(a1) ^ c) & 1u);
    };

    BitMatrix g(2 * static_cast<std::size_t>(m) + 2, n);
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) word(FieldElement{1u << i}, f.zero(), 0, 0, g, r++);
    for (int i = 0; i < m; ++i) word(f.zero(), FieldElement{1u << i}, 0, 0, g, r++);
    word(f.zero(), f.zero(), 1, 0, g, r++);
    word(f.zero(), f.zero(), 0, 1, g, r++);
    return BinaryCode(g);
}

// ---------------------------------------------------------------------------
// The (q+1)-arc in PG(3, q)

struct PG3ArcSpec {
    Field field;
    int h = 1;  // exponent in x^{2^h + 1}
};

inline PG3ArcSpec make_pg3_spec(const Field& f, int h) {
    if (h < 1) throw std::invalid_argument("exponent h must be positive, got " + std::to_string(h));
    if (std::gcd(f.degree(), h) != 1) {
        throw std::invalid_argument("gcd(m, h) = gcd(" + std::to_string(f.degree()) + ", " + std::to_string(h) +
                                    ") must be 1");
    }
    return PG3ArcSpec{f, h};
}

struct PG3Arc {
    std::vector<ProjPoint> points;  // x in integer-encoding order, then (1, 0, 0, 0)
    LinearCodeQ code;               // C(A), 4 x (q + 1)
};

/// {(x^{2^h+1}, x^{2^h}, x, 1) : x in GF(q)} together with (1, 0, 0, 0).
inline PG3Arc pg3_arc(const PG3ArcSpec& spec) {
    const Field& f = spec.field;
    if (spec.h < 1 || std::gcd(f.degree(), spec.h) != 1) throw std::invalid_argument("gcd(m, h) must be 1");
    std::vector<ProjPoint> pts;
    for (auto x : f.elements()) {
        const FieldElement xh = f.frobenius(x, spec.h);
        pts.push_back(ProjPoint{{f.mul(xh, x), xh, x, f.one()}});
    }
    pts.push_back(ProjPoint{{f.one(), f.zero(), f.zero(), f.zero()}});
    FieldGrid rows = detail::columns_to_rows(f, pts, 4);
    LinearCodeQ code(f, std::move(rows), pts.size());
    return PG3Arc{std::move(pts), std::move(code)};
}

/// Closed-form trace representation of the binary subfield code of the PG(3)
/// arc code: ((Tr(a x^{2^h+1} + b x) + c)_x, Tr(a)).
inline BinaryCode pg3_trace_code(const PG3ArcSpec& spec) {
    const Field& f = spec.field;
    const int m = f.degree();
    const std::size_t n = f.size() + 1;
    auto word = [&](FieldElement a, FieldElement b, unsigned c, BitMatrix& g, std::size_t r) {
        std::size_t col = 0;
        for (auto x : f.elements()) {
            const FieldElement v = f.add(f.mul(a, f.mul(f.frobenius(x, spec.h), x)), f.mul(b, x));
            g.set(r, col++, (f.trace(v) ^ c) & 1u);
        }
        g.set(r, col, f.trace(a) & 1u);
    };
    BitMatrix g(2 * static_cast<std::size_t>(m) + 1, n);
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) word(FieldElement{1u << i}, f.zero(), 0, g, r++);
    for (int i = 0; i < m; ++i) word(f.zero(), FieldElement{1u << i}, 0, g, r++);
    word(f.zero(), f.zero(), 1, g, r++);
    return BinaryCode(g);
}

// ---------------------------------------------------------------------------
// Incidence checks

/// Histogram of |line ∩ points| over all q^2 + q + 1 lines of PG(2, q).
inline std::map<std::size_t, std::uint64_t> line_intersection_profile(const Field& f,
                                                                      const std::vector<ProjPoint>& points) {
    if (f.degree() > 6) throw BudgetExceeded("line enumeration is limited to m <= 6");
    for (const auto& p : points) {
        if (p.coords.size() != 3) throw std::invalid_argument("line profiles need points of PG(2, q)");
    }
    std::map<std::size_t, std::uint64_t> profile;
    for (const auto& line : all_points(f, 2)) {
        std::size_t hits = 0;
        for (const auto& p : points) {
            FieldElement s = f.zero();
            for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(line.coords[i], p.coords[i]));
            hits += s.is_zero();
        }
        ++profile[hits];
    }
    return profile;
}

namespace detail {

inline bool independent4(const Field& f, std::array<std::array<FieldElement, 4>, 4> a) {
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && a[pivot][col].is_zero()) ++pivot;
        if (pivot == 4) return false;
        std::swap(a[col], a[pivot]);
        const FieldElement s = f.inv(a[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            if (a[r][col].is_zero()) continue;
            const FieldElement factor = f.mul(a[r][col], s);
            for (int c = col; c < 4; ++c) a[r][c] = f.add(a[r][c], f.mul(factor, a[col][c]));
        }
    }
    return true;
}

}  // namespace detail

/// True iff every 4 of the points of PG(3, q) are linearly independent.
inline bool general_position_check(const Field& f, const std::vector<ProjPoint>& points) {
    if (points.size() > 300) throw BudgetExceeded("general position check is limited to 300 points");
    for (const auto& p : points) {
        if (p.coords.size() != 4) throw std::invalid_argument("general position check needs points of PG(3, q)");
    }
    const std::size_t n = points.size();
    auto row = [&](std::size_t i) {
        return std::array<FieldElement, 4>{points[i].coords[0], points[i].coords[1], points[i].coords[2],
                                           points[i].coords[3]};
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (!detail::independent4(f, {row(a), row(b), row(c), row(d)})) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Arc dump format: header "m modulus dim n", then one point per line with
// coordinates as decimal element encodings. dim is the projective dimension.

struct ArcDump {
    int m = 0;
    std::uint32_t modulus = 0;
    std::size_t dim = 0;
    std::vector<ProjPoint> points;
};

inline void write_arc_dump(std::ostream& out, const Field& f, const std::vector<ProjPoint>& points) {
    const std::size_t dim = points.empty() ? 0 : points.front().coords.size() - 1;
    out << f.degree() << ' ' << f.modulus() << ' ' << dim << ' ' << points.size() << '\n';
    for (const auto& p : points) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) out << (i ? " " : "") << p.coords[i].bits;
        out << '\n';
    }
}

inline ArcDump read_arc_dump(std::istream& in) {
    ArcDump d;
    std::size_t n = 0;
    if (!(in >> d.m >> d.modulus >> d.dim >> n)) throw std::invalid_argument("arc dump header must be \"m modulus dim n\"");
    const Field f = Field::build(d.m, d.modulus);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FieldElement> c(d.dim + 1);
        for (auto& x : c) {
            std::uint32_t v = 0;
            if (!(in >> v)) throw std::invalid_argument("arc dump truncated at point " + std::to_string(i));
            x = f.element(v);
        }
        d.points.push_back(ProjPoint{std::move(c)});
    }
    return d;
}

}  // namespace maxarc

#endif  // MAXARC_ARCS_HPP
