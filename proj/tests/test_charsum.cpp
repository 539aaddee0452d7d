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


#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "maxarc/arcs.hpp"
#include "maxarc/charsum.hpp"

namespace maxarc {
namespace {

TEST(Weil, Orthogonality) {
    const Field f = Field::build(5, 37);
    const auto r = weil_affine(f, {f.one(), f.zero()}, f.zero(), f.one());  // f(x) = x
    EXPECT_EQ(r.brute, 0);
    EXPECT_TRUE(r.agrees);
}

TEST(Weil, ConstantPolynomial) {
    const Field f = Field::build(4);
    for (auto a : f.elements()) {
        for (auto b : f.elements()) {
            if (b.is_zero()) continue;
            const auto r = weil_affine(f, {f.zero()}, a, b);
            EXPECT_EQ(r.brute, (f.trace(f.mul(a, b)) ? -1 : 1) * 16);
            EXPECT_TRUE(r.agrees);
        }
    }
}

TEST(Weil, TraceKernelPolynomial) {
    const Field f = Field::build(4);
    const auto r = weil_affine(f, {f.one(), f.one(), f.zero()}, f.zero(), f.one());  // x^2 + x
    EXPECT_TRUE(r.condition);
    EXPECT_EQ(r.brute, 16);
    EXPECT_EQ(r.predicted, 16);
    EXPECT_THROW(weil_affine(f, {f.one()}, f.zero(), f.zero()), std::invalid_argument);
}

TEST(Weil, DichotomyHoldsForSmallAffinePolynomials) {
    // every a_1 x^2 + a_0 x + a over GF(8) and GF(16), all b != 0
    for (int m : {3, 4}) {
        const Field f = Field::build(m);
        const auto q = static_cast<std::int64_t>(f.size());
        for (auto a1 : f.elements()) {
            for (auto a0 : f.elements()) {
                for (auto b : f.elements()) {
                    if (b.is_zero()) continue;
                    const auto r = weil_affine(f, {a1, a0}, FieldElement{3}, b);
                    EXPECT_TRUE(r.brute == 0 || r.brute == q || r.brute == -q);
                    ASSERT_TRUE(r.agrees) << "m=" << m << " a1=" << a1.bits << " a0=" << a0.bits << " b=" << b.bits;
                }
            }
        }
    }
    std::mt19937_64 rng(67);
    for (int m : {5, 6}) {
        const Field f = Field::build(m);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
        for (int trial = 0; trial < 400; ++trial) {
            const FieldElement b{1 + pick(rng) % (f.size() - 1)};
            const auto r = weil_affine(f, {FieldElement{pick(rng)}, FieldElement{pick(rng)}, FieldElement{pick(rng)}},
                                       FieldElement{pick(rng)}, b);
            ASSERT_TRUE(r.agrees);
        }
    }
}

TEST(Coulter, SmallValues) {
    const Field f = Field::build(5, 37);
    EXPECT_EQ(coulter_sum(f, f.zero(), f.zero(), 1), 32);
    EXPECT_EQ(coulter_sum(f, f.one(), f.zero(), 1), 0);
    for (auto a : f.elements()) {
        for (auto b : f.elements()) {
            if (a.is_zero() || b.is_zero()) continue;
            const auto s = coulter_sum(f, a, b, 1);
            EXPECT_TRUE(s == 0 || s == 8 || s == -8);
        }
    }
}

TEST(Coulter, PredictionExamples) {
    const Field f5 = Field::build(5, 37);
    for (auto b : f5.elements()) {
        if (f5.trace(b) == 0) {
            EXPECT_EQ(coulter_predict(f5, f5.one(), b, 1).values, (std::vector<std::int64_t>{0}));
        }
    }
    const Field f16 = Field::build(4);
    // a = 1 is a (2^e + 1)-th power for every e
    const auto p = coulter_predict(f16, f16.one(), f16.zero(), 2);
    EXPECT_EQ(p.values, (std::vector<std::int64_t>{16}));
    EXPECT_FALSE(p.ambiguous);
    EXPECT_EQ(coulter_sum(f16, f16.one(), f16.zero(), 2), 16);
    EXPECT_THROW(coulter_predict(f16, f16.zero(), f16.one(), 1), std::invalid_argument);
}

TEST(Coulter, BruteValueAlwaysInPredictedSet) {
    for (int m = 2; m <= 6; ++m) {
        const Field f = Field::build(m);
        for (int h = 1; h <= m; ++h) {
            std::size_t ambiguous = 0;
            for (auto a : f.elements()) {
                if (a.is_zero()) continue;
                for (auto b : f.elements()) {
                    const CharSumReport r = coulter_report(f, a, b, h);
                    ASSERT_TRUE(r.agrees) << "m=" << m << " h=" << h << " a=" << a.bits << " b=" << b.bits;
                    EXPECT_EQ(r.brute_value % 2, 0);
                    ambiguous += r.predicted.ambiguous;
                }
            }
            const int e = std::gcd(m, h);
            if ((m / e) % 2 == 1) {
                EXPECT_EQ(ambiguous, 0u);
            }
        }
    }
}

TEST(Coulter, PowerTest) {
    const Field f = Field::build(4);
    // gcd(2^2 + 1, 15) = 5: fifth powers are exactly the cube roots of unity and 1
    std::size_t powers = 0;
    for (auto a : f.elements()) {
        if (!a.is_zero()) powers += is_power_2e1(f, a, 2);
    }
    EXPECT_EQ(powers, 3u);
}

TEST(CountN, Identity) {
    for (int m = 2; m <= 5; ++m) {
        const Field f = Field::build(m);
        for (int h = 1; h < m; ++h) {
            if (std::gcd(m, h) != 1) continue;
            for (auto a : f.elements()) {
                for (auto b : f.elements()) {
                    const auto n = static_cast<std::int64_t>(pg3_count_N(f, a, b, h));
                    EXPECT_EQ(2 * n, static_cast<std::int64_t>(f.size()) + coulter_sum(f, a, b, h));
                }
            }
        }
    }
}

TEST(CountN, PG3Values) {
    const Field f = Field::build(5, 37);
    EXPECT_EQ(pg3_count_N(f, f.zero(), f.zero(), 1), 32u);
    for (auto b : f.elements()) {
        if (!b.is_zero()) {
            EXPECT_EQ(pg3_count_N(f, f.zero(), b, 1), 16u);
        }
    }
    for (auto a : f.elements()) {
        for (auto b : f.elements()) {
            if (a.is_zero() && b.is_zero()) continue;
            EXPECT_LT(pg3_count_N(f, a, b, 1), 32u);
        }
    }
}

TEST(CountN, DennistonTrivialTuples) {
    const Field f = Field::build(4);
    const auto spec = make_denniston_spec(f, 2);
    const auto h = subgroup_span(f, spec.subgroup_basis);
    EXPECT_EQ(denniston_count_N(f, h, spec.beta, f.zero(), f.zero(), 0), 16u * 3u);
    EXPECT_EQ(denniston_count_N(f, h, spec.beta, f.zero(), f.zero(), 1), 0u);
}

TEST(CountN, DennistonMaximumOnlyAtZero) {
    for (auto [m, s] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
        const Field f = Field::build(m);
        const auto spec = make_denniston_spec(f, s);
        const auto h = subgroup_span(f, spec.subgroup_basis);
        const std::uint64_t full = std::uint64_t{f.size()} * (h.size() - 1);
        for (auto a1 : f.elements()) {
            for (auto a2 : f.elements()) {
                for (unsigned b : {0u, 1u}) {
                    const bool zero = a1.is_zero() && a2.is_zero() && b == 0;
                    EXPECT_EQ(denniston_count_N(f, h, spec.beta, a1, a2, b) == full, zero)
                        << "m=" << m << " s=" << s << " a1=" << a1.bits << " a2=" << a2.bits << " b=" << b;
                }
            }
        }
    }
}

}  // namespace
}  // namespace maxarc
