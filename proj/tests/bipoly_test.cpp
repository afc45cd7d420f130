/*
   Copyright 2026 The apnforge Authors

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

#include <random>

#include "apnforge/apncore.hpp"
#include "apnforge/bipoly.hpp"
#include "oracles.hpp"

namespace apnforge {
namespace {

BiPoly random_bipoly(const FieldCtx& k, int terms, int maxdeg, std::mt19937_64& rng) {
    BiPoly p(k);
    for (int j = 0; j < terms; ++j) {
        const auto a = rng() % static_cast<std::uint64_t>(maxdeg + 1);
        const auto b = rng() % static_cast<std::uint64_t>(maxdeg + 1 - a);
        p.add_term(k.random_nonzero(rng), a, b);
    }
    return p;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, FieldElem> term_map(const BiPoly& p) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, FieldElem> t;
    for (const auto& [mono, c] : p.terms()) t.emplace(std::make_pair(mono.x, mono.y), c);
    return t;
}

TEST(Substitute, LinearExample) {
    const Field k = make_field(1);
    const BiPoly p = BiPoly::x(*k) + BiPoly::y(*k);
    const UniPoly g(*k, {k->one(), k->zero(), k->one()});
    const auto sub = substitute_y(p, g);
    EXPECT_EQ(sub.value, UniPoly(*k, {k->one(), k->one(), k->one()}));
    EXPECT_TRUE(sub.no_collapse);
    EXPECT_EQ(sub.weighted_degree, 2U);
}

TEST(Substitute, DiagonalCollapses) {
    const Field k = make_field(4);
    const BiPoly u = BiPoly::x(*k) + BiPoly::y(*k);
    const auto sub = substitute_y(u, UniPoly::x(*k));
    EXPECT_TRUE(sub.value.is_zero());
    EXPECT_FALSE(sub.no_collapse);
}

TEST(Substitute, WorkedCurveHasDegree63) {
    const Field k = make_field(10);
    const BiPoly h = construct_H(QuadBinomial(1, 2, 3, k->gen_power(374))).h;
    const auto sub = substitute_y(h, UniPoly(*k, {k->one(), k->gen_power(5), k->one()}));
    EXPECT_EQ(sub.value.degree(), 63);
    EXPECT_TRUE(sub.no_collapse);
}

TEST(Substitute, AgreesWithEvaluation) {
    const Field k = make_field(8);
    std::mt19937_64 rng(1);
    for (int n = 0; n < 50; ++n) {
        const BiPoly p = random_bipoly(*k, 12, 9, rng);
        const FieldElem x0 = k->random(rng), y0 = k->random(rng);
        const auto sub = substitute_y(p, UniPoly::constant(y0));
        EXPECT_EQ(p.evaluate(x0, y0), sub.value(x0));
    }
}

TEST(Substitute, RejectsMixedFields) {
    const Field a = make_field(4), b = make_field(4);
    EXPECT_THROW(substitute_y(BiPoly::x(*a), UniPoly::x(*b)), FieldMismatch);
}

TEST(ExactDiv, Basics) {
    const Field k = make_field(3);
    std::mt19937_64 rng(2);
    const BiPoly p = random_bipoly(*k, 6, 5, rng);
    EXPECT_EQ(exact_div(p, BiPoly::constant(k->one())), p);
    EXPECT_THROW(exact_div(BiPoly::x(*k) + BiPoly::y(*k), BiPoly::x(*k)), NotDivisible);
    EXPECT_THROW(exact_div(p, BiPoly(*k)), DivisionByZero);
}

TEST(ExactDiv, RoundTrip) {
    const Field k = make_field(6);
    std::mt19937_64 rng(3);
    for (int n = 0; n < 40; ++n) {
        const BiPoly a = random_bipoly(*k, 8, 7, rng), b = random_bipoly(*k, 5, 4, rng);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(exact_div(a * b, b), a);
        EXPECT_EQ(b * exact_div(a * b, b), a * b);
    }
}

TEST(ExactDiv, WorkedQuotient) {
    const Field k = make_field(10);
    const QuadBinomial f(1, 2, 3, k->gen_power(374));
    const BiPoly h = exact_div(construct_F(f), construct_U(f));
    EXPECT_EQ(h.total_degree(), 33);
}

TEST(Homogeneous, Components) {
    const Field k = make_field(4);
    const auto c = homogeneous_components(BiPoly::constant(k->generator()));
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c.begin()->first, 0U);
    const BiPoly p = BiPoly::monomial(k->one(), 3, 0) + BiPoly::monomial(k->one(), 1, 2);
    const auto cp = homogeneous_components(p);
    ASSERT_EQ(cp.size(), 1U);
    EXPECT_EQ(cp.at(3), p);
    const auto h = construct_H(QuadBinomial(2, 1, 3, k->generator())).components;
    ASSERT_EQ(h.size(), 2U);
    EXPECT_EQ(h.begin()->first, 2U);
    EXPECT_EQ(h.rbegin()->first, 15U);
}

TEST(Homogeneous, Reassemble) {
    const Field k = make_field(5);
    std::mt19937_64 rng(4);
    for (int n = 0; n < 30; ++n) {
        const BiPoly p = random_bipoly(*k, 20, 12, rng);
        BiPoly sum(*k);
        for (const auto& [d, part] : homogeneous_components(p)) {
            for (const auto& [mono, c] : part.terms()) EXPECT_EQ(mono.total(), d);
            sum += part;
        }
        EXPECT_EQ(sum, p);
    }
}

TEST(Cap, ExponentsAboveTheCapAreRejected) {
    const Field k = make_field(2);
    BiPoly p(*k, 16);
    EXPECT_THROW(p.add_term(k->one(), 17, 0), CapExceeded);
    EXPECT_THROW(BiPoly::monomial(k->one(), kDefaultExponentCap + 1, 0), CapExceeded);
}

TEST(ProjPoint, NormalizesFirstNonzeroCoordinate) {
    const Field k = make_field(4);
    const FieldElem a = k->generator();
    const ProjPoint p(a, a * a, k->zero());
    EXPECT_TRUE(p.x().is_one());
    EXPECT_EQ(p.y(), a);
    EXPECT_EQ(p.chart(), 0);
    EXPECT_TRUE(p.at_infinity());
    EXPECT_EQ(ProjPoint(k->zero(), a, a), ProjPoint(k->zero(), k->one(), k->one()));
    EXPECT_THROW(ProjPoint(k->zero(), k->zero(), k->zero()), InvalidArgument);
}

TEST(Multiplicity, NonsingularPoint) {
    const Field k = make_field(1);
    const BiPoly p = BiPoly::x(*k) + BiPoly::y(*k);
    EXPECT_EQ(multiplicity_at(p, ProjPoint::affine(k->one(), k->one())), 1U);
    EXPECT_EQ(multiplicity_at(p, ProjPoint::affine(k->one(), k->zero())), 0U);
}

TEST(Multiplicity, WorkedCurvePoints) {
    const Field k = make_field(10);
    const BiPoly h = construct_H(QuadBinomial(1, 2, 3, k->gen_power(374))).h;
    // The singular point "(1, 0)" of the worked example is the point at
    // infinity [1:0:0]; the affine point [1:0:1] is not on the curve.
    EXPECT_EQ(multiplicity_at(h, ProjPoint(k->one(), k->zero(), k->zero())), 3U);
    EXPECT_EQ(multiplicity_at(h, ProjPoint(k->zero(), k->one(), k->zero())), 3U);
    EXPECT_EQ(multiplicity_at(h, ProjPoint::affine(k->one(), k->zero())), 0U);
    EXPECT_NE(h.evaluate(k->one(), k->zero()), k->zero());
}

TEST(Multiplicity, MatchesHasseExpansionOracle) {
    const Field k = make_field(4);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 40; ++n) {
        BiPoly p = random_bipoly(*k, 10, 8, rng);
        const FieldElem a = k->random(rng), b = k->random(rng);
        p += BiPoly::constant(p.evaluate(a, b));  // put (a, b) on the curve
        if (p.is_zero()) continue;
        const auto got = multiplicity_at(p, ProjPoint::affine(a, b));
        EXPECT_EQ(got, oracle::affine_multiplicity(term_map(p), a, b));
        EXPECT_GE(got, 1U);
    }
}

TEST(Multiplicity, PositiveExactlyOnTheCurve) {
    const Field k = make_field(3);
    std::mt19937_64 rng(6);
    const BiPoly p = random_bipoly(*k, 8, 6, rng) + BiPoly::constant(k->one());
    for (std::uint64_t x = 0; x < 8; ++x) {
        for (std::uint64_t y = 0; y < 8; ++y) {
            const auto m = multiplicity_at(p, ProjPoint::affine(k->element(x), k->element(y)));
            EXPECT_EQ(m >= 1, p.evaluate(k->element(x), k->element(y)).is_zero());
        }
    }
}

TEST(Multiplicity, SymmetricUnderSwap) {
    const Field k = make_field(6);
    std::mt19937_64 rng(7);
    const BiPoly h = construct_H(QuadBinomial(1, 1, 2, k->random_nonzero(rng))).h;
    EXPECT_EQ(h, h.swap_xy());
    for (int n = 0; n < 30; ++n) {
        const FieldElem a = k->random(rng), b = k->random(rng);
        EXPECT_EQ(multiplicity_at(h, ProjPoint::affine(a, b)), multiplicity_at(h, ProjPoint::affine(b, a)));
    }
}

TEST(Multiplicity, EmbedsIntoThePointField) {
    const Field k = make_field(2), big = make_field(6);
    const BiPoly h = construct_H(QuadBinomial(1, 2, 3, k->generator())).h;
    const Embedding e(*k, *big);
    for (std::uint64_t v = 0; v < 64; ++v) {
        const FieldElem b = big->element(v);
        if (!is_in_subfield(b, 3) && !b.is_zero()) continue;
        const auto got = multiplicity_at(h, ProjPoint(big->one(), b, big->zero()), 33);
        EXPECT_EQ(got, oracle::infinity_multiplicity_x_chart(h, 33, e, b));
    }
    EXPECT_THROW(multiplicity_at(h, ProjPoint::affine(k->one(), k->one()), 32), InvalidArgument);
}

TEST(Text, RoundTrip) {
    const Field k = make_field(10);
    std::mt19937_64 rng(8);
    for (int n = 0; n < 20; ++n) {
        const BiPoly p = random_bipoly(*k, 9, 10, rng);
        EXPECT_EQ(parse_bipoly(*k, format_bipoly(p)), p);
        EXPECT_EQ(bipoly_from_json(*k, to_json(p)), p);
    }
    const auto j = to_json(BiPoly::monomial(k->one(), 2, 1) + BiPoly::monomial(k->generator(), 0, 3));
    EXPECT_EQ(j.dump(), R"([[0,3,"0x2"],[2,1,"0x1"]])");
    EXPECT_THROW(parse_bipoly(*k, "x^2 ** y"), ParseError);
}

}  // namespace
}  // namespace apnforge
