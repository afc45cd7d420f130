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
#include "apnforge/polyalg.hpp"
#include "oracles.hpp"

namespace apnforge {
namespace {

UniPoly from_bits(const FieldCtx& k, std::uint64_t bits) {
    std::vector<FieldElem> c;
    for (int j = 0; j < 64 && (bits >> j) != 0; ++j) c.push_back(((bits >> j) & 1U) != 0 ? k.one() : k.zero());
    return UniPoly(k, std::move(c));
}

UniPoly random_poly(const FieldCtx& k, int deg, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    for (int j = 0; j < deg; ++j) c.push_back(k.random(rng));
    c.push_back(k.random_nonzero(rng));
    return UniPoly(k, std::move(c));
}

UniPoly random_irreducible(const FieldCtx& k, int deg, std::mt19937_64& rng) {
    for (;;) {
        auto p = random_poly(k, deg, rng).monic();
        if (is_irreducible(p)) return p;
    }
}

TEST(Gcd, Basics) {
    const Field k = make_field(1);
    const UniPoly f = from_bits(*k, 0b101), g = from_bits(*k, 0b11);
    EXPECT_EQ(poly_gcd(f, g), g);
    EXPECT_EQ(poly_gcd(f, UniPoly(*k)), f.monic());
    const Field k10 = make_field(10);
    const UniPoly h = UniPoly(*k10, {k10->gen_power(3), k10->gen_power(7)});
    EXPECT_EQ(poly_gcd(h, UniPoly(*k10)), h.monic());
    EXPECT_THROW(poly_gcd(f, h), FieldMismatch);
}

TEST(Gcd, DistinctIrreduciblesAreCoprime) {
    const Field k = make_field(6);
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const UniPoly a = random_irreducible(*k, 3, rng), b = random_irreducible(*k, 5, rng);
        EXPECT_TRUE(poly_gcd(a, b).is_one());
        const UniPoly c = random_poly(*k, 4, rng);
        EXPECT_EQ(poly_gcd(a * c, a * b), a) << "common factor survives";
    }
}

TEST(Division, RoundTrip) {
    std::mt19937_64 rng(2);
    for (int m : {1, 3, 10, 70}) {
        const Field k = make_field(m);
        for (int n = 0; n < 30; ++n) {
            const UniPoly a = random_poly(*k, 40, rng), b = random_poly(*k, 7, rng);
            const auto [q, r] = divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
        EXPECT_THROW(divmod(from_bits(*k, 3), UniPoly(*k)), DivisionByZero);
    }
}

TEST(Powmod, Examples) {
    const Field k = make_field(4);
    std::mt19937_64 rng(3);
    const UniPoly f = random_irreducible(*k, 5, rng);
    const UniPoly x = UniPoly::x(*k);
    EXPECT_EQ(powmod(x, BigUint(1), f), x % f);
    EXPECT_TRUE(powmod(random_poly(*k, 3, rng), BigUint(0), f).is_one());
    // x^(q^deg f) = x modulo an irreducible f, q = 2^4.
    EXPECT_EQ(powmod(x, BigUint::pow2(4 * 5), f), x);
    EXPECT_NE(powmod(x, BigUint::pow2(4 * 2), f), x);
    EXPECT_THROW(powmod(x, BigUint(3), UniPoly::constant(k->one())), InvalidArgument);
}

TEST(Irreducible, Examples) {
    const Field k = make_field(1);
    EXPECT_TRUE(is_irreducible(from_bits(*k, 0b111)));
    EXPECT_FALSE(is_irreducible(from_bits(*k, 0b101)));
    EXPECT_THROW(is_irreducible(from_bits(*k, 1)), InvalidArgument);
}

TEST(Irreducible, AgreesWithTrialDivisionOverGF2) {
    const Field k = make_field(1);
    for (std::uint64_t bits = 2; bits < 128; ++bits) {
        EXPECT_EQ(is_irreducible(from_bits(*k, bits)), oracle::gf2_irreducible(bits)) << bits;
    }
}

TEST(Irreducible, AgreesWithTrialDivisionOverGF4) {
    const Field k = make_field(2);
    const oracle::SmallField sf{2, k->modulus().words()[0]};
    for (int d = 1; d <= 3; ++d) {
        const std::uint64_t count = std::uint64_t{1} << (2 * d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            oracle::Poly p(static_cast<std::size_t>(d) + 1, 0);
            std::vector<FieldElem> c;
            std::uint64_t v = idx;
            for (int j = 0; j < d; ++j) {
                p[static_cast<std::size_t>(j)] = v % 4;
                c.push_back(k->element(v % 4));
                v /= 4;
            }
            p[static_cast<std::size_t>(d)] = 1;
            c.push_back(k->one());
            EXPECT_EQ(is_irreducible(UniPoly(*k, c)), oracle::irreducible_by_trial(sf, p));
        }
    }
}

TEST(Irreducible, CountsMatchNecklaceFormula) {
    const std::vector<std::pair<int, int>> cases = {{1, 1}, {1, 6}, {1, 10}, {1, 13}, {2, 4},
                                                    {2, 7}, {4, 3}, {4, 4}, {8, 2}};
    for (const auto& [m, n] : cases) {
        const Field k = make_field(m);
        const std::uint64_t q = std::uint64_t{1} << m;
        std::uint64_t total = 1;
        for (int j = 0; j < n; ++j) total *= q;
        long long found = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<FieldElem> c;
            std::uint64_t v = idx;
            for (int j = 0; j < n; ++j) {
                c.push_back(k->element(v % q));
                v /= q;
            }
            c.push_back(k->one());
            if (is_irreducible(UniPoly(*k, std::move(c)))) ++found;
        }
        EXPECT_EQ(found, oracle::necklace(q, static_cast<std::uint64_t>(n))) << "q=" << q << " n=" << n;
    }
}

TEST(Factor, SquareOfLinear) {
    const Field k = make_field(1);
    const auto fac = factor_univariate(from_bits(*k, 0b101));
    ASSERT_EQ(fac.factors.size(), 1U);
    EXPECT_EQ(fac.factors[0].poly, from_bits(*k, 0b11));
    EXPECT_EQ(fac.factors[0].multiplicity, 2);
    EXPECT_THROW(factor_univariate(from_bits(*k, 1)), InvalidArgument);
}

TEST(Factor, RecoversConstructedProduct) {
    std::mt19937_64 rng(4);
    for (int m : {1, 2, 10}) {
        const Field k = make_field(m);
        for (int n = 0; n < 10; ++n) {
            std::vector<UniPoly> parts = {random_irreducible(*k, 2, rng), random_irreducible(*k, 5, rng),
                                          random_irreducible(*k, 9, rng)};
            std::sort(parts.begin(), parts.end());
            const auto fac = factor_univariate(parts[0] * parts[1] * parts[2]);
            ASSERT_EQ(fac.factors.size(), 3U);
            for (int j = 0; j < 3; ++j) EXPECT_EQ(fac.factors[j].poly, parts[j]);
        }
    }
}

TEST(Factor, ReassemblesRandomPolynomials) {
    std::mt19937_64 rng(5);
    for (int m : {1, 2, 10}) {
        const Field k = make_field(m);
        for (int n = 0; n < 200; ++n) {
            const UniPoly p = random_poly(*k, 1 + static_cast<int>(rng() % 64), rng);
            const auto fac = factor_univariate(p, rng());
            UniPoly prod = UniPoly::constant(fac.unit);
            for (const auto& f : fac.factors) {
                EXPECT_TRUE(is_irreducible(f.poly));
                EXPECT_TRUE(f.poly.lead().is_one());
                for (int e = 0; e < f.multiplicity; ++e) prod *= f.poly;
            }
            EXPECT_EQ(prod, p);
            const auto prof = factor_degree_profile(p);
            EXPECT_EQ(prof.degrees, fac.degree_profile());
            const bool sqf = std::all_of(fac.factors.begin(), fac.factors.end(),
                                         [](const Factor& f) { return f.multiplicity == 1; });
            EXPECT_EQ(prof.squarefree, sqf);
        }
    }
}

TEST(Factor, SeedDoesNotChangeTheResult) {
    const Field k = make_field(8);
    std::mt19937_64 rng(6);
    const UniPoly p = random_poly(*k, 48, rng);
    const auto a = factor_univariate(p, 1), b = factor_univariate(p, 999);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t j = 0; j < a.factors.size(); ++j) EXPECT_EQ(a.factors[j].poly, b.factors[j].poly);
}

TEST(Factor, WorkedSpecializationHasFactorOfDegree53) {
    const Field k = make_field(10);
    const QuadBinomial f(1, 2, 3, k->gen_power(374));
    const BiPoly h = construct_H(f).h;
    const UniPoly g(*k, {k->one(), k->gen_power(5), k->one()});
    const auto sub = substitute_y(h, g);
    ASSERT_EQ(sub.value.degree(), 63);
    const auto prof = factor_univariate(sub.value).degree_profile();
    EXPECT_NE(std::find(prof.begin(), prof.end(), 53), prof.end());
    const UniPoly g17(*k, {k->one(), k->gen_power(17), k->one()});
    EXPECT_TRUE(is_irreducible(substitute_y(h, g17).value));
}

TEST(Roots, FindsEveryRoot) {
    const Field k = make_field(7);
    std::mt19937_64 rng(8);
    std::vector<FieldElem> want;
    UniPoly p = UniPoly::constant(k->one());
    for (int j = 0; j < 6; ++j) {
        const FieldElem r = k->random(rng);
        if (std::find(want.begin(), want.end(), r) != want.end()) continue;
        want.push_back(r);
        p *= UniPoly(*k, {r, k->one()});
    }
    p *= random_irreducible(*k, 4, rng);
    auto got = find_roots(p);
    std::sort(want.begin(), want.end(), [](const FieldElem& a, const FieldElem& b) { return a.low_word() < b.low_word(); });
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t j = 0; j < got.size(); ++j) EXPECT_EQ(got[j], want[j]);
}

TEST(Text, RoundTrip) {
    const Field k = make_field(10);
    std::mt19937_64 rng(9);
    for (int n = 0; n < 20; ++n) {
        const UniPoly p = random_poly(*k, 12, rng);
        EXPECT_EQ(parse_poly(*k, format_poly(p)), p);
        EXPECT_EQ(uni_from_json(*k, to_json(p)), p);
    }
    EXPECT_EQ(parse_poly(*k, "x^2 + a^5*x + 1"), UniPoly(*k, {k->one(), k->gen_power(5), k->one()}));
    EXPECT_THROW(parse_poly(*k, "x^^2"), ParseError);
}

}  // namespace
}  // namespace apnforge
