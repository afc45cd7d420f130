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

#include "apnforge/embed.hpp"
#include "apnforge/gf2m.hpp"
#include "oracles.hpp"

namespace apnforge {
namespace {

TEST(Field, DefaultModulusForTenIsPinned) {
    const Field k = make_field(10);
    EXPECT_EQ(k->modulus().to_hex(), "0x409");
    EXPECT_TRUE(k->is_primitive());
    EXPECT_EQ(k->spec(), "10:0x409");
}

TEST(Field, DefaultModuliArePrimitiveAndLeast) {
    // Least primitive polynomial by brute force over odd bitstrings.
    for (int m = 2; m <= 16; ++m) {
        if (m == 10) continue;
        std::uint64_t least = 0;
        for (std::uint64_t cand = (std::uint64_t{1} << m) | 1U;; cand += 2) {
            if (!oracle::gf2_irreducible(cand)) continue;
            const std::uint64_t order = (std::uint64_t{1} << m) - 1;
            std::uint64_t p = 1, k = 0;
            do {
                p = oracle::mulmod(p, 2, cand);
                ++k;
            } while (p != 1);
            if (k == order) {
                least = cand;
                break;
            }
        }
        EXPECT_EQ(make_field(m)->modulus().to_hex(), Gf2Poly::from_u64(least).to_hex()) << "m=" << m;
    }
}

TEST(Field, RejectsReducibleModulus) {
    // x^10 + x^2 + 1 = (x^5 + x + 1)^2.
    EXPECT_FALSE(oracle::gf2_irreducible(0x405));
    EXPECT_THROW(make_field(10, Gf2Poly::from_u64(0x405)), InvalidArgument);
    EXPECT_THROW(make_field(10, Gf2Poly::from_u64(0x83)), InvalidArgument);
    EXPECT_THROW(make_field(0), InvalidArgument);
    EXPECT_THROW(make_field(1025), InvalidArgument);
    EXPECT_NO_THROW(make_field(1));
}

TEST(Field, ParseSpec) {
    EXPECT_EQ(parse_field_spec("10:0x409")->degree(), 10);
    EXPECT_EQ(parse_field_spec("5")->degree(), 5);
    EXPECT_THROW(parse_field_spec("x:0x409"), ParseError);
}

TEST(Element, SmallFieldProductsMatchOracle) {
    const Field k = make_field(3, Gf2Poly::from_u64(0xb));
    const FieldElem a = k->generator();
    EXPECT_EQ((a * a.square()).low_word(), oracle::mulmod(2, 4, 0xb));
    EXPECT_EQ((a * a.square()).low_word(), 0x3U);
    EXPECT_TRUE(a.pow(7).is_one());
    EXPECT_EQ(a.inv().low_word(), oracle::inverse(2, 0xb));
    EXPECT_EQ(a.inv().low_word(), 0x5U);
    EXPECT_THROW(k->zero().inv(), DivisionByZero);
    EXPECT_TRUE(k->one().inv().is_one());
}

TEST(Element, ProductsAndInversesMatchOracleOnRandomSamples) {
    std::mt19937_64 rng(7);
    for (int m : {2, 5, 8, 10, 13, 16, 20, 31}) {
        const Field k = make_field(m);
        const std::uint64_t mod = k->modulus().words()[0];
        for (int n = 0; n < 200; ++n) {
            const FieldElem a = k->random(rng), b = k->random(rng);
            EXPECT_EQ((a * b).low_word(), oracle::mulmod(a.low_word(), b.low_word(), mod));
            if (!a.is_zero()) {
                EXPECT_EQ(a.inv().low_word(), oracle::inverse(a.low_word(), mod));
            }
        }
    }
}

TEST(Element, FieldAxiomsOnSamples) {
    std::mt19937_64 rng(11);
    for (int m : {1, 4, 10, 64, 127, 300}) {
        const Field k = make_field(m);
        for (int n = 0; n < 50; ++n) {
            const FieldElem a = k->random(rng), b = k->random(rng), c = k->random(rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_TRUE((a + a).is_zero());
            EXPECT_EQ((a + b).square(), a.square() + b.square());
            EXPECT_EQ(a * k->one(), a);
            EXPECT_EQ(a.frobenius(m), a);
            EXPECT_EQ((a * b).frobenius(3 % m), a.frobenius(3 % m) * b.frobenius(3 % m));
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inv()).is_one());
            }
        }
    }
}

TEST(Element, Orders) {
    const Field k = make_field(10);
    EXPECT_EQ(element_order(k->one()), 1U);
    EXPECT_EQ(element_order(k->generator()), 1023U);
    EXPECT_EQ(element_order(k->gen_power(341)), 3U);
    EXPECT_THROW(element_order(k->zero()), DivisionByZero);
}

TEST(Element, SubfieldMembership) {
    const Field k = make_field(10);
    EXPECT_TRUE(is_in_subfield(k->one(), 1));
    EXPECT_TRUE(is_in_subfield(k->gen_power(33), 5));
    EXPECT_FALSE(is_in_subfield(k->generator(), 5));
    EXPECT_THROW(is_in_subfield(k->one(), 3), InvalidArgument);
    // a^(2^d) = a agrees with ord(a) | 2^d - 1.
    std::mt19937_64 rng(3);
    for (int n = 0; n < 200; ++n) {
        const FieldElem a = k->random_nonzero(rng);
        for (int d : {1, 2, 5, 10}) {
            EXPECT_EQ(is_in_subfield(a, d), ((std::uint64_t{1} << d) - 1) % element_order(a) == 0);
        }
    }
}

TEST(Element, Literals) {
    const Field k = make_field(10);
    EXPECT_EQ(parse_element(*k, "a^374"), k->gen_power(374));
    EXPECT_EQ(parse_element(*k, "a"), k->generator());
    EXPECT_EQ(parse_element(*k, " 0x3ff ").low_word(), 0x3ffU);
    EXPECT_EQ(parse_element(*k, "1f").low_word(), 0x1fU);
}

TEST(Element, LiteralErrors) {
    const Field k = make_field(10);
    EXPECT_THROW(parse_element(*k, "0x400"), ParseError);
    EXPECT_THROW(parse_element(*k, "a^x"), ParseError);
    EXPECT_THROW(parse_element(*k, ""), ParseError);
    const Field np = make_field(4, Gf2Poly::from_u64(0x1f));  // irreducible, not primitive
    EXPECT_FALSE(np->is_primitive());
    EXPECT_THROW(parse_element(*np, "a^3"), ParseError);
}

TEST(Element, MixedFieldsAreRejected) {
    const Field a = make_field(5), b = make_field(5);
    EXPECT_THROW(a->one() * b->one(), FieldMismatch);
}

TEST(Embed, FixesZeroAndOne) {
    const Field s = make_field(5), t = make_field(10);
    const Embedding e(*s, *t);
    EXPECT_TRUE(e(s->zero()).is_zero());
    EXPECT_TRUE(e(s->one()).is_one());
}

TEST(Embed, IsAHomomorphism) {
    const Field s = make_field(5), t = make_field(10);
    const Embedding e(*s, *t);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 100; ++n) {
        const FieldElem a = s->random(rng), b = s->random(rng);
        EXPECT_EQ(e(a * b), e(a) * e(b));
        EXPECT_EQ(e(a + b), e(a) + e(b));
        EXPECT_TRUE(is_in_subfield(e(a), 5));
    }
}

TEST(Embed, RootIsTheLeastRoot) {
    const Field s = make_field(3), t = make_field(12);
    const Embedding e(*s, *t);
    const std::uint64_t mod = s->modulus().words()[0];
    const std::uint64_t tm = t->modulus().words()[0];
    std::uint64_t least = 0;
    for (std::uint64_t v = 1; v < (1U << 12); ++v) {
        std::uint64_t acc = 0, p = 1;
        for (int k = 0; k <= 3; ++k) {
            if ((mod >> k) & 1U) acc ^= p;
            p = oracle::mulmod(p, v, tm);
        }
        if (acc == 0) {
            least = v;
            break;
        }
    }
    EXPECT_EQ(e.root().low_word(), least);
}

TEST(Embed, RejectsNonDivisorDegrees) {
    const Field s = make_field(3), t = make_field(10);
    EXPECT_THROW(Embedding(*s, *t), InvalidArgument);
    EXPECT_THROW(compositum_embed(s->one(), *t), InvalidArgument);
}

TEST(Embed, TowerAgreesWithDirectEmbedding) {
    // GF(2^2) -> GF(2^4) -> GF(2^8) versus GF(2^2) -> GF(2^8): both are
    // homomorphisms, so they agree up to a Frobenius twist of the image.
    const Field a = make_field(2), b = make_field(4), c = make_field(8);
    const Embedding ab(*a, *b), bc(*b, *c), ac(*a, *c);
    const FieldElem g = a->generator();
    const FieldElem via = bc(ab(g)), direct = ac(g);
    EXPECT_TRUE(via == direct || via == direct.frobenius(1));
    for (std::uint64_t v = 0; v < 4; ++v) {
        const FieldElem x = a->element(v);
        EXPECT_TRUE(is_in_subfield(bc(ab(x)), 2));
    }
}

}  // namespace
}  // namespace apnforge
