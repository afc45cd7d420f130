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

// Slow, independent reference computations used to derive expected values.
// Nothing here calls into the library's arithmetic kernels except where a
// FieldCtx is needed to hold the answer.

#ifndef APNFORGE_TESTS_ORACLES_HPP
#define APNFORGE_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "apnforge/apnforge.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline int deg(u64 a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }

/// Schoolbook product in GF(2)[x]; operands of degree < 32.
inline u64 clmul(u64 a, u64 b) {
    u64 r = 0;
    for (int k = 0; k < 32; ++k) {
        if ((b >> k) & 1U) r ^= a << k;
    }
    return r;
}

/// Remainder in GF(2)[x] by long division.
inline u64 mod(u64 a, u64 m) {
    const int dm = deg(m);
    while (deg(a) >= dm) a ^= m << (deg(a) - dm);
    return a;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return mod(clmul(a, b), m); }

/// Inverse modulo m by the extended Euclidean algorithm in GF(2)[x].
inline u64 inverse(u64 a, u64 m) {
    u64 r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        u64 q = 0, r = r0;
        while (deg(r) >= deg(r1)) {
            const int sh = deg(r) - deg(r1);
            q ^= u64{1} << sh;
            r ^= r1 << sh;
        }
        const u64 s = s0 ^ clmul(q, s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    return r0 == 1 ? mod(s0, m) : 0;
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1 .. deg/2.
inline bool gf2_irreducible(u64 f) {
    const int n = deg(f);
    if (n < 1) return false;
    for (u64 g = 2; deg(g) <= n / 2; ++g) {
        if (mod(f, g) == 0) return false;
    }
    return true;
}

/// Moebius function.
inline int mobius(u64 n) {
    int mu = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

/// Number of monic irreducible polynomials of degree n over GF(q).
inline long long necklace(u64 q, u64 n) {
    long long sum = 0;
    for (u64 d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long long p = 1;
        for (u64 k = 0; k < n / d; ++k) p *= static_cast<long long>(q);
        sum += mobius(d) * p;
    }
    return sum / static_cast<long long>(n);
}

// Polynomials over a small field GF(2^m), m <= 16, with coefficients as
// bit patterns and oracle arithmetic.
struct SmallField {
    int m;
    u64 modulus;
    u64 mul(u64 a, u64 b) const { return m == 1 ? (a & b) : mulmod(a, b, modulus); }
    u64 inv(u64 a) const { return m == 1 ? a : inverse(a, modulus); }
};

using Poly = std::vector<u64>;  // low degree first, no trailing zeros

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mod(const SmallField& f, Poly a, const Poly& b) {
    trim(a);
    const u64 il = f.inv(b.back());
    while (a.size() >= b.size()) {
        const u64 c = f.mul(a.back(), il);
        const std::size_t sh = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] ^= f.mul(c, b[j]);
        trim(a);
    }
    return a;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1 .. deg/2.
inline bool irreducible_by_trial(const SmallField& f, const Poly& p) {
    const int n = static_cast<int>(p.size()) - 1;
    const u64 q = u64{1} << f.m;
    for (int d = 1; d <= n / 2; ++d) {
        u64 count = 1;
        for (int k = 0; k < d; ++k) count *= q;
        for (u64 idx = 0; idx < count; ++idx) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            g[static_cast<std::size_t>(d)] = 1;
            u64 v = idx;
            for (int k = 0; k < d; ++k) {
                g[static_cast<std::size_t>(k)] = v % q;
                v /= q;
            }
            if (poly_mod(f, p, g).empty()) return false;
        }
    }
    return true;
}

/// Delta of sum c x^e expanded term by term: (x + y)^e has the monomials
/// x^j y^(e-j) with j a submask of e (Lucas), and the two end terms cancel
/// against f(x) + f(y).
inline apnforge::BiPoly delta_by_expansion(const apnforge::FieldCtx& k,
                                           const std::vector<std::pair<apnforge::FieldElem, u64>>& terms) {
    apnforge::BiPoly out(k);
    for (const auto& [c, e] : terms) {
        for (u64 j = (e - 1) & e; j != 0; j = (j - 1) & e) out.add_term(c, j, e - j);
    }
    return out;
}

/// Multiplicity of the affine point (a, b) on P, from the Hasse-derivative
/// expansion of P(x + a, y + b): the coefficient of x^u y^v is
/// sum C(A, u) C(B, v) c_AB a^(A-u) b^(B-v), binomials taken mod 2.
inline u64 affine_multiplicity(const std::map<std::pair<u64, u64>, apnforge::FieldElem>& terms,
                               const apnforge::FieldElem& a, const apnforge::FieldElem& b) {
    std::map<std::pair<u64, u64>, apnforge::FieldElem> shifted;
    for (const auto& [ab, c] : terms) {
        const auto [A, B] = ab;
        for (u64 u = 0; u <= A; ++u) {
            if ((u & A) != u) continue;
            for (u64 v = 0; v <= B; ++v) {
                if ((v & B) != v) continue;
                const auto val = c * a.pow(A - u) * b.pow(B - v);
                auto it = shifted.find({u, v});
                if (it == shifted.end()) {
                    shifted.emplace(std::make_pair(u, v), val);
                } else {
                    it->second += val;
                }
            }
        }
    }
    u64 best = ~u64{0};
    for (const auto& [uv, c] : shifted) {
        if (!c.is_zero()) best = std::min(best, uv.first + uv.second);
    }
    return best;
}

/// Multiplicity of [1 : b : 0] on the degree-D homogenization of P: in the
/// chart x = 1 the curve is sum c y^B z^(D-A-B), at (y, z) = (b, 0).
inline u64 infinity_multiplicity_x_chart(const apnforge::BiPoly& p, u64 D, const apnforge::Embedding& emb,
                                         const apnforge::FieldElem& b) {
    std::map<std::pair<u64, u64>, apnforge::FieldElem> t;
    for (const auto& [mono, c] : p.terms()) t.emplace(std::make_pair(mono.y, D - mono.x - mono.y), emb(c));
    return affine_multiplicity(t, b, emb.target().zero());
}

/// Multiplicity of [0 : 1 : 0]: chart y = 1, curve sum c x^A z^(D-A-B) at
/// the origin.
inline u64 infinity_multiplicity_y_chart(const apnforge::BiPoly& p, u64 D) {
    std::map<std::pair<u64, u64>, apnforge::FieldElem> t;
    for (const auto& [mono, c] : p.terms()) t.emplace(std::make_pair(mono.x, D - mono.x - mono.y), c);
    const auto z = p.field().zero();
    return affine_multiplicity(t, z, z);
}

/// Differential uniformity by the definition, with oracle multiplication;
/// f given by (coefficient bits, exponent) on GF(2^m), m <= 12.
inline u64 du_by_definition(const SmallField& K, const std::vector<std::pair<u64, u64>>& f) {
    const u64 n = u64{1} << K.m;
    auto pw = [&](u64 x, u64 e) {
        u64 r = 1;
        while (e != 0) {
            if (e & 1U) r = K.mul(r, x);
            x = K.mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::vector<u64> val(n, 0);
    for (u64 x = 0; x < n; ++x) {
        for (const auto& [c, e] : f) val[x] ^= K.mul(c, pw(x, e));
    }
    u64 best = 0;
    std::vector<u64> hist(n);
    for (u64 a = 1; a < n; ++a) {
        std::fill(hist.begin(), hist.end(), 0);
        for (u64 x = 0; x < n; ++x) best = std::max(best, ++hist[val[x ^ a] ^ val[x]]);
    }
    return best;
}

/// Zeros of f(x+y) + f(x) + f(y) with x, y nonzero and distinct, by the
/// double loop.
inline u64 off_diagonal_by_definition(const SmallField& K, const std::vector<std::pair<u64, u64>>& f) {
    const u64 n = u64{1} << K.m;
    auto pw = [&](u64 x, u64 e) {
        u64 r = 1;
        while (e != 0) {
            if (e & 1U) r = K.mul(r, x);
            x = K.mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::vector<u64> val(n, 0);
    for (u64 x = 0; x < n; ++x) {
        for (const auto& [c, e] : f) val[x] ^= K.mul(c, pw(x, e));
    }
    u64 count = 0;
    for (u64 x = 1; x < n; ++x) {
        for (u64 y = 1; y < n; ++y) {
            if (x != y && (val[x ^ y] ^ val[x] ^ val[y]) == 0) ++count;
        }
    }
    return count;
}

}  // namespace oracle

#endif  // APNFORGE_TESTS_ORACLES_HPP
