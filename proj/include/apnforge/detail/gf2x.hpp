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

// Polynomials over GF(2) packed into 64-bit words. Used to vet and search
// field moduli; element arithmetic lives in gf2m.hpp.

#ifndef APNFORGE_DETAIL_GF2X_HPP
#define APNFORGE_DETAIL_GF2X_HPP

#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apnforge/detail/numtheory.hpp"
#include "apnforge/error.hpp"

namespace apnforge {

/// Polynomial over GF(2); bit k is the coefficient of x^k.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<std::uint64_t> words) : w_(std::move(words)) { trim(); }
    static Gf2Poly from_u64(std::uint64_t v) { return Gf2Poly(std::vector<std::uint64_t>{v}); }

    static Gf2Poly monomial(std::size_t k) {
        std::vector<std::uint64_t> w(k / 64 + 1, 0);
        w[k / 64] = std::uint64_t{1} << (k % 64);
        return Gf2Poly(std::move(w));
    }

    /// Accepts "0x409" or bare hex digits.
    static Gf2Poly from_hex(std::string_view s) {
        if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
        if (s.empty()) throw ParseError("empty hex literal");
        std::vector<std::uint64_t> w((s.size() * 4 + 63) / 64, 0);
        std::size_t bit = 0;
        for (auto it = s.rbegin(); it != s.rend(); ++it, bit += 4) {
            const int c = std::tolower(static_cast<unsigned char>(*it));
            std::uint64_t v;
            if (c >= '0' && c <= '9') {
                v = static_cast<std::uint64_t>(c - '0');
            } else if (c >= 'a' && c <= 'f') {
                v = static_cast<std::uint64_t>(c - 'a' + 10);
            } else {
                throw ParseError("invalid hex digit in '" + std::string(s) + "'");
            }
            w[bit / 64] |= v << (bit % 64);
        }
        return Gf2Poly(std::move(w));
    }

    std::string to_hex() const {
        if (w_.empty()) return "0x0";
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string out;
        const int nibbles = (degree() / 4) + 1;
        for (int n = nibbles - 1; n >= 0; --n) {
            const std::size_t bit = static_cast<std::size_t>(n) * 4;
            out.push_back(kDigits[(w_[bit / 64] >> (bit % 64)) & 0xF]);
        }
        return "0x" + out;
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept {
        if (w_.empty()) return -1;
        return static_cast<int>(64 * (w_.size() - 1)) + 63 - std::countl_zero(w_.back());
    }

    bool is_zero() const noexcept { return w_.empty(); }
    bool bit(std::size_t k) const noexcept {
        return k / 64 < w_.size() && ((w_[k / 64] >> (k % 64)) & 1U) != 0;
    }
    const std::vector<std::uint64_t>& words() const noexcept { return w_; }

    void flip(std::size_t k) {
        if (k / 64 >= w_.size()) w_.resize(k / 64 + 1, 0);
        w_[k / 64] ^= std::uint64_t{1} << (k % 64);
        trim();
    }

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
        std::vector<std::uint64_t> r(std::max(a.w_.size(), b.w_.size()), 0);
        for (std::size_t i = 0; i < a.w_.size(); ++i) r[i] ^= a.w_[i];
        for (std::size_t i = 0; i < b.w_.size(); ++i) r[i] ^= b.w_[i];
        return Gf2Poly(std::move(r));
    }

    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::uint64_t> r(a.w_.size() + b.w_.size() + 1, 0);
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t x = a.w_[i];
            while (x != 0) {
                const int j = std::countr_zero(x);
                x &= x - 1;
                const std::size_t shift = 64 * i + static_cast<std::size_t>(j);
                xor_shifted(r, b.w_, shift);
            }
        }
        return Gf2Poly(std::move(r));
    }

    friend Gf2Poly operator%(Gf2Poly a, const Gf2Poly& m) {
        const int dm = m.degree();
        if (dm < 0) throw DivisionByZero();
        for (int da = a.degree(); da >= dm; da = a.degree()) {
            xor_shifted(a.w_, m.w_, static_cast<std::size_t>(da - dm));
            a.trim();
        }
        return a;
    }

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    /// Integer order of the coefficient bitstrings.
    friend bool operator<(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
        for (std::size_t i = a.w_.size(); i-- > 0;) {
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        }
        return false;
    }

private:
    static void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                            std::size_t shift) {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        if (dst.size() < src.size() + ws + 1) dst.resize(src.size() + ws + 1, 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i + ws] ^= src[i] << bs;
            if (bs != 0) dst[i + ws + 1] ^= src[i] >> (64 - bs);
        }
    }

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

namespace detail {

inline Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a;
}

/// x^(2^k) mod f
inline Gf2Poly gf2_x_pow2k(std::size_t k, const Gf2Poly& f) {
    Gf2Poly r = Gf2Poly::monomial(1) % f;
    for (std::size_t i = 0; i < k; ++i) r = (r * r) % f;
    return r;
}

/// Rabin's test over GF(2).
inline bool gf2_is_irreducible(const Gf2Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Gf2Poly x = Gf2Poly::monomial(1);
    if (!(gf2_x_pow2k(static_cast<std::size_t>(n), f) == x % f)) return false;
    for (std::uint64_t p : distinct_primes(static_cast<std::uint64_t>(n))) {
        const Gf2Poly h = gf2_x_pow2k(static_cast<std::size_t>(n) / p, f) + x;
        if (gf2_gcd(f, h).degree() != 0) return false;
    }
    return true;
}

}  // namespace detail
}  // namespace apnforge

#endif  // APNFORGE_DETAIL_GF2X_HPP
