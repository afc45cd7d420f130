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

/**
 * @file gf2m.hpp
 * @brief Arithmetic in GF(2^m), 1 <= m <= 1024, polynomial basis.
 *
 * A FieldCtx is built once (make_field) and shared through a Field handle;
 * it is immutable afterwards. FieldElem values carry a plain pointer to
 * their context, so the context must outlive every element created from it.
 * Elements from different contexts never mix: arithmetic throws
 * FieldMismatch.
 *
 * Fields with m <= 64 use a single-word kernel (carryless product folded
 * through the taps of the modulus); larger fields use a word-array
 * shift-and-add kernel.
 *
 * @code{.cpp}
 * auto K = apnforge::make_field(10);          // x^10 + x^3 + 1
 * auto u = K->gen_power(374);
 * auto w = apnforge::parse_element(*K, "a^341");
 * assert(apnforge::element_order(w) == 3);
 * @endcode
 */

#ifndef APNFORGE_GF2M_HPP
#define APNFORGE_GF2M_HPP

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "apnforge/detail/gf2x.hpp"
#include "apnforge/detail/numtheory.hpp"
#include "apnforge/error.hpp"

namespace apnforge {

inline constexpr int kMaxFieldDegree = 1024;
inline constexpr std::size_t kMaxWords = kMaxFieldDegree / 64;

using Words = std::array<std::uint64_t, kMaxWords>;

class FieldCtx;
class FieldElem;
using Field = std::shared_ptr<const FieldCtx>;

Field make_field(int m, std::optional<Gf2Poly> modulus = std::nullopt);

class FieldCtx {
    struct Key {};
    friend Field make_field(int m, std::optional<Gf2Poly> modulus);

public:
    FieldCtx(Key, int m, Gf2Poly modulus);
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    int degree() const noexcept { return m_; }
    std::size_t words() const noexcept { return nw_; }
    const Gf2Poly& modulus() const noexcept { return modulus_; }

    /// True when the residue of x generates the multiplicative group.
    /// Only decided for m <= 64; larger fields report false.
    bool is_primitive() const noexcept { return primitive_; }

    /// "m:0xMODULUS"
    std::string spec() const { return std::to_string(m_) + ":" + modulus_.to_hex(); }

    FieldElem zero() const;
    FieldElem one() const;
    /// The residue class of x (written alpha / "a").
    FieldElem generator() const;
    FieldElem element(std::uint64_t bits) const;
    FieldElem element(const Words& bits) const;
    FieldElem gen_power(std::uint64_t k) const;
    FieldElem random(std::mt19937_64& rng) const;
    FieldElem random_nonzero(std::mt19937_64& rng) const;

    /// 2^m - 1, for m <= 64.
    std::uint64_t group_order() const {
        if (m_ > 64) throw InvalidArgument("group order is tracked only for m <= 64");
        return m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
    }

    /// Distinct primes dividing 2^m - 1 (m <= 64, otherwise empty).
    const std::vector<std::uint64_t>& group_order_primes() const noexcept { return order_primes_; }

    // Word kernels. Inputs must be reduced (no bits at index >= m).
    std::uint64_t mul64(std::uint64_t a, std::uint64_t b) const noexcept {
        unsigned __int128 p = 0;
        while (b != 0) {
            p ^= static_cast<unsigned __int128>(a) << std::countr_zero(b);
            b &= b - 1;
        }
        for (;;) {
            const unsigned __int128 hi = p >> m_;
            if (hi == 0) break;
            p &= low_mask128_;
            for (int tap : taps_) p ^= hi << tap;
        }
        return static_cast<std::uint64_t>(p);
    }

    std::uint64_t pow64(std::uint64_t a, std::uint64_t e) const noexcept {
        std::uint64_t r = 1;
        while (e != 0) {
            if ((e & 1U) != 0) r = mul64(r, a);
            a = mul64(a, a);
            e >>= 1;
        }
        return r;
    }

    /// a^(2^e), e taken mod m.
    std::uint64_t frobenius64(std::uint64_t a, int e) const noexcept {
        e %= m_;
        for (int i = 0; i < e; ++i) a = mul64(a, a);
        return a;
    }

    Words mul_words(const Words& a, const Words& b) const noexcept {
        Words r{};
        if (m_ <= 64) {
            r[0] = mul64(a[0], b[0]);
            return r;
        }
        // Horner over the bits of b, reducing x^m -> low part of the modulus.
        const std::size_t top_word = static_cast<std::size_t>(m_ - 1) / 64;
        const unsigned top_bit = static_cast<unsigned>(m_ - 1) % 64;
        for (int j = m_ - 1; j >= 0; --j) {
            const bool carry = ((r[top_word] >> top_bit) & 1U) != 0;
            for (std::size_t w = nw_; w-- > 1;) r[w] = (r[w] << 1) | (r[w - 1] >> 63);
            r[0] <<= 1;
            r[top_word] &= top_mask_;
            if (carry) {
                for (std::size_t w = 0; w < nw_; ++w) r[w] ^= low_[w];
            }
            if (((b[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U) != 0) {
                for (std::size_t w = 0; w < nw_; ++w) r[w] ^= a[w];
            }
        }
        return r;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept { return &a == &b; }

private:
    int m_;
    std::size_t nw_;
    Gf2Poly modulus_;
    Words low_{};
    std::uint64_t top_mask_;
    unsigned __int128 low_mask128_;
    std::vector<int> taps_;
    bool primitive_ = false;
    std::vector<std::uint64_t> order_primes_;
};

/// Element of a FieldCtx. Default construction yields a detached value that
/// only supports assignment; every arithmetic use requires a field.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(const FieldCtx& f, const Words& bits) : field_(&f), bits_(bits) {}

    const FieldCtx& field() const {
        if (field_ == nullptr) throw InvalidArgument("detached field element");
        return *field_;
    }
    const FieldCtx* field_ptr() const noexcept { return field_; }
    const Words& bits() const noexcept { return bits_; }
    std::uint64_t low_word() const noexcept { return bits_[0]; }

    bool is_zero() const noexcept {
        for (auto w : bits_) {
            if (w != 0) return false;
        }
        return true;
    }
    bool is_one() const noexcept {
        if (bits_[0] != 1) return false;
        for (std::size_t i = 1; i < kMaxWords; ++i) {
            if (bits_[i] != 0) return false;
        }
        return true;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        FieldElem r = a;
        for (std::size_t i = 0; i < a.field_->words(); ++i) r.bits_[i] ^= b.bits_[i];
        return r;
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check_same(a, b);
        return FieldElem(*a.field_, a.field_->mul_words(a.bits_, b.bits_));
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

    FieldElem square() const { return *this * *this; }

    FieldElem pow(std::uint64_t e) const {
        const FieldCtx& f = field();
        if (f.degree() <= 64) return f.element(f.pow64(bits_[0], e));
        FieldElem r = f.one(), b = *this;
        while (e != 0) {
            if ((e & 1U) != 0) r *= b;
            b = b.square();
            e >>= 1;
        }
        return r;
    }

    FieldElem pow(const BigUint& e) const {
        FieldElem r = field().one();
        for (std::size_t i = e.bit_length(); i-- > 0;) {
            r = r.square();
            if (e.bit(i)) r *= *this;
        }
        return r;
    }

    /// a^(2^e); e is reduced mod m.
    FieldElem frobenius(int e) const {
        const FieldCtx& f = field();
        const int k = ((e % f.degree()) + f.degree()) % f.degree();
        if (f.degree() <= 64) return f.element(f.frobenius64(bits_[0], k));
        FieldElem r = *this;
        for (int i = 0; i < k; ++i) r = r.square();
        return r;
    }

    FieldElem sqrt() const { return frobenius(field().degree() - 1); }

    /// a^(2^m - 2) as the product of a^(2^j), j = 1..m-1.
    FieldElem inv() const {
        if (is_zero()) throw DivisionByZero();
        const FieldCtx& f = field();
        FieldElem r = f.one(), t = *this;
        for (int j = 1; j < f.degree(); ++j) {
            t = t.square();
            r *= t;
        }
        return r;
    }

    std::string to_hex() const {
        std::vector<std::uint64_t> w(bits_.begin(), bits_.end());
        return Gf2Poly(std::move(w)).to_hex();
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.field_ == b.field_ && a.bits_ == b.bits_;
    }

    /// Integer order of the bit vectors (same field assumed).
    friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept {
        for (std::size_t i = kMaxWords; i-- > 0;) {
            if (a.bits_[i] != b.bits_[i]) return a.bits_[i] <=> b.bits_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    static void check_same(const FieldElem& a, const FieldElem& b) {
        if (a.field_ == nullptr || a.field_ != b.field_) throw FieldMismatch();
    }

    const FieldCtx* field_ = nullptr;
    Words bits_{};
};

// ---------------------------------------------------------------------------
// FieldCtx members that need a complete FieldElem.

inline FieldElem FieldCtx::zero() const { return FieldElem(*this, Words{}); }
inline FieldElem FieldCtx::one() const { return element(1); }

inline FieldElem FieldCtx::generator() const {
    if (m_ == 1) return element(modulus_.bit(0) ? 1 : 0);
    Words w{};
    w[0] = 2;
    return FieldElem(*this, w);
}

inline FieldElem FieldCtx::element(std::uint64_t bits) const {
    if (m_ < 64 && (bits >> m_) != 0) throw InvalidArgument("element has bits beyond the field degree");
    Words w{};
    w[0] = bits;
    return FieldElem(*this, w);
}

inline FieldElem FieldCtx::element(const Words& bits) const {
    Words w = bits;
    for (std::size_t i = nw_; i < kMaxWords; ++i) {
        if (w[i] != 0) throw InvalidArgument("element has bits beyond the field degree");
    }
    if ((w[nw_ - 1] & ~top_mask_) != 0) throw InvalidArgument("element has bits beyond the field degree");
    return FieldElem(*this, w);
}

inline FieldElem FieldCtx::gen_power(std::uint64_t k) const { return generator().pow(k); }

inline FieldElem FieldCtx::random(std::mt19937_64& rng) const {
    Words w{};
    for (std::size_t i = 0; i < nw_; ++i) w[i] = rng();
    w[nw_ - 1] &= top_mask_;
    return FieldElem(*this, w);
}

inline FieldElem FieldCtx::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        FieldElem e = random(rng);
        if (!e.is_zero()) return e;
    }
}

inline FieldCtx::FieldCtx(Key, int m, Gf2Poly modulus)
    : m_(m), nw_(static_cast<std::size_t>(m + 63) / 64), modulus_(std::move(modulus)) {
    top_mask_ = (m % 64 == 0) ? ~std::uint64_t{0} : (std::uint64_t{1} << (m % 64)) - 1;
    low_mask128_ = m_ <= 64 ? (static_cast<unsigned __int128>(1) << m_) - 1 : 0;
    for (int k = 0; k < m_; ++k) {
        if (modulus_.bit(static_cast<std::size_t>(k))) {
            low_[static_cast<std::size_t>(k) / 64] |= std::uint64_t{1} << (k % 64);
            taps_.push_back(k);
        }
    }
    if (m_ <= 64) {
        order_primes_ = detail::mersenne_primes_of(m_);
        const std::uint64_t n = group_order();
        const std::uint64_t g = generator().low_word();
        primitive_ = g != 0;
        for (std::uint64_t p : order_primes_) {
            if (!primitive_) break;
            if (pow64(g, n / p) == 1) primitive_ = false;
        }
    }
}

// ---------------------------------------------------------------------------
// Moduli.

namespace detail {

inline Gf2Poly gf2_powmod(Gf2Poly base, std::uint64_t e, const Gf2Poly& f) {
    Gf2Poly r = Gf2Poly::from_u64(1) % f;
    base = base % f;
    while (e != 0) {
        if ((e & 1U) != 0) r = (r * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return r;
}

inline bool gf2_is_primitive(const Gf2Poly& f) {
    const int m = f.degree();
    if (m < 1 || m > 64 || !gf2_is_irreducible(f)) return false;
    if (!f.bit(0)) return false;
    const std::uint64_t n = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const Gf2Poly x = Gf2Poly::monomial(1);
    const Gf2Poly one = Gf2Poly::from_u64(1);
    for (std::uint64_t p : mersenne_primes_of(m)) {
        if (gf2_powmod(x, n / p, f) == one) return false;
    }
    return true;
}

inline Gf2Poly search_default_modulus(int m) {
    if (m == 1) return Gf2Poly::from_u64(0x3);
    if (m == 10) return Gf2Poly::from_u64(0x409);
    // Least candidate (integer order) with nonzero constant term; primitive
    // for m <= 64, merely irreducible above that.
    Gf2Poly cand = Gf2Poly::monomial(static_cast<std::size_t>(m));
    cand.flip(0);
    for (;;) {
        const bool ok = m <= 64 ? gf2_is_primitive(cand) : gf2_is_irreducible(cand);
        if (ok) return cand;
        // Advance to the next odd bitstring below x^(m+1).
        std::size_t k = 1;
        while (cand.bit(k)) {
            cand.flip(k);
            ++k;
        }
        if (static_cast<int>(k) >= m) throw Error("no modulus of degree " + std::to_string(m));
        cand.flip(k);
    }
}

}  // namespace detail

/// Built-in modulus for degree m: the least primitive polynomial (integer
/// order of its bitstring) for m <= 64, the least irreducible one above,
/// x^10 + x^3 + 1 for m = 10, and x + 1 for m = 1.
inline Gf2Poly default_modulus(int m) {
    static std::mutex mu;
    static std::map<int, Gf2Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, detail::search_default_modulus(m)).first;
    return it->second;
}

inline Field make_field(int m, std::optional<Gf2Poly> modulus) {
    if (m < 1 || m > kMaxFieldDegree) {
        throw InvalidArgument("field degree " + std::to_string(m) + " outside [1, 1024]");
    }
    Gf2Poly mod = modulus ? *modulus : default_modulus(m);
    if (mod.degree() != m) {
        throw InvalidArgument("modulus " + mod.to_hex() + " has degree " + std::to_string(mod.degree()) +
                              ", expected " + std::to_string(m));
    }
    if (!detail::gf2_is_irreducible(mod)) throw InvalidArgument("modulus " + mod.to_hex() + " is reducible");
    return std::make_shared<const FieldCtx>(FieldCtx::Key{}, m, std::move(mod));
}

/// Parses "m" or "m:0xMODULUS".
inline Field parse_field_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view mpart = spec.substr(0, colon);
    int m = 0;
    const auto [ptr, ec] = std::from_chars(mpart.data(), mpart.data() + mpart.size(), m);
    if (ec != std::errc{} || ptr != mpart.data() + mpart.size()) {
        throw ParseError("bad field degree in '" + std::string(spec) + "'");
    }
    if (colon == std::string_view::npos) return make_field(m);
    return make_field(m, Gf2Poly::from_hex(spec.substr(colon + 1)));
}

// ---------------------------------------------------------------------------
// Element-level queries.

/// Multiplicative order via the factorization of 2^m - 1 (m <= 64).
inline std::uint64_t element_order(const FieldElem& a) {
    if (a.is_zero()) throw DivisionByZero();
    const FieldCtx& f = a.field();
    if (f.degree() > 64) throw InvalidArgument("element_order supports m <= 64");
    std::uint64_t ord = f.group_order();
    for (std::uint64_t p : f.group_order_primes()) {
        while (ord % p == 0 && a.pow(ord / p).is_one()) ord /= p;
    }
    return ord;
}

/// a in GF(2^d), i.e. a^(2^d) == a. d must divide m.
inline bool is_in_subfield(const FieldElem& a, int d) {
    const int m = a.field().degree();
    if (d < 1 || m % d != 0) {
        throw InvalidArgument("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(m));
    }
    return a.frobenius(d) == a;
}

/// Degree over GF(2) of the smallest subfield containing a.
inline int absolute_degree(const FieldElem& a) {
    const int m = a.field().degree();
    for (auto d : detail::divisors(static_cast<std::uint64_t>(m))) {
        if (a.frobenius(static_cast<int>(d)) == a) return static_cast<int>(d);
    }
    return m;
}

/// Absolute trace to GF(2).
inline bool trace(const FieldElem& a) {
    FieldElem t = a, s = a;
    for (int j = 1; j < a.field().degree(); ++j) {
        t = t.square();
        s += t;
    }
    return s.is_one();
}

/// Element literal: "0x1f" / bare hex digits, "a", or "a^k" (primitive
/// modulus required for the generator forms).
inline FieldElem parse_element(const FieldCtx& f, std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty element literal");
    if (s[0] == 'a' || s[0] == 'A') {
        if (!f.is_primitive()) {
            throw ParseError("generator power '" + std::string(s) + "' needs a primitive modulus");
        }
        if (s.size() == 1) return f.generator();
        if (s[1] != '^') throw ParseError("bad element literal '" + std::string(s) + "'");
        std::uint64_t k = 0;
        const auto rest = s.substr(2);
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            throw ParseError("bad exponent in '" + std::string(s) + "'");
        }
        return f.gen_power(k);
    }
    const Gf2Poly p = Gf2Poly::from_hex(s);
    if (p.degree() >= f.degree()) throw ParseError("element '" + std::string(s) + "' exceeds the field degree");
    Words w{};
    for (std::size_t i = 0; i < p.words().size(); ++i) w[i] = p.words()[i];
    return f.element(w);
}

}  // namespace apnforge

#endif  // APNFORGE_GF2M_HPP
