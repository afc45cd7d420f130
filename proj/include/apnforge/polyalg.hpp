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
 * @file polyalg.hpp
 * @brief Dense univariate polynomials over GF(2^m): gcd, modular powering,
 * Rabin irreducibility, and complete factorization.
 *
 * Factorization runs squarefree decomposition, distinct-degree splitting,
 * then equal-degree splitting with the absolute trace
 * T(h) = h + h^2 + ... + h^(2^(m*d - 1)) mod g, which in characteristic 2
 * plays the role of the Cantor-Zassenhaus power map. Randomness comes from
 * a caller-supplied seed so factor lists are reproducible.
 */

#ifndef APNFORGE_POLYALG_HPP
#define APNFORGE_POLYALG_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "apnforge/detail/numtheory.hpp"
#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"

namespace apnforge {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2008'0001ULL;

class UniPoly {
public:
    explicit UniPoly(const FieldCtx& f) : field_(&f) {}
    UniPoly(const FieldCtx& f, std::vector<FieldElem> coeffs) : field_(&f), c_(std::move(coeffs)) {
        for (const auto& e : c_) {
            if (e.field_ptr() != field_) throw FieldMismatch();
        }
        normalize();
    }

    static UniPoly constant(const FieldElem& c) { return UniPoly(c.field(), {c}); }
    static UniPoly x(const FieldCtx& f) { return monomial(f.one(), 1); }
    static UniPoly monomial(const FieldElem& c, std::size_t k) {
        std::vector<FieldElem> v(k + 1, c.field().zero());
        v[k] = c;
        return UniPoly(c.field(), std::move(v));
    }

    const FieldCtx& field() const noexcept { return *field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    std::span<const FieldElem> coeffs() const noexcept { return c_; }

    FieldElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_->zero(); }
    const FieldElem& lead() const {
        if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    FieldElem operator()(const FieldElem& x) const {
        FieldElem r = field_->zero();
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    UniPoly monic() const {
        if (is_zero() || c_.back().is_one()) return *this;
        const FieldElem inv = c_.back().inv();
        UniPoly r = *this;
        for (auto& e : r.c_) e *= inv;
        return r;
    }

    UniPoly derivative() const {
        std::vector<FieldElem> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(k % 2 == 1 ? c_[k] : field_->zero());
        return UniPoly(*field_, std::move(d));
    }

    UniPoly scaled(const FieldElem& s) const {
        UniPoly r = *this;
        for (auto& e : r.c_) e *= s;
        r.normalize();
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        check_same(a, b);
        const UniPoly& lo = a.c_.size() < b.c_.size() ? a : b;
        UniPoly r = a.c_.size() < b.c_.size() ? b : a;
        for (std::size_t k = 0; k < lo.c_.size(); ++k) r.c_[k] += lo.c_[k];
        r.normalize();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return UniPoly(*a.field_);
        const FieldCtx& f = *a.field_;
        if (f.degree() <= 64) {
            std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                const std::uint64_t ai = a.c_[i].low_word();
                if (ai == 0) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] ^= f.mul64(ai, b.c_[j].low_word());
            }
            return from_words(f, r);
        }
        std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(f, std::move(r));
    }

    UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// Degree first, then coefficients from the top in integer order.
    friend bool operator<(const UniPoly& a, const UniPoly& b) noexcept {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t k = a.c_.size(); k-- > 0;) {
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        }
        return false;
    }

    /// Coefficients for fields with m <= 64 in packed form; used by hot loops.
    static UniPoly from_words(const FieldCtx& f, std::span<const std::uint64_t> w) {
        std::vector<FieldElem> v;
        v.reserve(w.size());
        for (auto x : w) v.push_back(f.element(x));
        return UniPoly(f, std::move(v));
    }

private:
    static void check_same(const UniPoly& a, const UniPoly& b) {
        if (a.field_ != b.field_) throw FieldMismatch();
    }
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* field_;
    std::vector<FieldElem> c_;
};

// ---------------------------------------------------------------------------
// Packed kernels for m <= 64: coefficients as raw words, low degree first,
// no trailing zeros.

namespace detail::pk {

using Vec = std::vector<std::uint64_t>;

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec from(const UniPoly& p) {
    Vec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.low_word());
    return v;
}

inline std::uint64_t inv(const FieldCtx& f, std::uint64_t a) { return f.pow64(a, f.group_order() - 1); }

/// a <- a mod b, optionally collecting the quotient.
inline void rem(const FieldCtx& f, Vec& a, const Vec& b, Vec* quot = nullptr) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (quot != nullptr) quot->assign(a.size() > db ? a.size() - db : 0, 0);
    if (a.size() <= db) return;
    const std::uint64_t il = b.back() == 1 ? 1 : inv(f, b.back());
    for (std::size_t k = a.size() - 1;; --k) {
        const std::uint64_t c = a[k];
        if (c != 0) {
            const std::uint64_t t = il == 1 ? c : f.mul64(c, il);
            if (quot != nullptr) (*quot)[k - db] = t;
            std::uint64_t* base = a.data() + (k - db);
            for (std::size_t j = 0; j <= db; ++j) {
                if (b[j] != 0) base[j] ^= f.mul64(t, b[j]);
            }
        }
        if (k == db) break;
    }
    a.resize(db);
    trim(a);
}

inline Vec mul(const FieldCtx& f, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) r[i + j] ^= f.mul64(a[i], b[j]);
        }
    }
    trim(r);
    return r;
}

/// Squaring is additive in characteristic 2.
inline Vec square(const FieldCtx& f, const Vec& a) {
    if (a.empty()) return {};
    Vec r(2 * a.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[2 * i] = f.mul64(a[i], a[i]);
    return r;
}

inline void make_monic(const FieldCtx& f, Vec& a) {
    if (a.empty() || a.back() == 1) return;
    const std::uint64_t il = inv(f, a.back());
    for (auto& c : a) c = f.mul64(c, il);
}

inline Vec gcd(const FieldCtx& f, Vec a, Vec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem(f, a, b);
        std::swap(a, b);
    }
    make_monic(f, a);
    return a;
}

inline void add_to(Vec& a, const Vec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] ^= b[k];
    trim(a);
}

}  // namespace detail::pk

// ---------------------------------------------------------------------------
// Division, gcd, powering.

/// Quotient and remainder; throws DivisionByZero for b == 0.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (&a.field() != &b.field()) throw FieldMismatch();
    const FieldCtx& f = a.field();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(f), a};
    if (f.degree() <= 64) {
        auto r = detail::pk::from(a);
        detail::pk::Vec q;
        detail::pk::rem(f, r, detail::pk::from(b), &q);
        return {UniPoly::from_words(f, q), UniPoly::from_words(f, r)};
    }
    std::vector<FieldElem> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElem> q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
    const FieldElem inv_lead = b.lead().inv();
    const auto bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        const FieldElem c = r[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const FieldElem t = c * inv_lead;
        q[static_cast<std::size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] += t * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

/// Monic gcd; gcd(f, 0) = monic(f).
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (&a.field() != &b.field()) throw FieldMismatch();
    if (a.field().degree() <= 64) {
        return UniPoly::from_words(a.field(), detail::pk::gcd(a.field(), detail::pk::from(a), detail::pk::from(b)));
    }
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

inline UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

/// f^e mod m by square-and-multiply.
inline UniPoly powmod(const UniPoly& f, const BigUint& e, const UniPoly& m) {
    if (m.degree() < 1) throw InvalidArgument("powmod needs a nonconstant modulus");
    UniPoly r = UniPoly::constant(f.field().one()) % m;
    const UniPoly base = f % m;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = mulmod(r, r, m);
        if (e.bit(i)) r = mulmod(r, base, m);
    }
    return r;
}

/// h^(2^k) mod m.
inline UniPoly pow2k_mod(UniPoly h, std::size_t k, const UniPoly& m) {
    h = h % m;
    if (m.field().degree() <= 64) {
        const FieldCtx& f = m.field();
        const auto mv = detail::pk::from(m);
        auto v = detail::pk::from(h);
        for (std::size_t i = 0; i < k; ++i) {
            v = detail::pk::square(f, v);
            detail::pk::rem(f, v, mv);
        }
        return UniPoly::from_words(f, v);
    }
    for (std::size_t i = 0; i < k; ++i) h = mulmod(h, h, m);
    return h;
}

/// The K-linear map h -> h^q mod f, q = 2^m = |K|, as a table of
/// x^(q*j) mod f. Applying it costs deg(f)^2 multiplications.
class FrobeniusMap {
public:
    explicit FrobeniusMap(const UniPoly& modulus) : mod_(modulus), modv_(detail::pk::from(modulus)) {
        const FieldCtx& f = modulus.field();
        const auto n = static_cast<std::size_t>(modulus.degree());
        const UniPoly xq = pow2k_mod(UniPoly::x(f), static_cast<std::size_t>(f.degree()), modulus);
        if (f.degree() <= 64) {
            const auto mv = detail::pk::from(modulus);
            const auto xv = detail::pk::from(xq);
            detail::pk::Vec cur{1};
            packed_.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                packed_.push_back(cur);
                cur = detail::pk::mul(f, cur, xv);
                detail::pk::rem(f, cur, mv);
            }
            return;
        }
        UniPoly cur = UniPoly::constant(f.one()) % modulus;
        table_.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            table_.push_back(cur);
            cur = mulmod(cur, xq, modulus);
        }
    }

    /// Packed form of the map for m <= 64.
    detail::pk::Vec apply(detail::pk::Vec h) const {
        const FieldCtx& f = mod_.field();
        detail::pk::rem(f, h, modv_);
        detail::pk::Vec acc(packed_.size(), 0);
        for (std::size_t j = 0; j < h.size(); ++j) {
            const std::uint64_t c = h[j];
            if (c == 0) continue;
            const auto& row = packed_[j];
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k] != 0) acc[k] ^= f.mul64(c, row[k]);
            }
        }
        detail::pk::trim(acc);
        return acc;
    }

    UniPoly operator()(const UniPoly& h) const {
        if (!packed_.empty()) return UniPoly::from_words(mod_.field(), apply(detail::pk::from(h)));
        const UniPoly r = h % mod_;
        UniPoly acc(mod_.field());
        const auto c = r.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (!c[j].is_zero()) acc += table_[j].scaled(c[j]);
        }
        return acc;
    }

private:
    UniPoly mod_;
    detail::pk::Vec modv_;
    std::vector<UniPoly> table_;
    std::vector<detail::pk::Vec> packed_;
};

// ---------------------------------------------------------------------------
// Irreducibility.

/// Rabin's test over K = GF(q): x^(q^n) = x mod f and
/// gcd(x^(q^(n/p)) - x, f) = 1 for every prime p | n.
inline bool is_irreducible(const UniPoly& f) {
    const int n = f.degree();
    if (n < 1) throw InvalidArgument("irreducibility of a constant polynomial");
    if (n == 1) return true;
    const UniPoly g = f.monic();
    const FrobeniusMap frob(g);
    if (g.field().degree() <= 64) {
        const FieldCtx& k = g.field();
        const detail::pk::Vec x{0, 1};
        std::vector<detail::pk::Vec> powers{x};
        powers.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = 1; j <= n; ++j) powers.push_back(frob.apply(powers.back()));
        if (powers[static_cast<std::size_t>(n)] != x) return false;
        const auto gv = detail::pk::from(g);
        for (auto p : detail::distinct_primes(static_cast<std::uint64_t>(n))) {
            auto h = powers[static_cast<std::size_t>(n) / p];
            detail::pk::add_to(h, x);
            if (detail::pk::gcd(k, gv, h).size() != 1) return false;
        }
        return true;
    }
    const UniPoly x = UniPoly::x(g.field()) % g;
    std::vector<UniPoly> powers;  // powers[k] = x^(q^k) mod g
    powers.reserve(static_cast<std::size_t>(n) + 1);
    powers.push_back(x);
    for (int k = 1; k <= n; ++k) powers.push_back(frob(powers.back()));
    if (!(powers[static_cast<std::size_t>(n)] == x)) return false;
    for (auto p : detail::distinct_primes(static_cast<std::uint64_t>(n))) {
        const UniPoly h = powers[static_cast<std::size_t>(n) / p] - x;
        if (poly_gcd(g, h).degree() != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Factorization.

struct Factor {
    UniPoly poly;
    int multiplicity;
};

struct Factorization {
    FieldElem unit;
    std::vector<Factor> factors;  // monic irreducibles, sorted, distinct

    /// Degrees with multiplicity, ascending.
    std::vector<int> degree_profile() const {
        std::vector<int> d;
        for (const auto& fac : factors) {
            for (int k = 0; k < fac.multiplicity; ++k) d.push_back(fac.poly.degree());
        }
        std::sort(d.begin(), d.end());
        return d;
    }
};

namespace detail {

/// p-th root (p = 2) of a polynomial whose odd coefficients vanish.
inline UniPoly poly_sqrt(const UniPoly& c) {
    std::vector<FieldElem> r;
    const auto cc = c.coeffs();
    for (std::size_t k = 0; k < cc.size(); k += 2) r.push_back(cc[k].sqrt());
    return UniPoly(c.field(), std::move(r));
}

/// Squarefree decomposition of a monic polynomial: pairs (g, e) with the
/// g pairwise coprime, squarefree, f = prod g^e.
inline std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() < 1) return out;
    UniPoly c = poly_gcd(f, f.derivative());
    UniPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        const UniPoly y = poly_gcd(w, c);
        const UniPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree(poly_sqrt(c).monic())) out.emplace_back(g, 2 * e);
    }
    return out;
}

/// Distinct-degree split of a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d).
inline std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    const FrobeniusMap frob(f);
    if (f.field().degree() <= 64) {
        const FieldCtx& k = f.field();
        pk::Vec rest = pk::from(f);
        pk::Vec h{0, 1};
        for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
            h = frob.apply(h);
            pk::Vec t = h;
            pk::add_to(t, pk::Vec{0, 1});
            pk::rem(k, t, rest);
            const pk::Vec g = pk::gcd(k, rest, t);
            if (g.size() > 1) {
                out.emplace_back(UniPoly::from_words(k, g), d);
                pk::Vec q;
                pk::rem(k, rest, g, &q);
                rest = std::move(q);
                pk::trim(rest);
            }
        }
        if (rest.size() > 1) {
            pk::make_monic(k, rest);
            out.emplace_back(UniPoly::from_words(k, rest), static_cast<int>(rest.size()) - 1);
        }
        return out;
    }
    UniPoly rest = f;
    const UniPoly x = UniPoly::x(f.field());
    UniPoly h = x % f;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = frob(h);
        const UniPoly g = poly_gcd(rest, (h - x) % rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
    return out;
}

inline UniPoly random_poly_below(const FieldCtx& f, int n, std::mt19937_64& rng) {
    std::vector<FieldElem> v;
    for (int k = 0; k < n; ++k) v.push_back(f.random(rng));
    return UniPoly(f, std::move(v));
}

/// Equal-degree split by absolute-trace gcds.
inline void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FieldCtx& f = g.field();
    const auto trace_len = static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(d);
    for (;;) {
        const UniPoly a = random_poly_below(f, g.degree(), rng);
        if (a.degree() < 1) continue;
        UniPoly s(f);
        if (f.degree() <= 64) {
            const pk::Vec gv = pk::from(g);
            pk::Vec t = pk::from(a), acc = t;
            for (std::size_t j = 1; j < trace_len; ++j) {
                t = pk::square(f, t);
                pk::rem(f, t, gv);
                pk::add_to(acc, t);
            }
            s = UniPoly::from_words(f, acc);
        } else {
            UniPoly t = a;
            s = a;
            for (std::size_t j = 1; j < trace_len; ++j) {
                t = mulmod(t, t, g);
                s += t;
            }
        }
        const UniPoly h = poly_gcd(g, s);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree((g / h).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

inline Factorization factor_univariate(const UniPoly& f, std::uint64_t seed = kDefaultSeed) {
    if (f.degree() < 1) throw InvalidArgument("factorization of a constant polynomial");
    std::mt19937_64 rng(seed);
    Factorization result{f.lead(), {}};
    std::vector<Factor> raw;
    for (const auto& [part, e] : detail::squarefree(f.monic())) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<UniPoly> irr;
            detail::equal_degree(block, d, rng, irr);
            for (auto& p : irr) raw.push_back({std::move(p), e});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    for (auto& fac : raw) {
        if (!result.factors.empty() && result.factors.back().poly == fac.poly) {
            result.factors.back().multiplicity += fac.multiplicity;
        } else {
            result.factors.push_back(std::move(fac));
        }
    }
    return result;
}

/// Irreducible factor degrees (with multiplicity, ascending) without
/// splitting equal-degree blocks.
struct DegreeProfile {
    std::vector<int> degrees;
    bool squarefree = true;
};

inline DegreeProfile factor_degree_profile(const UniPoly& f) {
    if (f.degree() < 1) throw InvalidArgument("factorization of a constant polynomial");
    DegreeProfile out;
    for (const auto& [part, e] : detail::squarefree(f.monic())) {
        if (e > 1) out.squarefree = false;
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            const int count = block.degree() / d * e;
            for (int k = 0; k < count; ++k) out.degrees.push_back(d);
        }
    }
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

/// Distinct roots of f in its coefficient field, ascending.
inline std::vector<FieldElem> find_roots(const UniPoly& f, std::uint64_t seed = kDefaultSeed) {
    if (f.degree() < 1) return {};
    const FieldCtx& k = f.field();
    const UniPoly g = f.monic();
    const UniPoly x = UniPoly::x(k);
    const UniPoly split = poly_gcd(g, pow2k_mod(x, static_cast<std::size_t>(k.degree()), g) - x);
    std::vector<FieldElem> roots;
    if (split.degree() < 1) return roots;
    std::mt19937_64 rng(seed);
    std::vector<UniPoly> lin;
    detail::equal_degree(split, 1, rng, lin);
    for (const auto& l : lin) roots.push_back(l.coeff(0));  // x + r
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Text and JSON forms.

inline std::string format_element(const FieldElem& e) { return e.to_hex(); }

/// "c_k*x^k + ... + c_0"; unit coefficients are omitted.
inline std::string format_poly(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c[k].is_one();
        if (k == 0) {
            out += format_element(c[k]);
            continue;
        }
        if (!unit) out += format_element(c[k]) + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits "c*x^k" / "x^k" / "c" into (coefficient literal, exponent);
/// an empty coefficient literal means 1.
inline std::pair<std::string_view, std::uint64_t> split_term(std::string_view term) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty polynomial term");
    std::string_view coef = term, mono;
    if (const auto star = term.rfind('*'); star != std::string_view::npos) {
        coef = trim(term.substr(0, star));
        mono = trim(term.substr(star + 1));
    } else if (term[0] == 'x' || term[0] == 'X') {
        coef = {};
        mono = term;
    } else {
        return {coef, 0};
    }
    if (mono.empty() || (mono[0] != 'x' && mono[0] != 'X')) {
        throw ParseError("bad polynomial term '" + std::string(term) + "'");
    }
    if (mono.size() == 1) return {coef, 1};
    if (mono[1] != '^') throw ParseError("bad polynomial term '" + std::string(term) + "'");
    std::uint64_t k = 0;
    const auto exp = mono.substr(2);
    const auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
    if (ec != std::errc{} || ptr != exp.data() + exp.size()) {
        throw ParseError("bad exponent in '" + std::string(term) + "'");
    }
    return {coef, k};
}

/// Sparse (coefficient, exponent) list from polynomial text.
inline std::vector<std::pair<FieldElem, std::uint64_t>> parse_terms(const FieldCtx& f, std::string_view s) {
    std::vector<std::pair<FieldElem, std::uint64_t>> terms;
    std::size_t start = 0;
    for (;;) {
        const auto plus = s.find('+', start);
        const auto piece = s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        const auto [coef, k] = split_term(piece);
        terms.emplace_back(coef.empty() ? f.one() : parse_element(f, coef), k);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return terms;
}

}  // namespace detail

inline UniPoly parse_poly(const FieldCtx& f, std::string_view s) {
    constexpr std::uint64_t kMaxDenseDegree = 1U << 20;
    UniPoly p(f);
    std::vector<FieldElem> dense;
    for (const auto& [c, k] : detail::parse_terms(f, s)) {
        if (k > kMaxDenseDegree) throw CapExceeded("polynomial degree above 2^20");
        if (dense.size() <= k) dense.resize(k + 1, f.zero());
        dense[k] += c;
    }
    return UniPoly(f, std::move(dense));
}

/// Compact JSON form: coefficient hex strings from degree 0 upward.
inline nlohmann::json to_json(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_hex());
    return arr;
}

inline UniPoly uni_from_json(const FieldCtx& f, const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
    std::vector<FieldElem> v;
    for (const auto& c : j) v.push_back(parse_element(f, c.get<std::string>()));
    return UniPoly(f, std::move(v));
}

}  // namespace apnforge

#endif  // APNFORGE_POLYALG_HPP
