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
 * @file bipoly.hpp
 * @brief Sparse bivariate polynomials over GF(2^m) and plane-curve
 * multiplicities.
 *
 * Terms are kept in graded-lex order (total degree, then the x exponent),
 * so the leading term is the last map entry. Exponents are bounded by a
 * per-polynomial cap (2^20 unless overridden) and exceeding it throws
 * CapExceeded before any memory is committed.
 *
 * Multiplicity uses the textbook definition: dehomogenize at the chart of
 * the point, translate the point to the origin and return the lowest total
 * degree with a nonzero part. Binomial coefficients mod 2 come from Lucas'
 * theorem, so no derivatives are involved.
 */

#ifndef APNFORGE_BIPOLY_HPP
#define APNFORGE_BIPOLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "apnforge/embed.hpp"
#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"

namespace apnforge {

inline constexpr std::uint64_t kDefaultExponentCap = std::uint64_t{1} << 20;

struct Monomial {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t total() const noexcept { return x + y; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GrlexLess {
    bool operator()(const Monomial& p, const Monomial& q) const noexcept {
        if (p.total() != q.total()) return p.total() < q.total();
        return p.x < q.x;
    }
};

class BiPoly {
public:
    using TermMap = std::map<Monomial, FieldElem, GrlexLess>;

    explicit BiPoly(const FieldCtx& f, std::uint64_t cap = kDefaultExponentCap) : field_(&f), cap_(cap) {}

    static BiPoly constant(const FieldElem& c) {
        BiPoly p(c.field());
        p.add_term(c, 0, 0);
        return p;
    }
    static BiPoly monomial(const FieldElem& c, std::uint64_t a, std::uint64_t b) {
        BiPoly p(c.field());
        p.add_term(c, a, b);
        return p;
    }
    static BiPoly x(const FieldCtx& f) { return monomial(f.one(), 1, 0); }
    static BiPoly y(const FieldCtx& f) { return monomial(f.one(), 0, 1); }

    const FieldCtx& field() const noexcept { return *field_; }
    std::uint64_t cap() const noexcept { return cap_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// -1 for the zero polynomial.
    long long total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<long long>(terms_.rbegin()->first.total());
    }
    long long degree_x() const noexcept {
        long long d = -1;
        for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<long long>(mono.x));
        return d;
    }
    long long degree_y() const noexcept {
        long long d = -1;
        for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<long long>(mono.y));
        return d;
    }

    FieldElem coeff(std::uint64_t a, std::uint64_t b) const {
        const auto it = terms_.find({a, b});
        return it == terms_.end() ? field_->zero() : it->second;
    }

    /// Largest term in graded-lex order.
    std::pair<Monomial, FieldElem> leading_term() const {
        if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
        return *terms_.rbegin();
    }

    /// Adds c*x^a*y^b; a zero sum removes the term.
    void add_term(const FieldElem& c, std::uint64_t a, std::uint64_t b) {
        if (c.field_ptr() != field_) throw FieldMismatch();
        if (a > cap_ || b > cap_) {
            throw CapExceeded("exponent " + std::to_string(std::max(a, b)) + " above the cap " +
                              std::to_string(cap_));
        }
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
        check_same(p, q);
        BiPoly r = p;
        for (const auto& [mono, c] : q.terms_) r.add_term(c, mono.x, mono.y);
        return r;
    }
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + q; }

    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        check_same(p, q);
        BiPoly r(*p.field_, std::min(p.cap_, q.cap_));
        for (const auto& [m1, c1] : p.terms_) {
            for (const auto& [m2, c2] : q.terms_) r.add_term(c1 * c2, m1.x + m2.x, m1.y + m2.y);
        }
        return r;
    }

    BiPoly& operator+=(const BiPoly& q) { return *this = *this + q; }
    BiPoly& operator*=(const BiPoly& q) { return *this = *this * q; }

    friend bool operator==(const BiPoly& p, const BiPoly& q) {
        return p.field_ == q.field_ && p.terms_ == q.terms_;
    }

    BiPoly scaled(const FieldElem& s) const {
        BiPoly r(*field_, cap_);
        for (const auto& [mono, c] : terms_) r.add_term(c * s, mono.x, mono.y);
        return r;
    }

    BiPoly pow(std::uint64_t e) const {
        BiPoly r = constant_one();
        BiPoly b = *this;
        while (e != 0) {
            if ((e & 1U) != 0) r *= b;
            e >>= 1;
            if (e != 0) b = b.frobenius_power(1);
        }
        return r;
    }

    /// P^(2^k): exponents scale by 2^k and coefficients go through Frobenius.
    BiPoly frobenius_power(int k) const {
        BiPoly r(*field_, cap_);
        const std::uint64_t scale = std::uint64_t{1} << k;
        for (const auto& [mono, c] : terms_) {
            if (mono.x > cap_ / scale || mono.y > cap_ / scale) {
                throw CapExceeded("exponent above the cap " + std::to_string(cap_));
            }
            r.add_term(c.frobenius(k), mono.x * scale, mono.y * scale);
        }
        return r;
    }

    FieldElem evaluate(const FieldElem& x0, const FieldElem& y0) const {
        FieldElem r = field_->zero();
        for (const auto& [mono, c] : terms_) r += c * x0.pow(mono.x) * y0.pow(mono.y);
        return r;
    }

    BiPoly swap_xy() const {
        BiPoly r(*field_, cap_);
        for (const auto& [mono, c] : terms_) r.add_term(c, mono.y, mono.x);
        return r;
    }

    /// Copy with every coefficient sent through an embedding into its target.
    BiPoly map_coefficients(const Embedding& e) const {
        BiPoly r(e.target(), cap_);
        for (const auto& [mono, c] : terms_) r.add_term(e(c), mono.x, mono.y);
        return r;
    }

private:
    BiPoly constant_one() const {
        BiPoly r(*field_, cap_);
        r.add_term(field_->one(), 0, 0);
        return r;
    }
    static void check_same(const BiPoly& p, const BiPoly& q) {
        if (p.field_ != q.field_) throw FieldMismatch();
    }

    const FieldCtx* field_;
    std::uint64_t cap_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Substitution, division, homogeneous parts.

struct Substitution {
    UniPoly value;
    std::uint64_t weighted_degree;  // max(a + b*deg g)
    bool no_collapse;               // deg value == weighted_degree
};

namespace detail {

inline UniPoly uni_square(const UniPoly& p) {
    if (p.is_zero()) return p;
    std::vector<FieldElem> v(static_cast<std::size_t>(2 * p.degree() + 1), p.field().zero());
    const auto c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) v[2 * k] = c[k].square();
    return UniPoly(p.field(), std::move(v));
}

}  // namespace detail

/// P(x, g(x)). A zero g counts as degree 0 in the weighted degree.
inline Substitution substitute_y(const BiPoly& p, const UniPoly& g) {
    if (&p.field() != &g.field()) throw FieldMismatch();
    const FieldCtx& f = p.field();
    const std::uint64_t dg = g.is_zero() ? 0 : static_cast<std::uint64_t>(g.degree());
    std::uint64_t weighted = 0;
    for (const auto& [mono, c] : p.terms()) weighted = std::max(weighted, mono.x + mono.y * dg);
    if (weighted > p.cap()) throw CapExceeded("substituted degree " + std::to_string(weighted) + " above the cap");

    // g^(2^j) by squaring, then g^b as a product over the bits of b.
    std::vector<UniPoly> sq{g};
    std::map<std::uint64_t, UniPoly> gpow;
    auto power = [&](std::uint64_t b) -> const UniPoly& {
        auto it = gpow.find(b);
        if (it != gpow.end()) return it->second;
        UniPoly r = UniPoly::constant(f.one());
        for (std::size_t j = 0; (b >> j) != 0; ++j) {
            while (sq.size() <= j) sq.push_back(detail::uni_square(sq.back()));
            if (((b >> j) & 1U) != 0) r *= sq[j];
        }
        return gpow.emplace(b, std::move(r)).first->second;
    };

    std::vector<FieldElem> acc(static_cast<std::size_t>(weighted) + 1, f.zero());
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, FieldElem>>> by_y;
    for (const auto& [mono, c] : p.terms()) by_y[mono.y].emplace_back(mono.x, c);
    for (const auto& [b, xs] : by_y) {
        const UniPoly& gb = power(b);
        const auto gc = gb.coeffs();
        for (const auto& [a, c] : xs) {
            for (std::size_t k = 0; k < gc.size(); ++k) {
                if (!gc[k].is_zero()) acc[a + k] += c * gc[k];
            }
        }
    }
    UniPoly value(f, std::move(acc));
    const bool ok = !value.is_zero() && static_cast<std::uint64_t>(value.degree()) == weighted;
    return {std::move(value), weighted, ok};
}

/// Quotient of an exact division in graded-lex order; throws NotDivisible
/// when a remainder would be left.
inline BiPoly exact_div(const BiPoly& p, const BiPoly& q) {
    if (q.is_zero()) throw DivisionByZero();
    if (&p.field() != &q.field()) throw FieldMismatch();
    const auto [lq, lc] = q.leading_term();
    const FieldElem inv = lc.inv();
    BiPoly rem = p;
    BiPoly quot(p.field(), p.cap());
    while (!rem.is_zero()) {
        const auto [lr, rc] = rem.leading_term();
        if (lr.x < lq.x || lr.y < lq.y) throw NotDivisible("leading term is not divisible; remainder is nonzero");
        const FieldElem c = rc * inv;
        const std::uint64_t a = lr.x - lq.x, b = lr.y - lq.y;
        quot.add_term(c, a, b);
        for (const auto& [mono, qc] : q.terms()) rem.add_term(c * qc, mono.x + a, mono.y + b);
    }
    return quot;
}

inline std::map<std::uint64_t, BiPoly> homogeneous_components(const BiPoly& p) {
    std::map<std::uint64_t, BiPoly> out;
    for (const auto& [mono, c] : p.terms()) {
        auto it = out.try_emplace(mono.total(), p.field(), p.cap()).first;
        it->second.add_term(c, mono.x, mono.y);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projective points and multiplicity.

class ProjPoint {
public:
    /// Scales so the first nonzero coordinate is 1.
    ProjPoint(FieldElem x, FieldElem y, FieldElem z) {
        const FieldCtx* f = x.field_ptr();
        if (f == nullptr || y.field_ptr() != f || z.field_ptr() != f) throw FieldMismatch();
        c_ = {x, y, z};
        for (std::size_t k = 0; k < 3; ++k) {
            if (c_[k].is_zero()) continue;
            chart_ = static_cast<int>(k);
            const FieldElem inv = c_[k].inv();
            for (auto& e : c_) e *= inv;
            return;
        }
        throw InvalidArgument("projective point with all coordinates zero");
    }

    /// Affine point (a, b) as [a:b:1].
    static ProjPoint affine(const FieldElem& a, const FieldElem& b) { return {a, b, a.field().one()}; }

    const FieldElem& x() const noexcept { return c_[0]; }
    const FieldElem& y() const noexcept { return c_[1]; }
    const FieldElem& z() const noexcept { return c_[2]; }
    const FieldCtx& field() const { return c_[0].field(); }
    /// Index (0 = x, 1 = y, 2 = z) of the coordinate normalized to 1.
    int chart() const noexcept { return chart_; }
    bool at_infinity() const noexcept { return c_[2].is_zero(); }

    std::string to_string() const {
        return "[" + c_[0].to_hex() + ":" + c_[1].to_hex() + ":" + c_[2].to_hex() + "]";
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }

private:
    std::array<FieldElem, 3> c_;
    int chart_ = 2;
};

/// Homogenizes P to degree D in (x, y, z) and sets the chart coordinate to
/// 1. The two remaining coordinates, in (x, y, z) order, become the x and y
/// of the result.
inline BiPoly dehomogenize_at(const BiPoly& p, std::uint64_t D, int chart) {
    if (p.total_degree() > static_cast<long long>(D)) {
        throw InvalidArgument("homogenization degree below the total degree");
    }
    BiPoly r(p.field(), std::max<std::uint64_t>(p.cap(), D));
    for (const auto& [mono, c] : p.terms()) {
        const std::uint64_t e[3] = {mono.x, mono.y, D - mono.total()};
        std::uint64_t u = 0, v = 0;
        bool first = true;
        for (int k = 0; k < 3; ++k) {
            if (k == chart) continue;
            (first ? u : v) = e[k];
            first = false;
        }
        r.add_term(c, u, v);
    }
    return r;
}

namespace detail {

/// Lowest total degree with a nonzero part of Q(u + u0, v + v0).
inline std::uint64_t lowest_degree_after_translation(const BiPoly& q, const FieldElem& u0, const FieldElem& v0) {
    const auto top = static_cast<std::uint64_t>(q.total_degree());
    for (std::uint64_t e = 0; e <= top; ++e) {
        std::map<std::uint64_t, FieldElem> part;  // keyed by the u exponent
        for (const auto& [mono, c] : q.terms()) {
            if (mono.total() < e) continue;
            const std::uint64_t lo = e > mono.y ? e - mono.y : 0;
            const std::uint64_t hi = std::min(e, mono.x);
            for (std::uint64_t k = lo; k <= hi; ++k) {
                const std::uint64_t l = e - k;
                // (u + u0)^p (v + v0)^q: C(p, k) C(q, l) is odd iff k, l are submasks.
                if ((k & mono.x) != k || (l & mono.y) != l) continue;
                const FieldElem t = c * u0.pow(mono.x - k) * v0.pow(mono.y - l);
                if (t.is_zero()) continue;
                auto [it, inserted] = part.try_emplace(k, t);
                if (!inserted) it->second += t;
            }
        }
        for (const auto& [k, c] : part) {
            if (!c.is_zero()) return e;
        }
    }
    throw Error("internal: translated polynomial vanished");
}

}  // namespace detail

/// Multiplicity of the point on the projective curve P^h = 0, where P^h is
/// P homogenized to degree D. P is embedded into the point's field when the
/// two differ. 0 means the point is off the curve.
inline std::uint64_t multiplicity_at(const BiPoly& p, const ProjPoint& pt, std::uint64_t D) {
    if (p.is_zero()) throw InvalidArgument("multiplicity on the zero polynomial");
    if (static_cast<long long>(D) < p.total_degree()) {
        throw InvalidArgument("homogenization degree " + std::to_string(D) + " below the total degree " +
                              std::to_string(p.total_degree()));
    }
    const FieldCtx& target = pt.field();
    const BiPoly pp = &p.field() == &target ? p : p.map_coefficients(Embedding(p.field(), target));
    const BiPoly q = dehomogenize_at(pp, D, pt.chart());
    const FieldElem coords[3] = {pt.x(), pt.y(), pt.z()};
    FieldElem u0, v0;
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (k == pt.chart()) continue;
        (first ? u0 : v0) = coords[k];
        first = false;
    }
    return detail::lowest_degree_after_translation(q, u0, v0);
}

/// Multiplicity with D = total degree of P.
inline std::uint64_t multiplicity_at(const BiPoly& p, const ProjPoint& pt) {
    return multiplicity_at(p, pt, static_cast<std::uint64_t>(std::max(0LL, p.total_degree())));
}

// ---------------------------------------------------------------------------
// Text and JSON forms.

/// "c*x^a*y^b + ..." in descending graded-lex order; unit coefficients omitted.
inline std::string format_bipoly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, c] = *it;
        std::vector<std::string> parts;
        if (!c.is_one() || mono.total() == 0) parts.push_back(c.to_hex());
        if (mono.x > 0) parts.push_back(mono.x == 1 ? "x" : "x^" + std::to_string(mono.x));
        if (mono.y > 0) parts.push_back(mono.y == 1 ? "y" : "y^" + std::to_string(mono.y));
        if (!out.empty()) out += " + ";
        for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
    }
    return out;
}

inline BiPoly parse_bipoly(const FieldCtx& f, std::string_view s, std::uint64_t cap = kDefaultExponentCap) {
    BiPoly p(f, cap);
    std::size_t start = 0;
    for (;;) {
        const auto plus = s.find('+', start);
        std::string_view term =
            detail::trim(s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
        if (term.empty()) throw ParseError("empty term in '" + std::string(s) + "'");
        FieldElem c = f.one();
        std::uint64_t a = 0, b = 0;
        std::size_t fs = 0;
        for (;;) {
            const auto star = term.find('*', fs);
            const auto factor =
                detail::trim(term.substr(fs, star == std::string_view::npos ? std::string_view::npos : star - fs));
            if (factor.empty()) throw ParseError("empty factor in '" + std::string(term) + "'");
            const char v = static_cast<char>(std::tolower(static_cast<unsigned char>(factor[0])));
            if (v == 'x' || v == 'y') {
                std::uint64_t k = 1;
                if (factor.size() > 1) {
                    if (factor[1] != '^') throw ParseError("bad factor '" + std::string(factor) + "'");
                    const auto digits = factor.substr(2);
                    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
                    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                        throw ParseError("bad exponent in '" + std::string(factor) + "'");
                    }
                }
                (v == 'x' ? a : b) += k;
            } else {
                c *= parse_element(f, factor);
            }
            if (star == std::string_view::npos) break;
            fs = star + 1;
        }
        p.add_term(c, a, b);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return p;
}

/// [[a, b, "0xcoeff"], ...] sorted by (a, b).
inline nlohmann::json to_json(const BiPoly& p) {
    std::vector<std::pair<Monomial, FieldElem>> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
        return l.first.x != r.first.x ? l.first.x < r.first.x : l.first.y < r.first.y;
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mono, c] : v) arr.push_back({mono.x, mono.y, c.to_hex()});
    return arr;
}

inline BiPoly bipoly_from_json(const FieldCtx& f, const nlohmann::json& j, std::uint64_t cap = kDefaultExponentCap) {
    if (!j.is_array()) throw ParseError("bivariate polynomial JSON must be an array");
    BiPoly p(f, cap);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("term must be [a, b, coeff]");
        p.add_term(parse_element(f, t[2].get<std::string>()), t[0].get<std::uint64_t>(), t[1].get<std::uint64_t>());
    }
    return p;
}

}  // namespace apnforge

#endif  // APNFORGE_BIPOLY_HPP
