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
 * @file apncore.hpp
 * @brief Quadratic binomials x^(2^i+1) + delta*x^(2^s(2^t+1)) and the
 * absolute-irreducibility pipeline for the curve H = F / U attached to them.
 *
 * With d = gcd(i, t):
 *   Delta(x, y) = f(x+y) + f(x) + f(y)
 *   F = Delta / (xy)
 *     = x^(2^i-1) + y^(2^i-1) + delta (xy)^(2^s-1) (x^(2^t-1) + y^(2^t-1))^(2^s)
 *   U = x^(2^d-1) + y^(2^d-1),   H = F / U.
 *
 * An absolutely irreducible factor of F over K forces off-diagonal zeros of
 * Delta over every large enough extension, so f is then APN on finitely
 * many extensions only. When i does not divide t, H is a sum of two
 * nonconstant coprime forms and is absolutely irreducible outright. When
 * i | t the pipeline first proves H irreducible over K by a specialization
 * y = g(x), then rules out every splitting into n Galois-conjugate factors
 * by multiplicities of singular points, divisibility, and degrees of
 * factors of specializations.
 *
 * Nothing here over-claims: a pipeline that runs out of eliminations or
 * budget reports Undecided with the live patterns.
 */

#ifndef APNFORGE_APNCORE_HPP
#define APNFORGE_APNCORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "apnforge/bipoly.hpp"
#include "apnforge/embed.hpp"
#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"

namespace apnforge {

inline constexpr int kMaxBinomialParam = 62;

/// f(x) = x^(2^i+1) + delta x^(2^s (2^t+1)) over the field of delta.
struct QuadBinomial {
    int i = 1;
    int s = 0;
    int t = 1;
    FieldElem delta;

    QuadBinomial() = default;
    QuadBinomial(int i_, int s_, int t_, FieldElem delta_) : i(i_), s(s_), t(t_), delta(delta_) { validate(); }

    const FieldCtx& field() const { return delta.field(); }
    int d() const noexcept { return std::gcd(i, t); }
    std::uint64_t exponent1() const noexcept { return (std::uint64_t{1} << i) + 1; }
    std::uint64_t exponent2() const noexcept { return ((std::uint64_t{1} << t) + 1) << s; }

    void validate() const {
        if (i < 1 || t < 1 || s < 0) throw InvalidArgument("need i >= 1, t >= 1, s >= 0");
        if (i > kMaxBinomialParam || t > kMaxBinomialParam || s + t > kMaxBinomialParam) {
            throw InvalidArgument("binomial parameters too large");
        }
        if (delta.field_ptr() == nullptr || delta.is_zero()) throw InvalidArgument("delta must be nonzero");
        if (s == 0 && t == i) throw InvalidArgument("coincident exponents: f is not a binomial");
    }

    /// deg H = 2^(t+s) + 2^s - 2^d - 1.
    std::uint64_t h_degree() const noexcept {
        return (std::uint64_t{1} << (t + s)) + (std::uint64_t{1} << s) - (std::uint64_t{1} << d()) - 1;
    }
};

// ---------------------------------------------------------------------------
// Normal form.

/// f = c x^e1 + d2 x^e2 equals scale^-1 * g(x^(2^shift)) for the normal form
/// g; swapped tells whether the d2 term became the leading monomial.
struct NormalizationTrace {
    int shift = 0;
    bool swapped = false;
    FieldElem scale;  // inverse of the leading coefficient
};

struct Normalized {
    QuadBinomial f;
    NormalizationTrace trace;
};

inline bool is_quadratic_exponent(std::uint64_t e) noexcept { return std::popcount(e) == 2; }

inline Normalized normalize_binomial(const FieldElem& c, std::uint64_t e1, const FieldElem& d2, std::uint64_t e2) {
    if (c.is_zero() || d2.is_zero()) throw InvalidArgument("binomial coefficients must be nonzero");
    if (c.field_ptr() != d2.field_ptr()) throw FieldMismatch();
    if (!is_quadratic_exponent(e1)) throw InvalidArgument("exponent " + std::to_string(e1) + " is not quadratic");
    if (!is_quadratic_exponent(e2)) throw InvalidArgument("exponent " + std::to_string(e2) + " is not quadratic");
    if (e1 == e2) throw InvalidArgument("coincident exponents");
    const int shift = std::min(std::countr_zero(e1), std::countr_zero(e2));
    std::uint64_t a = e1 >> shift, b = e2 >> shift;
    FieldElem ca = c, cb = d2;
    bool swapped = false;
    if ((a & 1U) == 0) {
        std::swap(a, b);
        std::swap(ca, cb);
        swapped = true;
    }
    const int i = std::countr_zero(a - 1);
    const int s = std::countr_zero(b);
    const int t = std::countr_zero((b >> s) - 1);
    const FieldElem scale = ca.inv();
    return {QuadBinomial(i, s, t, cb * scale), {shift, swapped, scale}};
}

// ---------------------------------------------------------------------------
// Curve constructions.

inline BiPoly delta_poly(const QuadBinomial& f) {
    const FieldCtx& k = f.field();
    const auto one = k.one();
    const std::uint64_t pi = std::uint64_t{1} << f.i, pt = std::uint64_t{1} << f.t;
    BiPoly gold = BiPoly::monomial(one, pi, 1) + BiPoly::monomial(one, 1, pi);
    BiPoly other = BiPoly::monomial(one, pt, 1) + BiPoly::monomial(one, 1, pt);
    return gold + other.frobenius_power(f.s).scaled(f.delta);
}

inline BiPoly construct_F(const QuadBinomial& f) {
    const FieldCtx& k = f.field();
    const auto one = k.one();
    const std::uint64_t pi = (std::uint64_t{1} << f.i) - 1, pt = (std::uint64_t{1} << f.t) - 1;
    const std::uint64_t ps = (std::uint64_t{1} << f.s) - 1;
    BiPoly low = BiPoly::monomial(one, pi, 0) + BiPoly::monomial(one, 0, pi);
    BiPoly top = BiPoly::monomial(one, pt, 0) + BiPoly::monomial(one, 0, pt);
    return low + top.frobenius_power(f.s) * BiPoly::monomial(f.delta, ps, ps);
}

inline BiPoly construct_U(const QuadBinomial& f) {
    const FieldCtx& k = f.field();
    const std::uint64_t e = (std::uint64_t{1} << f.d()) - 1;
    return BiPoly::monomial(k.one(), e, 0) + BiPoly::monomial(k.one(), 0, e);
}

struct CurveH {
    BiPoly h;
    std::map<std::uint64_t, BiPoly> components;
};

/// Degrees of the two homogeneous parts of H: 2^i - 2^d and deg H.
inline std::pair<std::uint64_t, std::uint64_t> predicted_component_degrees(const QuadBinomial& f) {
    return {(std::uint64_t{1} << f.i) - (std::uint64_t{1} << f.d()), f.h_degree()};
}

inline CurveH construct_H(const QuadBinomial& f) {
    BiPoly h = [&] {
        try {
            return exact_div(construct_F(f), construct_U(f));
        } catch (const NotDivisible&) {
            throw Error("internal: U does not divide F");
        }
    }();
    auto comps = homogeneous_components(h);
    return {std::move(h), std::move(comps)};
}

// ---------------------------------------------------------------------------
// Points at infinity.

namespace detail {

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

/// Elements of GF(2^t) inside `big` (t | deg big, deg big <= 64, primitive
/// modulus): 0 followed by powers of a generator of the subgroup.
inline std::vector<FieldElem> subfield_elements(const FieldCtx& big, int t, std::size_t limit) {
    const int M = big.degree();
    if (M % t != 0 || M > 64 || !big.is_primitive()) throw InvalidArgument("subfield enumeration unsupported");
    const std::uint64_t sub = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    const FieldElem gamma = big.generator().pow(big.group_order() / sub);
    std::vector<FieldElem> out{big.zero()};
    FieldElem p = big.one();
    for (std::uint64_t j = 0; j < sub && out.size() < limit; ++j) {
        out.push_back(p);
        p *= gamma;
    }
    return out;
}

/// One element of each absolute degree e | t with e not dividing i, the
/// least in generator-power order.
inline std::vector<FieldElem> new_degree_representatives(const FieldCtx& big, int i, int t) {
    const int M = big.degree();
    const std::uint64_t sub = (std::uint64_t{1} << t) - 1;
    const FieldElem gamma = big.generator().pow(big.group_order() / sub);
    std::vector<FieldElem> reps;
    for (auto e64 : divisors(static_cast<std::uint64_t>(t))) {
        const int e = static_cast<int>(e64);
        if (i % e == 0) continue;
        // gamma^((2^t-1)/(2^e-1)) generates GF(2^e)^*; it has absolute degree e.
        reps.push_back(gamma.pow(sub / ((std::uint64_t{1} << e) - 1)));
    }
    (void)M;
    return reps;
}

}  // namespace detail

struct MultiplicityRow {
    std::string point_class;  // "b in GF(2^i)", "b in GF(2^t)\\GF(2^i)", "[0:1:0]"
    std::string point;        // "[x:y:z]" hex coordinates in point_field
    std::string point_field;  // "M:0xMODULUS"
    int b_degree = 0;         // absolute degree of b
    std::uint64_t r = 1;      // degree over K of the field of the point
    std::uint64_t computed = 0;
    std::uint64_t predicted = 0;
};

/// Multiplicities of the points at infinity of the homogenized H, computed
/// directly and set against 2^s - 1, 2^s, 2^s - 1. Requires i | t and
/// lcm(m, t) <= max_compositum (at most 64).
inline std::vector<MultiplicityRow> infinity_multiplicity_table(const QuadBinomial& f, int max_compositum = 64) {
    if (f.t % f.i != 0) throw Inapplicable("the table covers i | t only");
    const int m = f.field().degree();
    const auto M = static_cast<int>(detail::lcm_u64(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(f.t)));
    if (M > std::min(max_compositum, 64)) {
        throw CapExceeded("compositum degree " + std::to_string(M) + " above the limit");
    }
    const Field big = make_field(M);
    const CurveH H = construct_H(f);
    const BiPoly hb = H.h.map_coefficients(Embedding(f.field(), *big));
    const std::uint64_t D = f.h_degree();
    const std::uint64_t ps = std::uint64_t{1} << f.s;

    std::vector<MultiplicityRow> rows;
    auto add = [&](const std::string& cls, const ProjPoint& pt, int bdeg, std::uint64_t predicted) {
        MultiplicityRow row;
        row.point_class = cls;
        row.point = pt.to_string();
        row.point_field = big->spec();
        row.b_degree = bdeg;
        row.r = detail::lcm_u64(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(bdeg)) /
                static_cast<std::uint64_t>(m);
        row.computed = multiplicity_at(hb, pt, D);
        row.predicted = predicted;
        rows.push_back(std::move(row));
    };
    constexpr std::size_t kAllUpTo = 256;
    std::vector<FieldElem> bs;
    if ((std::uint64_t{1} << f.t) <= kAllUpTo) {
        bs = detail::subfield_elements(*big, f.t, kAllUpTo + 1);
    } else {
        bs = {big->zero(), big->one()};
        for (const auto& b : detail::new_degree_representatives(*big, f.i, f.t)) bs.push_back(b);
    }
    for (const auto& b : bs) {
        const bool small = b.is_zero() || is_in_subfield(b, f.i);
        add(small ? "b in GF(2^i)" : "b in GF(2^t)\\GF(2^i)", ProjPoint(big->one(), b, big->zero()),
            b.is_zero() ? 1 : absolute_degree(b), small ? ps - 1 : ps);
    }
    add("[0:1:0]", ProjPoint(big->zero(), big->one(), big->zero()), 1, ps - 1);
    return rows;
}

// ---------------------------------------------------------------------------
// Split patterns and eliminations.

enum class PatternStatus { Live, Eliminated };

struct SplitPattern {
    std::uint64_t n = 0;
    std::uint64_t factor_degree = 0;
    PatternStatus status = PatternStatus::Live;
    std::string method;  // empty while live
    std::string reason;

    bool live() const noexcept { return status == PatternStatus::Live; }
    void eliminate(std::string how, std::string why) {
        status = PatternStatus::Eliminated;
        method = std::move(how);
        reason = std::move(why);
    }
};

/// One pattern per divisor n > 1 of the total degree.
inline std::vector<SplitPattern> split_patterns(std::uint64_t total_degree) {
    if (total_degree < 1) throw InvalidArgument("total degree must be positive");
    std::vector<SplitPattern> out;
    for (auto n : detail::divisors(total_degree)) {
        if (n > 1) out.push_back({n, total_degree / n, PatternStatus::Live, {}, {}});
    }
    return out;
}

/// n conjugate factors through a point of multiplicity m0 defined over a
/// degree-r extension of K, gcd(n, r) = 1, force n | m0.
inline SplitPattern eliminate_by_multiplicity(SplitPattern p, std::uint64_t m0, std::uint64_t r) {
    if (std::gcd(p.n, r) != 1) {
        throw Inapplicable("gcd(n, r) = gcd(" + std::to_string(p.n) + ", " + std::to_string(r) + ") != 1");
    }
    if (p.live() && m0 % p.n != 0) {
        p.eliminate("multiplicity", std::to_string(p.n) + " does not divide the multiplicity " + std::to_string(m0) +
                                        " of a point of degree " + std::to_string(r));
    }
    return p;
}

/// Divisibility consequences for i | t: n | 2^s - 1 and n | 2^(s+t-i) - 1;
/// with t > i and gcd(t, 2^s - 1) = 1 also n | 2^s.
inline SplitPattern eliminate_by_degree_arithmetic(const QuadBinomial& f, SplitPattern p) {
    if (f.t % f.i != 0) throw Inapplicable("degree arithmetic needs i | t");
    if (!p.live()) return p;
    const std::uint64_t ms = (std::uint64_t{1} << f.s) - 1;
    const std::uint64_t mst = (std::uint64_t{1} << (f.s + f.t - f.i)) - 1;
    const auto n = std::to_string(p.n);
    if (ms % p.n != 0) {
        p.eliminate("degree-arithmetic", n + " does not divide 2^s - 1 = " + std::to_string(ms));
    } else if (mst % p.n != 0) {
        p.eliminate("degree-arithmetic", n + " does not divide 2^(s+t-i) - 1 = " + std::to_string(mst));
    } else if (f.t > f.i && std::gcd(static_cast<std::uint64_t>(f.t), ms) == 1) {
        p.eliminate("degree-arithmetic", "gcd(t, 2^s - 1) = 1 forces n | 2^s and n | 2^s - 1");
    } else if (std::gcd(f.t - f.i, f.s) == 1) {
        p.eliminate("degree-arithmetic", "gcd(t - i, s) = 1 forces n = 1");
    }
    return p;
}

/// True when H(x, g(x)) is irreducible over K, which proves H irreducible
/// over K; false is inconclusive. Throws DegreeCollapse when the
/// specialization loses degree.
inline bool k_irreducibility_witness(const BiPoly& h, const UniPoly& g) {
    const auto sub = substitute_y(h, g);
    if (!sub.no_collapse) throw DegreeCollapse("H(x, g(x)) has degree below the weighted degree");
    if (sub.value.degree() < 1) return false;
    return is_irreducible(sub.value);
}

namespace detail {

/// Marks every subset sum of the profile in [0, W].
inline std::vector<char> subset_sums(const std::vector<int>& profile, std::uint64_t W) {
    std::vector<char> reach(W + 1, 0);
    reach[0] = 1;
    std::uint64_t top = 0;
    for (const int d : profile) {
        const auto e = static_cast<std::uint64_t>(d);
        top = std::min(W, top + e);
        for (std::uint64_t v = top; v >= e; --v) {
            if (reach[v - e] != 0) reach[v] = 1;
            if (v == e) break;
        }
    }
    return reach;
}

inline bool has_proper_sum(const std::vector<char>& reach) {
    for (std::size_t v = 1; v + 1 < reach.size(); ++v) {
        if (reach[v] != 0) return true;
    }
    return false;
}

}  // namespace detail

/// With no degree collapse, a factor A of H over K specializes to a
/// polynomial of degree exactly w(A), its weighted degree, which is a
/// subset sum of the factor degrees of H(x, g(x)). Specializations of one
/// degree share w(A); if their subset sums have no common value strictly
/// between 0 and W, H is irreducible over K. Returns false when
/// inconclusive; throws DegreeCollapse on a collapsing g.
inline bool k_irreducibility_proof(const BiPoly& h, const std::vector<UniPoly>& gs) {
    if (gs.empty()) return false;
    std::vector<char> common;
    std::uint64_t W = 0;
    for (const auto& g : gs) {
        if (g.degree() != gs.front().degree()) return false;
        const auto sub = substitute_y(h, g);
        if (!sub.no_collapse) throw DegreeCollapse("H(x, g(x)) has degree below the weighted degree");
        if (sub.value.degree() < 1) return false;
        const auto reach = detail::subset_sums(factor_degree_profile(sub.value).degrees, sub.weighted_degree);
        if (common.empty()) {
            common = reach;
            W = sub.weighted_degree;
        } else {
            if (sub.weighted_degree != W) return false;
            for (std::size_t v = 0; v < common.size(); ++v) common[v] = static_cast<char>(common[v] & reach[v]);
        }
    }
    return !detail::has_proper_sum(common);
}

struct Obstruction {
    bool found = false;
    std::string kind;  // "coprime-degree" or "divisibility"
    int factor_degree = 0;
    std::uint64_t specialized_degree = 0;
    std::vector<int> profile;

    std::string reason(std::uint64_t n) const {
        const std::string e = std::to_string(factor_degree), ns = std::to_string(n);
        if (kind == "coprime-degree") {
            return "irreducible factor of degree " + e + " exceeds " + std::to_string(specialized_degree) + "/" + ns +
                   " and is coprime to n";
        }
        return "squarefree specialization has an irreducible factor of degree " + e + " not divisible by " + ns;
    }
};

namespace detail {

/// A K-irreducible factor of degree e with gcd(e, n) = 1 stays irreducible
/// over GF(q^n), so it fits in one conjugate piece of degree W / n. With
/// divisibility set (H known irreducible over K) and a squarefree
/// specialization, the conjugate pieces are coprime and Frobenius permutes
/// them transitively, so every K-irreducible factor has degree divisible
/// by n.
inline Obstruction obstruction_from_profile(const std::vector<int>& profile, std::uint64_t W, std::uint64_t n,
                                            bool squarefree, bool divisibility) {
    Obstruction ob;
    ob.specialized_degree = W;
    ob.profile = profile;
    if (n <= 1) return ob;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
        const auto e = static_cast<std::uint64_t>(*it);
        if (std::gcd(e, n) == 1 && e * n > W) {
            ob.found = true;
            ob.kind = "coprime-degree";
            ob.factor_degree = *it;
            return ob;
        }
    }
    if (!divisibility || !squarefree) return ob;
    for (auto it = profile.rbegin(); it != profile.rend(); ++it) {
        if (static_cast<std::uint64_t>(*it) % n != 0) {
            ob.found = true;
            ob.kind = "divisibility";
            ob.factor_degree = *it;
            return ob;
        }
    }
    return ob;
}

}  // namespace detail

namespace detail {

inline Obstruction obstruction_for(const BiPoly& h, const UniPoly& g, const SplitPattern& p, bool divisibility) {
    if (!p.live()) throw InvalidArgument("pattern already eliminated");
    if (p.n <= 1) return {};
    const auto sub = substitute_y(h, g);
    if (!sub.no_collapse) throw DegreeCollapse("H(x, g(x)) has degree below the weighted degree");
    const auto prof = factor_degree_profile(sub.value);
    return obstruction_from_profile(prof.degrees, sub.weighted_degree, p.n, prof.squarefree, divisibility);
}

}  // namespace detail

/// Tests whether the specialization y = g(x) rules out the pattern p by a
/// factor of degree coprime to n and larger than W / n.
inline Obstruction specialization_obstruction(const BiPoly& h, const UniPoly& g, const SplitPattern& p,
                                              std::uint64_t seed = kDefaultSeed) {
    (void)seed;
    return detail::obstruction_for(h, g, p, false);
}

/// As specialization_obstruction, additionally using the divisibility rule.
/// Only meaningful once h is known to be irreducible over K.
inline Obstruction divisibility_obstruction(const BiPoly& h, const UniPoly& g, const SplitPattern& p) {
    return detail::obstruction_for(h, g, p, true);
}

// ---------------------------------------------------------------------------
// Search budget and candidate order for g.

struct Budget {
    std::uint64_t trials = 4096;
    int max_compositum = 64;
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> hints;  // element literals for beta, tried first
    unsigned threads = 1;
};

/// Deterministic stream of substitution polynomials: x^2 + beta x + 1 for
/// hinted beta, then beta = a^1, a^2, ... (integer order when the modulus
/// is not primitive), then beta = 0; after that every other monic
/// polynomial of degree 2, 3, ... in integer order of its coefficients.
class GScan {
public:
    GScan(const FieldCtx& k, const std::vector<std::string>& hints) : k_(&k) {
        for (const auto& h : hints) push_beta(parse_element(k, h));
        if (k.degree() <= 63) q_ = std::uint64_t{1} << k.degree();
    }

    std::optional<UniPoly> next() {
        for (;;) {
            if (hint_pos_ < hinted_.size()) return quad(hinted_[hint_pos_++], k_->one());
            if (stage_ == 0) {
                // beta over the nonzero elements, then 0.
                if (q_ != 0 && beta_idx_ >= q_) {
                    stage_ = 1;
                    continue;
                }
                const std::uint64_t j = beta_idx_++;
                FieldElem beta;
                if (q_ != 0 && j == q_ - 1) {
                    beta = k_->zero();
                } else if (k_->is_primitive()) {
                    beta = k_->gen_power(j + 1);
                } else {
                    beta = k_->element(j + 1);
                }
                if (seen_.count(beta.to_hex()) != 0) continue;
                return quad(beta, k_->one());
            }
            // Exhaustive monic polynomials of growing degree.
            if (q_ == 0) return std::nullopt;  // unreachable in practice
            if (deg_ == 0 || idx_ >= limit_) {
                deg_ = deg_ == 0 ? 2 : deg_ + 1;
                idx_ = 0;
                limit_ = 1;
                for (int k = 0; k < deg_; ++k) {
                    if (limit_ > (std::uint64_t{1} << 40) / q_) {
                        limit_ = std::uint64_t{1} << 40;
                        break;
                    }
                    limit_ *= q_;
                }
            }
            std::uint64_t v = idx_++;
            std::vector<FieldElem> c;
            for (int k = 0; k < deg_; ++k) {
                c.push_back(k_->element(v % q_));
                v /= q_;
            }
            c.push_back(k_->one());
            if (deg_ == 2 && c[0].is_one()) continue;  // already covered by the beta family
            return UniPoly(*k_, std::move(c));
        }
    }

private:
    void push_beta(const FieldElem& b) {
        if (seen_.insert(b.to_hex()).second) hinted_.push_back(b);
    }
    UniPoly quad(const FieldElem& beta, const FieldElem& c0) const { return UniPoly(*k_, {c0, beta, k_->one()}); }

    const FieldCtx* k_;
    std::vector<FieldElem> hinted_;
    std::set<std::string> seen_;
    std::size_t hint_pos_ = 0;
    int stage_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t beta_idx_ = 0;
    int deg_ = 0;
    std::uint64_t idx_ = 0;
    std::uint64_t limit_ = 0;
};

// ---------------------------------------------------------------------------
// Verdicts and trace records.

/// A specialization y = g(x) that was used as evidence.
struct SpecializationRecord {
    std::string role;                 // "k-irreducibility" or "obstruction"
    std::vector<std::string> g;       // coefficients, degree 0 upward
    std::uint64_t weighted_degree = 0;
    std::vector<int> profile;         // factor degrees with multiplicity
    std::uint64_t trial = 0;          // 1-based position in the scan
    bool squarefree = true;
};

struct EliminationRecord {
    std::uint64_t n = 0;
    std::string method;  // "multiplicity", "degree-arithmetic", "specialization"
    std::string reason;
    // multiplicity
    std::string point;
    std::string point_field;
    std::uint64_t m0 = 0;
    std::uint64_t r = 0;
    // specialization
    std::string rule;  // "coprime-degree" or "divisibility"
    std::vector<std::string> g;
    int factor_degree = 0;
    std::uint64_t specialized_degree = 0;
};

struct AIVerdict {
    enum class Kind { ProvenAbsolutelyIrreducible, ProvenReducible, Undecided };
    Kind kind = Kind::Undecided;
    std::string basis;  // what settled it
    std::vector<SpecializationRecord> k_witness;  // one degree class whose subset sums exclude a split
    std::vector<SpecializationRecord> obstructions;
    std::vector<SplitPattern> patterns;
    std::vector<EliminationRecord> eliminations;
    std::vector<std::string> skipped;      // eliminations that could not be attempted
    std::string reducible_witness;         // a factor, for ProvenReducible
    std::uint64_t h_degree = 0;
    std::uint64_t trials_used = 0;
    bool budget_exhausted = false;

    std::vector<std::uint64_t> survivors() const {
        std::vector<std::uint64_t> out;
        for (const auto& p : patterns) {
            if (p.live()) out.push_back(p.n);
        }
        return out;
    }
};

inline std::string to_string(AIVerdict::Kind k) {
    switch (k) {
        case AIVerdict::Kind::ProvenAbsolutelyIrreducible: return "ProvenAbsolutelyIrreducible";
        case AIVerdict::Kind::ProvenReducible: return "ProvenReducible";
        case AIVerdict::Kind::Undecided: return "Undecided";
    }
    return "Undecided";
}

namespace detail {

inline std::vector<std::string> coeff_hex(const UniPoly& g) {
    std::vector<std::string> out;
    for (const auto& c : g.coeffs()) out.push_back(c.to_hex());
    return out;
}

inline UniPoly poly_from_hex(const FieldCtx& k, const std::vector<std::string>& c) {
    std::vector<FieldElem> v;
    for (const auto& h : c) v.push_back(parse_element(k, h));
    return UniPoly(k, std::move(v));
}

struct ScanOutcome {
    bool collapse = false;
    bool squarefree = true;
    std::uint64_t weighted = 0;
    std::vector<int> profile;
};

inline ScanOutcome evaluate_candidate(const BiPoly& h, const UniPoly& g, std::uint64_t seed) {
    ScanOutcome out;
    const auto sub = substitute_y(h, g);
    out.weighted = sub.weighted_degree;
    if (!sub.no_collapse || sub.value.degree() < 1) {
        out.collapse = true;
        return out;
    }
    (void)seed;
    auto prof = factor_degree_profile(sub.value);
    out.profile = std::move(prof.degrees);
    out.squarefree = prof.squarefree;
    return out;
}

/// Scans g until a K-irreducibility witness is known and no pattern is
/// live, or the budget runs out. Candidates are evaluated in parallel
/// batches and consumed strictly in scan order.
inline void run_specialization_scan(const BiPoly& h, const Budget& budget, AIVerdict& v) {
    GScan scan(h.field(), budget.hints);
    struct DegreeClass {
        std::uint64_t weighted = 0;
        std::vector<char> common;
        std::vector<SpecializationRecord> records;
    };
    std::map<int, DegreeClass> classes;
    auto any_live = [&] {
        return std::any_of(v.patterns.begin(), v.patterns.end(), [](const SplitPattern& p) { return p.live(); });
    };
    const unsigned threads = std::max(1U, budget.threads);
    std::uint64_t used = 0;
    bool exhausted_space = false;
    while ((v.k_witness.empty() || any_live()) && used < budget.trials && !exhausted_space) {
        std::vector<UniPoly> batch;
        while (batch.size() < threads && used + batch.size() < budget.trials) {
            auto g = scan.next();
            if (!g) {
                exhausted_space = true;
                break;
            }
            batch.push_back(std::move(*g));
        }
        std::vector<ScanOutcome> results(batch.size());
        if (batch.size() == 1) {
            results[0] = evaluate_candidate(h, batch[0], budget.seed);
        } else {
            std::vector<std::future<ScanOutcome>> fut;
            for (const auto& g : batch) {
                fut.push_back(std::async(std::launch::async, evaluate_candidate, std::cref(h), std::cref(g),
                                         budget.seed));
            }
            for (std::size_t k = 0; k < fut.size(); ++k) results[k] = fut[k].get();
        }
        for (std::size_t k = 0; k < batch.size(); ++k) {
            if (!v.k_witness.empty() && !any_live()) break;
            ++used;
            const auto& res = results[k];
            if (res.collapse) continue;
            if (v.k_witness.empty()) {
                auto& cls = classes[batch[k].degree()];
                const auto reach = subset_sums(res.profile, res.weighted);
                bool shrunk = false;
                if (cls.records.empty()) {
                    cls.weighted = res.weighted;
                    cls.common = reach;
                    shrunk = true;
                } else if (cls.weighted == res.weighted) {
                    for (std::size_t j = 0; j < reach.size(); ++j) {
                        if (cls.common[j] != 0 && reach[j] == 0) {
                            cls.common[j] = 0;
                            shrunk = true;
                        }
                    }
                }
                if (shrunk) {
                    cls.records.push_back(
                        {"k-irreducibility", coeff_hex(batch[k]), res.weighted, res.profile, used, res.squarefree});
                }
                if (!has_proper_sum(cls.common)) v.k_witness = cls.records;
            }
            bool used_here = false;
            for (auto& p : v.patterns) {
                if (!p.live()) continue;
                const auto ob = obstruction_from_profile(res.profile, res.weighted, p.n, res.squarefree, true);
                if (!ob.found) continue;
                if (!used_here) {
                    v.obstructions.push_back(
                        {"obstruction", coeff_hex(batch[k]), res.weighted, res.profile, used, res.squarefree});
                    used_here = true;
                }
                p.eliminate("specialization", ob.reason(p.n));
                EliminationRecord rec;
                rec.n = p.n;
                rec.method = p.method;
                rec.reason = p.reason;
                rec.rule = ob.kind;
                rec.g = coeff_hex(batch[k]);
                rec.factor_degree = ob.factor_degree;
                rec.specialized_degree = res.weighted;
                v.eliminations.push_back(std::move(rec));
            }
        }
    }
    v.trials_used = used;
    v.budget_exhausted = (v.k_witness.empty() || any_live()) && !exhausted_space;
}

inline void settle(AIVerdict& v) {
    const bool live = std::any_of(v.patterns.begin(), v.patterns.end(), [](const SplitPattern& p) { return p.live(); });
    if (!v.k_witness.empty() && !live) {
        v.kind = AIVerdict::Kind::ProvenAbsolutelyIrreducible;
        v.budget_exhausted = false;
    } else {
        v.kind = AIVerdict::Kind::Undecided;
    }
}

/// Tries multiplicity eliminations at one point for every live pattern.
inline void eliminate_at_point(std::vector<SplitPattern>& patterns, std::vector<EliminationRecord>& log,
                               std::vector<std::string>& skipped, const ProjPoint& pt, std::uint64_t m0,
                               std::uint64_t r) {
    if (m0 == 0) return;
    for (auto& p : patterns) {
        if (!p.live()) continue;
        try {
            p = eliminate_by_multiplicity(p, m0, r);
        } catch (const Inapplicable& e) {
            skipped.push_back("n=" + std::to_string(p.n) + " at " + pt.to_string() + ": " + e.what());
            continue;
        }
        if (p.live()) continue;
        EliminationRecord rec;
        rec.n = p.n;
        rec.method = p.method;
        rec.reason = p.reason;
        rec.point = pt.to_string();
        rec.point_field = pt.field().spec();
        rec.m0 = m0;
        rec.r = r;
        log.push_back(std::move(rec));
    }
}

}  // namespace detail

/// Absolute irreducibility of H for a quadratic binomial with s >= 1.
inline AIVerdict decide_absolute_irreducibility(const QuadBinomial& f, const Budget& budget = {}) {
    if (f.s < 1) throw InvalidArgument("the curve H is studied for s >= 1");
    AIVerdict v;
    v.h_degree = f.h_degree();
    if (f.t % f.i != 0) {
        v.kind = AIVerdict::Kind::ProvenAbsolutelyIrreducible;
        v.basis = "i-does-not-divide-t";
        return v;
    }
    v.basis = "pipeline";
    const CurveH H = construct_H(f);
    const FieldCtx& k = f.field();
    const std::uint64_t D = f.h_degree();
    v.patterns = split_patterns(D);

    // K-rational points at infinity.
    for (const auto& pt : {ProjPoint(k.one(), k.zero(), k.zero()), ProjPoint(k.zero(), k.one(), k.zero())}) {
        detail::eliminate_at_point(v.patterns, v.eliminations, v.skipped, pt, multiplicity_at(H.h, pt, D), 1);
    }
    // [1:b:0] with b in GF(2^t) \ GF(2^i), one b per absolute degree.
    if (f.t > f.i) {
        const int m = k.degree();
        const auto M = static_cast<int>(detail::lcm_u64(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(f.t)));
        if (M <= std::min(budget.max_compositum, 64)) {
            const Field big = make_field(M);
            const BiPoly hb = H.h.map_coefficients(Embedding(k, *big));
            for (const auto& b : detail::new_degree_representatives(*big, f.i, f.t)) {
                const ProjPoint pt(big->one(), b, big->zero());
                const auto r = detail::lcm_u64(static_cast<std::uint64_t>(m),
                                               static_cast<std::uint64_t>(absolute_degree(b))) /
                               static_cast<std::uint64_t>(m);
                detail::eliminate_at_point(v.patterns, v.eliminations, v.skipped, pt, multiplicity_at(hb, pt, D), r);
            }
        } else {
            v.skipped.push_back("points [1:b:0] with b outside GF(2^i): compositum degree " + std::to_string(M) +
                                " above the limit");
        }
    }
    for (auto& p : v.patterns) {
        if (!p.live()) continue;
        p = eliminate_by_degree_arithmetic(f, p);
        if (p.live()) continue;
        EliminationRecord rec;
        rec.n = p.n;
        rec.method = p.method;
        rec.reason = p.reason;
        v.eliminations.push_back(std::move(rec));
    }
    detail::run_specialization_scan(H.h, budget, v);
    detail::settle(v);
    return v;
}

namespace detail {

/// Q(x + beta y) for univariate Q, as a bivariate polynomial.
inline BiPoly compose_linear_form(const UniPoly& q, const FieldElem& beta) {
    BiPoly out(q.field());
    const auto c = q.coeffs();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        // (x + beta y)^e = sum over submasks k of e of x^k (beta y)^(e-k).
        for (std::uint64_t k = e;; k = (k - 1) & e) {
            out.add_term(c[e] * beta.pow(e - k), k, e - k);
            if (k == 0) break;
        }
    }
    return out;
}

/// Coefficients of H as a polynomial in y with coefficients in K[x].
inline std::map<std::uint64_t, UniPoly> y_slices(const BiPoly& h) {
    std::map<std::uint64_t, std::vector<FieldElem>> dense;
    for (const auto& [mono, c] : h.terms()) {
        auto& v = dense[mono.y];
        if (v.size() <= mono.x) v.resize(mono.x + 1, h.field().zero());
        v[mono.x] = c;
    }
    std::map<std::uint64_t, UniPoly> out;
    for (auto& [b, v] : dense) out.emplace(b, UniPoly(h.field(), std::move(v)));
    return out;
}

inline std::optional<UniPoly> content_in_x(const BiPoly& h) {
    std::optional<UniPoly> g;
    for (const auto& [b, c] : y_slices(h)) g = g ? poly_gcd(*g, c) : c.monic();
    if (g && g->degree() >= 1) return g;
    return std::nullopt;
}

}  // namespace detail

/// Absolute irreducibility of an arbitrary curve H(x, y) = 0 over K. Cheap
/// reducibility probes run first (monomial factor, content in x or y, a
/// polynomial in one linear form x + beta y); otherwise the same
/// specialization pipeline runs with multiplicities at [1:0:0] and [0:1:0].
inline AIVerdict decide_absolute_irreducibility(const BiPoly& h, const Budget& budget = {}) {
    if (h.total_degree() < 1) throw InvalidArgument("curve polynomial must be nonconstant");
    AIVerdict v;
    const FieldCtx& k = h.field();
    const auto D = static_cast<std::uint64_t>(h.total_degree());
    v.h_degree = D;
    if (D == 1) {
        v.kind = AIVerdict::Kind::ProvenAbsolutelyIrreducible;
        v.basis = "linear";
        return v;
    }
    std::uint64_t min_x = ~std::uint64_t{0}, min_y = ~std::uint64_t{0};
    for (const auto& [mono, c] : h.terms()) {
        min_x = std::min(min_x, mono.x);
        min_y = std::min(min_y, mono.y);
    }
    if (min_x > 0 || min_y > 0) {
        v.kind = AIVerdict::Kind::ProvenReducible;
        v.basis = "monomial-factor";
        v.reducible_witness = min_x > 0 ? "x" : "y";
        return v;
    }
    if (auto c = detail::content_in_x(h)) {
        v.kind = AIVerdict::Kind::ProvenReducible;
        v.basis = "content";
        v.reducible_witness = format_poly(*c);
        return v;
    }
    if (auto c = detail::content_in_x(h.swap_xy())) {
        v.kind = AIVerdict::Kind::ProvenReducible;
        v.basis = "content";
        std::string s = format_poly(*c);
        std::replace(s.begin(), s.end(), 'x', 'y');
        v.reducible_witness = s;
        return v;
    }
    // H = P(x + beta y) with deg P >= 2 splits into linear forms over the
    // splitting field of P.
    {
        std::vector<FieldElem> p0(D + 1, k.zero());
        for (const auto& [mono, c] : h.terms()) {
            if (mono.y == 0) p0[mono.x] = c;
        }
        const UniPoly P(k, std::move(p0));
        if (P.degree() == static_cast<int>(D)) {
            const FieldElem lead_y = h.coeff(0, D);
            // Coefficient of y^D in P(x + beta y) is lc(P) beta^D.
            const std::uint64_t limit =
                k.degree() <= 20 ? (std::uint64_t{1} << k.degree()) : budget.trials;
            for (std::uint64_t j = 1; j < limit; ++j) {
                const FieldElem beta = k.element(j);
                if (!(P.lead() * beta.pow(D) == lead_y)) continue;
                if (detail::compose_linear_form(P, beta) == h) {
                    const auto fac = factor_univariate(P, budget.seed);
                    v.kind = AIVerdict::Kind::ProvenReducible;
                    v.basis = "linear-form";
                    v.reducible_witness = format_bipoly(detail::compose_linear_form(fac.factors.front().poly, beta));
                    return v;
                }
            }
        }
    }
    v.basis = "pipeline";
    v.patterns = split_patterns(D);
    for (const auto& pt : {ProjPoint(k.one(), k.zero(), k.zero()), ProjPoint(k.zero(), k.one(), k.zero())}) {
        detail::eliminate_at_point(v.patterns, v.eliminations, v.skipped, pt, multiplicity_at(h, pt, D), 1);
    }
    detail::run_specialization_scan(h, budget, v);
    detail::settle(v);
    return v;
}

// ---------------------------------------------------------------------------
// Replay.

/// Re-derives every recorded step of a proof of absolute irreducibility for
/// the curve h: the K-irreducibility witness, each elimination from its own
/// witness, and that every pattern of deg h is covered. Returns false at the
/// first step that does not check out.
inline bool replay(const BiPoly& h, const AIVerdict& v, const QuadBinomial* f = nullptr,
                   std::uint64_t seed = kDefaultSeed) {
    if (v.kind != AIVerdict::Kind::ProvenAbsolutelyIrreducible) return false;
    if (v.basis == "i-does-not-divide-t") return f != nullptr && f->t % f->i != 0 && f->s >= 1;
    if (v.basis == "linear") return h.total_degree() == 1;
    const FieldCtx& k = h.field();
    if (v.k_witness.empty()) return false;
    {
        std::vector<UniPoly> gs;
        for (const auto& w : v.k_witness) gs.push_back(detail::poly_from_hex(k, w.g));
        try {
            if (!k_irreducibility_proof(h, gs)) return false;
        } catch (const DegreeCollapse&) {
            return false;
        }
    }
    const auto D = static_cast<std::uint64_t>(h.total_degree());
    std::set<std::uint64_t> covered;
    for (const auto& e : v.eliminations) {
        if (e.n < 2 || D % e.n != 0) return false;
        if (e.method == "multiplicity") {
            const Field pf = parse_field_spec(e.point_field);
            std::string body = e.point.substr(1, e.point.size() - 2);
            const auto c1 = body.find(':'), c2 = body.find(':', c1 + 1);
            const ProjPoint pt(parse_element(*pf, body.substr(0, c1)), parse_element(*pf, body.substr(c1 + 1, c2 - c1 - 1)),
                               parse_element(*pf, body.substr(c2 + 1)));
            const std::uint64_t m0 = multiplicity_at(h, pt, D);
            if (m0 != e.m0 || m0 % e.n == 0) return false;
            // The point's coordinates generate an extension of K of degree r.
            int deg = 1;
            for (const auto& c : {pt.x(), pt.y(), pt.z()}) deg = std::lcm(deg, absolute_degree(c));
            const int m = k.degree();
            const auto r = static_cast<std::uint64_t>(std::lcm(m, deg) / m);
            if (r != e.r || std::gcd(e.n, r) != 1) return false;
        } else if (e.method == "degree-arithmetic") {
            if (f == nullptr || f->t % f->i != 0) return false;
            SplitPattern p{e.n, D / e.n, PatternStatus::Live, {}, {}};
            if (eliminate_by_degree_arithmetic(*f, p).live()) return false;
        } else if (e.method == "specialization") {
            const UniPoly g = detail::poly_from_hex(k, e.g);
            SplitPattern p{e.n, D / e.n, PatternStatus::Live, {}, {}};
            try {
                const auto ob = e.rule == "divisibility" ? divisibility_obstruction(h, g, p)
                                                         : specialization_obstruction(h, g, p, seed);
                if (!ob.found || ob.kind != e.rule || ob.factor_degree != e.factor_degree) return false;
            } catch (const DegreeCollapse&) {
                return false;
            }
        } else {
            return false;
        }
        covered.insert(e.n);
    }
    for (const auto& p : split_patterns(D)) {
        if (covered.count(p.n) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Verdict { NotAPNAnywhere, NotAPNInfinitelyOften, Undetermined };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NotAPNAnywhere: return "NotAPNAnywhere";
        case Verdict::NotAPNInfinitelyOften: return "NotAPNInfinitelyOften";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "NotAPNAnywhere") return Verdict::NotAPNAnywhere;
    if (s == "NotAPNInfinitelyOften") return Verdict::NotAPNInfinitelyOften;
    if (s == "Undetermined") return Verdict::Undetermined;
    throw ParseError("unknown verdict '" + s + "'");
}

/// Off-diagonal zero of Delta (x, y nonzero, x != y) in some GF(2^(m n)).
struct ZeroWitness {
    std::string field;
    std::string x;
    std::string y;
};

struct ClassificationReport {
    static constexpr const char* kSchema = "apnforge.classification/1";

    std::string field;  // "m:0xMODULUS"
    int i = 0, s = 0, t = 0;
    std::string delta;
    std::optional<nlohmann::json> normalization;  // raw input and the reduction applied
    Verdict verdict = Verdict::Undetermined;
    std::string criterion;  // "s=0", "condition-1", "condition-2", "condition-3", "full-pipeline"
    std::string ai_verdict;
    std::uint64_t h_degree = 0;
    std::vector<SpecializationRecord> k_witness;
    std::vector<SpecializationRecord> witnesses;
    std::vector<EliminationRecord> eliminations;
    std::vector<std::uint64_t> patterns;
    std::vector<std::uint64_t> survivors;
    std::vector<std::string> skipped;
    std::optional<ZeroWitness> zero_witness;
    std::string note;
    std::uint64_t budget_used = 0;
    bool budget_exhausted = false;

    nlohmann::json to_json() const;
    static ClassificationReport from_json(const nlohmann::json& j);
};

inline nlohmann::json to_json(const SpecializationRecord& r) {
    return {{"role", r.role},       {"g", r.g},         {"weighted_degree", r.weighted_degree},
            {"profile", r.profile}, {"trial", r.trial}, {"squarefree", r.squarefree}};
}

inline SpecializationRecord specialization_from_json(const nlohmann::json& j) {
    return {j.at("role").get<std::string>(), j.at("g").get<std::vector<std::string>>(),
            j.at("weighted_degree").get<std::uint64_t>(), j.at("profile").get<std::vector<int>>(),
            j.at("trial").get<std::uint64_t>(), j.value("squarefree", true)};
}

inline nlohmann::json to_json(const EliminationRecord& e) {
    nlohmann::json j = {{"n", e.n}, {"method", e.method}, {"reason", e.reason}};
    if (e.method == "multiplicity") {
        j["point"] = e.point;
        j["point_field"] = e.point_field;
        j["m0"] = e.m0;
        j["r"] = e.r;
    } else if (e.method == "specialization") {
        j["rule"] = e.rule;
        j["g"] = e.g;
        j["factor_degree"] = e.factor_degree;
        j["specialized_degree"] = e.specialized_degree;
    }
    return j;
}

inline EliminationRecord elimination_from_json(const nlohmann::json& j) {
    EliminationRecord e;
    e.n = j.at("n").get<std::uint64_t>();
    e.method = j.at("method").get<std::string>();
    e.reason = j.at("reason").get<std::string>();
    if (e.method == "multiplicity") {
        e.point = j.at("point").get<std::string>();
        e.point_field = j.at("point_field").get<std::string>();
        e.m0 = j.at("m0").get<std::uint64_t>();
        e.r = j.at("r").get<std::uint64_t>();
    } else if (e.method == "specialization") {
        e.rule = j.at("rule").get<std::string>();
        e.g = j.at("g").get<std::vector<std::string>>();
        e.factor_degree = j.at("factor_degree").get<int>();
        e.specialized_degree = j.at("specialized_degree").get<std::uint64_t>();
    }
    return e;
}

inline nlohmann::json ClassificationReport::to_json() const {
    using apnforge::to_json;
    nlohmann::json j;
    j["schema"] = kSchema;
    j["params"] = {{"field", field}, {"i", i}, {"s", s}, {"t", t}, {"delta", delta}};
    if (normalization) j["normalization"] = *normalization;
    j["verdict"] = apnforge::to_string(verdict);
    j["criterion"] = criterion;
    j["ai_verdict"] = ai_verdict;
    j["h_degree"] = h_degree;
    j["k_witness"] = nlohmann::json::array();
    for (const auto& w : k_witness) j["k_witness"].push_back(to_json(w));
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) j["witnesses"].push_back(to_json(w));
    j["eliminations"] = nlohmann::json::array();
    for (const auto& e : eliminations) j["eliminations"].push_back(to_json(e));
    j["patterns"] = patterns;
    j["survivors"] = survivors;
    j["skipped"] = skipped;
    j["zero_witness"] = zero_witness ? nlohmann::json{{"field", zero_witness->field},
                                                      {"x", zero_witness->x},
                                                      {"y", zero_witness->y}}
                                     : nlohmann::json(nullptr);
    j["note"] = note;
    j["budget_used"] = budget_used;
    j["budget_exhausted"] = budget_exhausted;
    return j;
}

inline ClassificationReport ClassificationReport::from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != kSchema) throw ParseError("unexpected report schema");
    ClassificationReport r;
    const auto& p = j.at("params");
    r.field = p.at("field").get<std::string>();
    r.i = p.at("i").get<int>();
    r.s = p.at("s").get<int>();
    r.t = p.at("t").get<int>();
    r.delta = p.at("delta").get<std::string>();
    if (j.contains("normalization")) r.normalization = j.at("normalization");
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.criterion = j.at("criterion").get<std::string>();
    r.ai_verdict = j.at("ai_verdict").get<std::string>();
    r.h_degree = j.at("h_degree").get<std::uint64_t>();
    for (const auto& w : j.at("k_witness")) r.k_witness.push_back(specialization_from_json(w));
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(specialization_from_json(w));
    for (const auto& e : j.at("eliminations")) r.eliminations.push_back(elimination_from_json(e));
    r.patterns = j.at("patterns").get<std::vector<std::uint64_t>>();
    r.survivors = j.at("survivors").get<std::vector<std::uint64_t>>();
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
    if (!j.at("zero_witness").is_null()) {
        const auto& z = j.at("zero_witness");
        r.zero_witness = ZeroWitness{z.at("field").get<std::string>(), z.at("x").get<std::string>(),
                                     z.at("y").get<std::string>()};
    }
    r.note = j.at("note").get<std::string>();
    r.budget_used = j.at("budget_used").get<std::uint64_t>();
    r.budget_exhausted = j.at("budget_exhausted").get<bool>();
    return r;
}

namespace detail {

/// For s = 0, Delta(x, y) / (xy) = P(x) + P(y) with
/// P(z) = z^(2^i-1) + delta z^(2^t-1); a collision P(x) = P(y), x != y,
/// both nonzero, is an off-diagonal zero. Searches K, then extensions up
/// to 2^max_bits elements.
inline std::optional<ZeroWitness> find_s0_witness(const QuadBinomial& f, int max_bits = 20) {
    const FieldCtx& k = f.field();
    for (int n = 1; k.degree() * n <= max_bits; ++n) {
        const Field L = make_field(k.degree() * n);
        const FieldElem dl = Embedding(k, *L)(f.delta);
        const std::uint64_t ei = (std::uint64_t{1} << f.i) - 1, et = (std::uint64_t{1} << f.t) - 1;
        std::unordered_map<std::uint64_t, std::uint64_t> seen;
        const std::uint64_t size = std::uint64_t{1} << L->degree();
        for (std::uint64_t x = 1; x < size; ++x) {
            const std::uint64_t v = L->pow64(x, ei) ^ L->mul64(dl.low_word(), L->pow64(x, et));
            auto [it, inserted] = seen.emplace(v, x);
            if (!inserted) {
                return ZeroWitness{L->spec(), L->element(it->second).to_hex(), L->element(x).to_hex()};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Verdict for f over K = field of delta: s = 0, then condition 1 (i does
/// not divide t), then the pipeline. Conditions 2 and 3 are reported when
/// their divisibility hypothesis holds and the pipeline, which subsumes
/// them, proves absolute irreducibility.
inline ClassificationReport classify(const QuadBinomial& f, const Budget& budget = {}) {
    f.validate();
    ClassificationReport r;
    r.field = f.field().spec();
    r.i = f.i;
    r.s = f.s;
    r.t = f.t;
    r.delta = f.delta.to_hex();
    if (f.s == 0) {
        r.verdict = Verdict::NotAPNAnywhere;
        r.criterion = "s=0";
        r.zero_witness = detail::find_s0_witness(f);
        if (!r.zero_witness) {
            r.note = "no off-diagonal zero found in fields of up to 2^20 elements";
        } else if (r.zero_witness->field != r.field) {
            r.note = "no off-diagonal zero on K: an exponent folds to a power of two modulo 2^m - 1";
        }
        return r;
    }
    r.h_degree = f.h_degree();
    if (f.t % f.i != 0) {
        r.verdict = Verdict::NotAPNInfinitelyOften;
        r.criterion = "condition-1";
        r.ai_verdict = to_string(AIVerdict::Kind::ProvenAbsolutelyIrreducible);
        return r;
    }
    const AIVerdict v = decide_absolute_irreducibility(f, budget);
    r.ai_verdict = to_string(v.kind);
    r.k_witness = v.k_witness;
    for (const auto& w : v.k_witness) r.witnesses.push_back(w);
    r.eliminations = v.eliminations;
    for (const auto& w : v.obstructions) r.witnesses.push_back(w);
    for (const auto& p : v.patterns) r.patterns.push_back(p.n);
    r.survivors = v.survivors();
    r.skipped = v.skipped;
    r.budget_used = v.trials_used;
    r.budget_exhausted = v.budget_exhausted;
    const std::uint64_t ms = (std::uint64_t{1} << f.s) - 1;
    const bool cond2 = f.t > f.i && std::gcd(static_cast<std::uint64_t>(f.t), ms) == 1;
    const bool cond3 = std::gcd(f.t - f.i, f.s) == 1;
    if (v.kind == AIVerdict::Kind::ProvenAbsolutelyIrreducible) {
        r.verdict = Verdict::NotAPNInfinitelyOften;
        r.criterion = cond2 ? "condition-2" : cond3 ? "condition-3" : "full-pipeline";
    } else {
        r.verdict = Verdict::Undetermined;
        r.criterion = "full-pipeline";
        r.note = v.budget_exhausted ? "search budget exhausted" : "no elimination available";
    }
    return r;
}

}  // namespace apnforge

#endif  // APNFORGE_APNCORE_HPP
