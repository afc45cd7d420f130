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
 * @file verify.hpp
 * @brief Brute-force ground truth on desk-sized fields (at most 2^24
 * elements): differential uniformity, off-diagonal zeros of
 * Delta(x, y) = f(x+y) + f(x) + f(y), a catalog of known APN families, the
 * hexanomial irreducibility ratio and point counts along extension towers.
 *
 * For quadratic f, Delta is GF(2)-bilinear. For fixed y != 0 its zeros in x
 * form the kernel of a linear map, which always holds 0 and y, so the slice
 * contributes 2^dim(ker) - 2 off-diagonal zeros. The kernel dimension comes
 * from an XOR basis over the images of the polynomial basis; y runs in Gray
 * code order so each step updates those images with one XOR each.
 */

#ifndef APNFORGE_VERIFY_HPP
#define APNFORGE_VERIFY_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "apnforge/apncore.hpp"
#include "apnforge/embed.hpp"
#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"

namespace apnforge {

inline constexpr int kMaxBruteForceDegree = 24;

/// Worker count from APNFORGE_THREADS, else the hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("APNFORGE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

inline unsigned resolve_threads(unsigned t) { return t == 0 ? default_threads() : t; }

/// Runs body(chunk_begin, chunk_end, worker) over [begin, end) split into
/// contiguous chunks, one per worker.
template <class Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads, Body&& body) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    const unsigned w = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
    if (w <= 1) {
        body(begin, end, 0U);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < w; ++k) {
        const std::uint64_t lo = begin + total * k / w, hi = begin + total * (k + 1) / w;
        pool.emplace_back([&body, lo, hi, k] { body(lo, hi, k); });
    }
    for (auto& th : pool) th.join();
}

inline void check_brute_force_size(const FieldCtx& L) {
    if (L.degree() > kMaxBruteForceDegree) {
        throw CapExceeded("field GF(2^" + std::to_string(L.degree()) + ") above the 2^24 brute-force cap");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial functions.

struct PolyTerm {
    FieldElem coeff;
    std::uint64_t exponent = 0;
};

/// sum coeff * x^exponent. `owner` keeps the coefficient field alive when
/// the spec created it.
struct PolySpec {
    std::vector<PolyTerm> terms;
    Field owner;

    const FieldCtx& field() const {
        if (terms.empty()) throw InvalidArgument("empty polynomial function");
        return terms.front().coeff.field();
    }

    void validate() const {
        std::vector<std::uint64_t> seen;
        for (const auto& t : terms) {
            if (t.coeff.is_zero()) throw InvalidArgument("zero coefficient in polynomial function");
            if (t.exponent == 0) throw InvalidArgument("exponents must be positive");
            if (t.coeff.field_ptr() != terms.front().coeff.field_ptr()) throw FieldMismatch();
            seen.push_back(t.exponent);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InvalidArgument("repeated exponent");
    }

    /// Every exponent is a power of two or a sum of two.
    bool is_quadratic() const {
        return std::all_of(terms.begin(), terms.end(), [](const PolyTerm& t) { return std::popcount(t.exponent) <= 2; });
    }
};

/// Builds a spec on GF(2^m), folding exponents into [1, 2^m - 1] and merging
/// equal ones; terms whose coefficients cancel are dropped.
inline PolySpec make_polyspec(const FieldCtx& k, const std::vector<std::pair<FieldElem, std::uint64_t>>& raw,
                              Field owner = nullptr) {
    const int m = k.degree();
    std::map<std::uint64_t, FieldElem> acc;
    for (const auto& [c, e] : raw) {
        if (e == 0) throw InvalidArgument("exponents must be positive");
        std::uint64_t r = e;
        if (m < 64) {
            const std::uint64_t ord = (std::uint64_t{1} << m) - 1;
            r = (e - 1) % ord + 1;
        }
        auto it = acc.find(r);
        if (it == acc.end()) {
            acc.emplace(r, c);
        } else {
            it->second += c;
        }
    }
    PolySpec p;
    p.owner = std::move(owner);
    for (const auto& [e, c] : acc) {
        if (!c.is_zero()) p.terms.push_back({c, e});
    }
    if (p.terms.empty()) throw InvalidArgument("polynomial function is zero");
    return p;
}

inline PolySpec to_polyspec(const QuadBinomial& f) {
    return {{{f.field().one(), f.exponent1()}, {f.delta, f.exponent2()}}, nullptr};
}

inline std::string format_polyspec(const PolySpec& p) {
    std::string out;
    for (const auto& t : p.terms) {
        if (!out.empty()) out += " + ";
        if (!t.coeff.is_one()) out += t.coeff.to_hex() + "*";
        out += "x^" + std::to_string(t.exponent);
    }
    return out;
}

namespace detail {

/// Values of f on every element of L, indexed by the element's bit pattern.
inline std::vector<std::uint64_t> value_table(const PolySpec& f, const FieldCtx& L) {
    f.validate();
    check_brute_force_size(L);
    const FieldCtx& k = f.field();
    std::vector<std::uint64_t> coeff;
    if (&k == &L) {
        for (const auto& t : f.terms) coeff.push_back(t.coeff.low_word());
    } else {
        const Embedding emb(k, L);
        for (const auto& t : f.terms) coeff.push_back(emb(t.coeff).low_word());
    }
    const std::uint64_t size = std::uint64_t{1} << L.degree();
    std::vector<std::uint64_t> val(size, 0);
    if (L.is_primitive()) {
        // Walk x = g^j; each term keeps its running g^(j e).
        std::vector<std::uint64_t> step, cur;
        const std::uint64_t g = L.generator().low_word();
        for (std::size_t k2 = 0; k2 < f.terms.size(); ++k2) {
            step.push_back(L.pow64(g, f.terms[k2].exponent));
            cur.push_back(coeff[k2]);
        }
        std::uint64_t x = 1;
        for (std::uint64_t j = 0; j + 1 < size; ++j) {
            std::uint64_t v = 0;
            for (std::size_t k2 = 0; k2 < cur.size(); ++k2) {
                v ^= cur[k2];
                cur[k2] = L.mul64(cur[k2], step[k2]);
            }
            val[x] = v;
            x = L.mul64(x, g);
        }
    } else {
        for (std::uint64_t x = 1; x < size; ++x) {
            std::uint64_t v = 0;
            for (std::size_t k2 = 0; k2 < coeff.size(); ++k2) {
                v ^= L.mul64(coeff[k2], L.pow64(x, f.terms[k2].exponent));
            }
            val[x] = v;
        }
    }
    return val;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Differential uniformity.

struct DUResult {
    int field_degree = 0;
    std::uint64_t du = 0;
    std::map<std::uint64_t, std::uint64_t> image_sizes;  // |D_a| -> number of a
    double elapsed_ms = 0;

    bool is_apn() const noexcept { return du == 2; }
};

/// max over a != 0 and b of #{x : f(x+a) + f(x) = b}.
inline DUResult differential_uniformity(const PolySpec& f, const FieldCtx& L, unsigned threads = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto val = detail::value_table(f, L);
    const std::uint64_t size = val.size();
    threads = detail::resolve_threads(threads);
    std::vector<std::uint64_t> best(threads, 0);
    std::vector<std::map<std::uint64_t, std::uint64_t>> hist(threads);
    detail::parallel_chunks(1, size, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        std::vector<std::uint32_t> cnt(size, 0);
        for (std::uint64_t a = lo; a < hi; ++a) {
            std::fill(cnt.begin(), cnt.end(), 0U);
            for (std::uint64_t x = 0; x < size; ++x) ++cnt[val[x] ^ val[x ^ a]];
            std::uint64_t mx = 0, distinct = 0;
            for (auto c : cnt) {
                if (c == 0) continue;
                ++distinct;
                mx = std::max<std::uint64_t>(mx, c);
            }
            best[w] = std::max(best[w], mx);
            ++hist[w][distinct];
        }
    });
    DUResult r;
    r.field_degree = L.degree();
    for (unsigned w = 0; w < threads; ++w) {
        r.du = std::max(r.du, best[w]);
        for (const auto& [k, v] : hist[w]) r.image_sizes[k] += v;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline DUResult differential_uniformity(const PolySpec& f, unsigned threads = 0) {
    return differential_uniformity(f, f.field(), threads);
}

// ---------------------------------------------------------------------------
// Off-diagonal zeros.

struct PointCount {
    int extension_degree = 0;  // n with L = GF(q^n)
    int field_degree = 0;      // degree of L over GF(2)
    std::uint64_t count = 0;
};

namespace detail {

inline std::uint64_t quadratic_delta(const FieldCtx& L, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& t,
                                     std::uint64_t x, std::uint64_t y) {
    std::uint64_t v = 0;
    for (const auto& [c, e] : t) {
        v ^= L.mul64(c, L.pow64(x ^ y, e) ^ L.pow64(x, e) ^ L.pow64(y, e));
    }
    return v;
}

inline int xor_rank(const std::uint64_t* v, int n) {
    std::uint64_t basis[64] = {};
    int rank = 0;
    for (int j = 0; j < n; ++j) {
        std::uint64_t x = v[j];
        while (x != 0) {
            const int hb = 63 - std::countl_zero(x);
            if (basis[hb] == 0) {
                basis[hb] = x;
                ++rank;
                break;
            }
            x ^= basis[hb];
        }
    }
    return rank;
}

}  // namespace detail

/// #{(x, y) in L^2 : Delta(x, y) = 0, x, y != 0, x != y} for quadratic f.
/// With swap the roles of x and y are exchanged in the slicing.
inline std::uint64_t count_off_diagonal(const PolySpec& f, const FieldCtx& L, bool swap = false, unsigned threads = 0) {
    f.validate();
    detail::check_brute_force_size(L);
    if (!f.is_quadratic()) throw InvalidArgument("point counting needs a quadratic function");
    const int M = L.degree();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
    {
        const FieldCtx& k = f.field();
        std::optional<Embedding> emb;
        if (&k != &L) emb.emplace(k, L);
        for (const auto& t : f.terms) terms.emplace_back((emb ? (*emb)(t.coeff) : t.coeff).low_word(), t.exponent);
    }
    // table[j][k]: Delta at the basis pair, sliced variable first.
    std::vector<std::vector<std::uint64_t>> table(M, std::vector<std::uint64_t>(M));
    for (int j = 0; j < M; ++j) {
        for (int k = 0; k < M; ++k) {
            const std::uint64_t u = std::uint64_t{1} << j, v = std::uint64_t{1} << k;
            table[j][k] = swap ? detail::quadratic_delta(L, terms, v, u) : detail::quadratic_delta(L, terms, u, v);
        }
    }
    const std::uint64_t size = std::uint64_t{1} << M;
    threads = detail::resolve_threads(threads);
    std::vector<std::uint64_t> partial(threads, 0);
    detail::parallel_chunks(1, size, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        std::vector<std::uint64_t> col(M, 0);
        const std::uint64_t y0 = lo ^ (lo >> 1);
        for (int j = 0; j < M; ++j) {
            for (int k = 0; k < M; ++k) {
                if (((y0 >> k) & 1U) != 0) col[j] ^= table[j][k];
            }
        }
        std::uint64_t sum = 0;
        for (std::uint64_t g = lo;;) {
            // y = gray(g) is nonzero here.
            const int rank = detail::xor_rank(col.data(), M);
            sum += (std::uint64_t{1} << (M - rank)) - 2;
            if (++g >= hi) break;
            const int flip = std::countr_zero(g);
            for (int j = 0; j < M; ++j) col[j] ^= table[j][flip];
        }
        partial[w] = sum;
    });
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

inline PointCount count_points_off_diagonal(const QuadBinomial& f, const FieldCtx& L, bool swap = false,
                                            unsigned threads = 0) {
    const int m = f.field().degree();
    if (L.degree() % m != 0) throw InvalidArgument("L must be an extension of the field of delta");
    return {L.degree() / m, L.degree(), count_off_diagonal(to_polyspec(f), L, swap, threads)};
}

inline PointCount count_points_off_diagonal(const PolySpec& f, const FieldCtx& L, bool swap = false,
                                            unsigned threads = 0) {
    const int m = f.field().degree();
    if (L.degree() % m != 0) throw InvalidArgument("L must be an extension of the coefficient field");
    return {L.degree() / m, L.degree(), count_off_diagonal(f, L, swap, threads)};
}

// ---------------------------------------------------------------------------
// Extension towers.

struct WeilProbe {
    std::vector<PointCount> counts;
    std::optional<int> first_nonzero;   // least n with off-diagonal zeros
    std::optional<int> persistent_from; // least n0 with zeros at every n >= n0 in range
    std::uint64_t violations = 0;       // n > first_nonzero with no zeros
};

inline WeilProbe weil_growth_probe(const QuadBinomial& f, const FieldCtx& base, const std::vector<int>& n_range,
                                   unsigned threads = 0) {
    const FieldCtx& k = f.field();
    if (base.degree() % k.degree() != 0) throw InvalidArgument("base must contain the field of delta");
    for (int n : n_range) {
        if (n < 1) throw InvalidArgument("extension degrees must be positive");
        if (base.degree() * n > kMaxBruteForceDegree) {
            throw CapExceeded("GF(2^" + std::to_string(base.degree() * n) + ") above the 2^24 brute-force cap");
        }
    }
    std::vector<int> ns = n_range;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    WeilProbe out;
    for (int n : ns) {
        const Field L = make_field(base.degree() * n);
        const PolySpec p{{{L->one(), f.exponent1()}, {Embedding(k, *L)(f.delta), f.exponent2()}}, L};
        out.counts.push_back({n, L->degree(), count_off_diagonal(p, *L, false, threads)});
    }
    for (const auto& c : out.counts) {
        if (c.count > 0 && !out.first_nonzero) out.first_nonzero = c.extension_degree;
        if (out.first_nonzero && c.count == 0) ++out.violations;
    }
    for (auto it = out.counts.rbegin(); it != out.counts.rend() && it->count > 0; ++it) {
        out.persistent_from = it->extension_degree;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog of APN families.

struct CatalogParams {
    std::map<std::string, long long> ints;
    std::map<std::string, std::string> elems;  // element literals
    std::optional<std::string> field;          // "m:0xMODULUS"; default modulus otherwise
};

/// Parameters after derivation, with elements parsed in the family field.
struct ResolvedParams {
    std::map<std::string, long long> ints;
    std::map<std::string, FieldElem> elems;
    Field field;

    long long operator[](const std::string& name) const { return ints.at(name); }
    const FieldElem& elem(const std::string& name) const { return elems.at(name); }
    int m() const { return static_cast<int>(ints.at("m")); }
};

/// A constraint exactly as tabulated, with the reading used to check it.
struct CatalogConstraint {
    std::string name;
    std::string printed;
    std::function<bool(const ResolvedParams&)> holds;
    bool on_elements = false;
};

struct Erratum {
    std::string printed;
    std::string reading;
};

struct CatalogFamily {
    std::string id;
    std::string formula;
    std::vector<std::string> int_params;
    std::vector<std::string> elem_params;
    std::vector<CatalogConstraint> constraints;
    std::vector<Erratum> errata;
    /// Fills in derivable integers (m from r and so on).
    std::function<void(std::map<std::string, long long>&)> derive;
    /// Defaults for element parameters the caller omitted.
    std::function<void(ResolvedParams&)> defaults;
    std::function<PolySpec(const ResolvedParams&)> build;
};

namespace detail {

inline long long gcdll(long long a, long long b) { return std::gcd(a, b); }

inline std::uint64_t pw(long long e) {
    if (e < 0 || e > 63) throw InvalidArgument("exponent parameter out of range");
    return std::uint64_t{1} << e;
}

/// 2^(-k) as an exponent on GF(2^m).
inline std::uint64_t pw_neg(long long k, int m) { return pw(((m - k) % m + m) % m); }

inline bool is_power_of(const FieldElem& u, std::uint64_t e) {
    if (u.is_zero()) return false;
    const std::uint64_t ord = u.field().group_order();
    return u.pow(ord / std::gcd(ord, e)).is_one();
}

inline bool in_subfield(const FieldElem& a, long long k) {
    const int m = a.field().degree();
    return k >= 1 && m % k == 0 && is_in_subfield(a, static_cast<int>(k));
}

inline bool has(const ResolvedParams& p, const char* k) { return p.ints.count(k) != 0; }

/// Derives whichever of m, r is missing from m = a r + b.
inline void derive_linear(std::map<std::string, long long>& v, long long a, long long b, const char* r = "r") {
    if (v.count("m") == 0 && v.count(r) != 0) v["m"] = a * v[r] + b;
    if (v.count(r) == 0 && v.count("m") != 0 && (v["m"] - b) % a == 0) v[r] = (v["m"] - b) / a;
}

inline std::vector<CatalogFamily> build_catalog() {
    using P = ResolvedParams;
    std::vector<CatalogFamily> c;
    auto mono = [](const P& p, std::uint64_t e) {
        return make_polyspec(*p.field, {{p.field->one(), e}}, p.field);
    };

    c.push_back({"gold", "x^(2^r+1)", {"r", "m"}, {},
                 {{"(r,m)=1", "(r,m) = 1", [](const P& p) { return gcdll(p["r"], p["m"]) == 1; }}},
                 {}, [](auto&) {}, [](P&) {},
                 [mono](const P& p) { return mono(p, pw(p["r"]) + 1); }});

    c.push_back({"kasami", "x^(2^(2r)-2^r+1)", {"r", "m"}, {},
                 {{"(r,m)=1", "(r,m)=1", [](const P& p) { return gcdll(p["r"], p["m"]) == 1; }},
                  {"m odd", "m odd", [](const P& p) { return p["m"] % 2 == 1; }}},
                 {}, [](auto&) {}, [](P&) {},
                 [mono](const P& p) { return mono(p, pw(2 * p["r"]) - pw(p["r"]) + 1); }});

    c.push_back({"welch", "x^(2^r+3)", {"r", "m"}, {},
                 {{"m=2r+1", "n=2r+1", [](const P& p) { return p["m"] == 2 * p["r"] + 1; }}},
                 {{"n=2r+1", "n is the field degree m"}},
                 [](auto& v) { derive_linear(v, 2, 1); }, [](P&) {},
                 [mono](const P& p) { return mono(p, pw(p["r"]) + 3); }});

    c.push_back({"niho", "x^(2^r+2^(r/2)-1) for t even, x^(2^r+2^((3r+1)/2)-1) for t odd", {"r", "m", "t"}, {},
                 {{"m=2r+1", "m = 2r+1", [](const P& p) { return p["m"] == 2 * p["r"] + 1; }},
                  {"exponent integral", "r/2 (t even) or (3r+1)/2 (t odd) integral",
                   [](const P& p) { return p["t"] % 2 == 0 ? p["r"] % 2 == 0 : (3 * p["r"] + 1) % 2 == 0; }}},
                 {{"t even / t odd", "t is a raw parameter, defaulting to r"}},
                 [](auto& v) {
                     derive_linear(v, 2, 1);
                     if (v.count("t") == 0 && v.count("r") != 0) v["t"] = v["r"];
                 },
                 [](P&) {},
                 [mono](const P& p) {
                     const long long r = p["r"];
                     return mono(p, p["t"] % 2 == 0 ? pw(r) + pw(r / 2) - 1 : pw(r) + pw((3 * r + 1) / 2) - 1);
                 }});

    c.push_back({"inverse", "x^(2^(2r)-1)", {"r", "m"}, {},
                 {{"m=2r+1", "m=2r+1", [](const P& p) { return p["m"] == 2 * p["r"] + 1; }}},
                 {}, [](auto& v) { derive_linear(v, 2, 1); }, [](P&) {},
                 [mono](const P& p) { return mono(p, pw(2 * p["r"]) - 1); }});

    c.push_back({"dobbertin", "x^(2^(4r)+2^(3r)+2^(2r)+2^r-1)", {"r", "m"}, {},
                 {{"m=5r", "m = 5r", [](const P& p) { return p["m"] == 5 * p["r"]; }}},
                 {}, [](auto& v) { derive_linear(v, 5, 0); }, [](P&) {},
                 [mono](const P& p) {
                     const long long r = p["r"];
                     return mono(p, pw(4 * r) + pw(3 * r) + pw(2 * r) + pw(r) - 1);
                 }});

    // Family (1): the tabulated constraints use s for the exponent parameter.
    c.push_back({"family1", "x^(2^i+1) + u x^(2^(k+i)+2^(k(r-1)))", {"i", "k", "r", "m"}, {"u"},
                 {{"m=rk", "m=rk in {3k,4k}",
                   [](const P& p) { return p["m"] == p["r"] * p["k"] && (p["r"] == 3 || p["r"] == 4); }},
                  {"(r,s)=1", "(r,s)=1", [](const P& p) { return gcdll(p["r"], p["i"]) == 1; }},
                  {"(s,k)=1", "(s,k)=1", [](const P& p) { return gcdll(p["i"], p["k"]) == 1; }},
                  {"(r,k)=1", "(r,k)=1", [](const P& p) { return gcdll(p["r"], p["k"]) == 1; }},
                  {"r|(k+s)", "r|(k+s)", [](const P& p) { return (p["k"] + p["i"]) % p["r"] == 0; }},
                  {"u (2^k-1)-th power", "u is a 2^k-1-th power in K",
                   [](const P& p) { return is_power_of(p.elem("u"), pw(p["k"]) - 1); }, true}},
                 {{"s", "s is the exponent parameter i"}},
                 [](auto& v) {
                     if (v.count("m") == 0 && v.count("r") != 0 && v.count("k") != 0) v["m"] = v["r"] * v["k"];
                 },
                 [](P& p) {
                     if (p.elems.count("u") == 0) p.elems["u"] = p.field->generator().pow(pw(p["k"]) - 1);
                 },
                 [](const P& p) {
                     const FieldCtx& k = *p.field;
                     return make_polyspec(k, {{k.one(), pw(p["i"]) + 1},
                                              {p.elem("u"), pw(p["k"] + p["i"]) + pw(p["k"] * (p["r"] - 1))}},
                                          p.field);
                 }});

    auto three_k = [] {
        return std::vector<CatalogConstraint>{
            {"m=3k", "m=3k", [](const P& p) { return p["m"] == 3 * p["k"]; }},
            {"(3,s)=1", "(3,s)=1", [](const P& p) { return gcdll(3, p["s"]) == 1; }},
            {"(s,k)=1", "(s,k)=1", [](const P& p) { return gcdll(p["s"], p["k"]) == 1; }},
            {"(3,k)=1", "(3,k)=1", [](const P& p) { return gcdll(3, p["k"]) == 1; }},
            {"3|(k+s)", "3|(k+s)", [](const P& p) { return (p["k"] + p["s"]) % 3 == 0; }}};
    };
    auto derive3k = [](auto& v) {
        if (v.count("m") == 0 && v.count("k") != 0) v["m"] = 3 * v["k"];
        if (v.count("k") == 0 && v.count("m") != 0 && v["m"] % 3 == 0) v["k"] = v["m"] / 3;
    };

    {
        auto cons = three_k();
        cons.push_back({"uv!=1", "uv != 1", [](const P& p) { return !(p.elem("u") * p.elem("v")).is_one(); }, true});
        cons.push_back({"u (2^k-1)-th power", "u is a 2^k-1-th power",
                        [](const P& p) { return is_power_of(p.elem("u"), pw(p["k"]) - 1); }, true});
        c.push_back({"family2", "u x^(2^-k+2^(k+s)) + u^(2^k) x^(2^s+1) + v x^(2^(k+s)+2^s)", {"k", "s", "m"},
                     {"u", "v"}, cons, {}, derive3k,
                     [](P& p) {
                         if (p.elems.count("u") == 0) p.elems["u"] = p.field->generator().pow(pw(p["k"]) - 1);
                         if (p.elems.count("v") == 0) p.elems["v"] = p.field->zero();
                     },
                     [](const P& p) {
                         const FieldCtx& K = *p.field;
                         const long long k = p["k"], s = p["s"];
                         const FieldElem& u = p.elem("u");
                         return make_polyspec(K, {{u, pw_neg(k, p.m()) + pw(k + s)},
                                                  {u.frobenius(static_cast<int>(k)), pw(s) + 1},
                                                  {p.elem("v"), pw(k + s) + pw(s)}},
                                              p.field);
                     }});
    }

    c.push_back({"family3",
                 "b x^(2^s+1) + b^(2^k) x^(2^(k+s)+2^k) + c x^(2^k+1) + sum_{j=1}^{k-1} r_j x^(2^(j+k)+2^j)",
                 {"k", "s", "m"}, {"b", "c", "r1..r(k-1)"},
                 {{"m=2k", "m=2k", [](const P& p) { return p["m"] == 2 * p["k"]; }},
                  {"r_j in GF(2^k)", "r_j in GF(2^k)",
                   [](const P& p) {
                       for (long long j = 1; j < p["k"]; ++j) {
                           if (!in_subfield(p.elem("r" + std::to_string(j)), p["k"])) return false;
                       }
                       return true;
                   },
                   true},
                  {"b,c not in GF(2^k)", "b,c not in GF(2^k)",
                   [](const P& p) { return !in_subfield(p.elem("b"), p["k"]) && !in_subfield(p.elem("c"), p["k"]); },
                   true}},
                 {{"2^(j+k)+2^i", "the summation index is j: 2^(j+k)+2^j"}},
                 [](auto& v) {
                     if (v.count("m") == 0 && v.count("k") != 0) v["m"] = 2 * v["k"];
                     if (v.count("k") == 0 && v.count("m") != 0 && v["m"] % 2 == 0) v["k"] = v["m"] / 2;
                 },
                 [](P& p) {
                     if (p.elems.count("b") == 0) p.elems["b"] = p.field->generator();
                     if (p.elems.count("c") == 0) p.elems["c"] = p.field->generator();
                     for (long long j = 1; j < p["k"]; ++j) {
                         const auto name = "r" + std::to_string(j);
                         if (p.elems.count(name) == 0) p.elems[name] = p.field->zero();
                     }
                 },
                 [](const P& p) {
                     const FieldCtx& K = *p.field;
                     const long long k = p["k"], s = p["s"];
                     std::vector<std::pair<FieldElem, std::uint64_t>> t{
                         {p.elem("b"), pw(s) + 1},
                         {p.elem("b").frobenius(static_cast<int>(k)), pw(k + s) + pw(k)},
                         {p.elem("c"), pw(k) + 1}};
                     for (long long j = 1; j < k; ++j) t.emplace_back(p.elem("r" + std::to_string(j)), pw(j + k) + pw(j));
                     return make_polyspec(K, t, p.field);
                 }});

    c.push_back({"family4", "x^3 + Tr(x^9)", {"m"}, {}, {}, {{"Tr", "absolute trace of GF(2^m)"}},
                 [](auto&) {}, [](P&) {},
                 [](const P& p) {
                     const FieldCtx& K = *p.field;
                     std::vector<std::pair<FieldElem, std::uint64_t>> t{{K.one(), 3}};
                     for (int j = 0; j < p.m(); ++j) t.emplace_back(K.one(), std::uint64_t{9} << j);
                     return make_polyspec(K, t, p.field);
                 }});

    {
        auto cons = three_k();
        cons.push_back({"u primitive", "u primitive",
                        [](const P& p) { return element_order(p.elem("u")) == p.field->group_order(); }, true});
        cons.push_back({"v in GF(2^k)", "v in GF(2^k)", [](const P& p) { return in_subfield(p.elem("v"), p["k"]); }, true});
        c.push_back({"family5", "u^(2^k) x^(2^-k+2^(k+s)) + u x^(2^s+1) + v x^(2^(k+s)+2^s)", {"k", "s", "m"},
                     {"u", "v"}, cons, {}, derive3k,
                     [](P& p) {
                         if (p.elems.count("u") == 0) p.elems["u"] = p.field->generator();
                         if (p.elems.count("v") == 0) p.elems["v"] = p.field->zero();
                     },
                     [](const P& p) {
                         const FieldCtx& K = *p.field;
                         const long long k = p["k"], s = p["s"];
                         const FieldElem& u = p.elem("u");
                         return make_polyspec(K, {{u.frobenius(static_cast<int>(k)), pw_neg(k, p.m()) + pw(k + s)},
                                                  {u, pw(s) + 1},
                                                  {p.elem("v"), pw(k + s) + pw(s)}},
                                              p.field);
                     }});
    }
    {
        auto cons = three_k();
        cons.push_back({"u primitive", "u primitive",
                        [](const P& p) { return element_order(p.elem("u")) == p.field->group_order(); }, true});
        cons.push_back({"w,v in GF(2^k)", "w,v in GF(2^k)",
                        [](const P& p) { return in_subfield(p.elem("v"), p["k"]) && in_subfield(p.elem("w"), p["k"]); },
                        true});
        cons.push_back({"wv!=1", "wv != 1", [](const P& p) { return !(p.elem("w") * p.elem("v")).is_one(); }, true});
        c.push_back({"family6",
                     "u^(2^k) x^(2^-k+2^(k+s)) + u x^(2^s+1) + v x^(2^-k+1) + w u^(2^k+1) x^(2^(k+s)+2^s)",
                     {"k", "s", "m"}, {"u", "v", "w"}, cons, {}, derive3k,
                     [](P& p) {
                         if (p.elems.count("u") == 0) p.elems["u"] = p.field->generator();
                         if (p.elems.count("v") == 0) p.elems["v"] = p.field->zero();
                         if (p.elems.count("w") == 0) p.elems["w"] = p.field->zero();
                     },
                     [](const P& p) {
                         const FieldCtx& K = *p.field;
                         const long long k = p["k"], s = p["s"];
                         const FieldElem& u = p.elem("u");
                         const FieldElem uk = u.frobenius(static_cast<int>(k));
                         return make_polyspec(K, {{uk, pw_neg(k, p.m()) + pw(k + s)},
                                                  {u, pw(s) + 1},
                                                  {p.elem("v"), pw_neg(k, p.m()) + 1},
                                                  {p.elem("w") * uk * u, pw(k + s) + pw(s)}},
                                              p.field);
                     }});
    }

    c.push_back({"hexanomial",
                 "x(x^(2^i)+x^(2^k)+c x^(2^(i+k))) + x^(2^i)(c^(2^k) x^(2^k)+b x^(2^(i+k))) + x^(2^(i+k)+2^k)",
                 {"k", "i", "m"}, {"b", "c"},
                 {{"m=2k", "GF(2^(2k))", [](const P& p) { return p["m"] == 2 * p["k"]; }},
                  {"k>=3", "k >= 3", [](const P& p) { return p["k"] >= 3; }},
                  {"(i,k)=1", "(i,k)=1", [](const P& p) { return gcdll(p["i"], p["k"]) == 1; }},
                  {"b not in GF(2^k)", "b not in GF(2^k)", [](const P& p) { return !in_subfield(p.elem("b"), p["k"]); },
                   true}},
                 {},
                 [](auto& v) {
                     if (v.count("m") == 0 && v.count("k") != 0) v["m"] = 2 * v["k"];
                 },
                 [](P& p) {
                     if (p.elems.count("b") == 0) p.elems["b"] = p.field->generator();
                     if (p.elems.count("c") == 0) {
                         // Least c (integer order) with p(x) irreducible.
                         const FieldCtx& K = *p.field;
                         const int k = static_cast<int>(p["k"]);
                         const std::uint64_t e = pw(p["i"]);
                         for (std::uint64_t v = 0; v < K.group_order() + 1; ++v) {
                             const FieldElem c = K.element(v);
                             std::vector<FieldElem> q(e + 2, K.zero());
                             q[0] = K.one();
                             q[1] = c.frobenius(k);
                             q[e] = c;
                             q[e + 1] = K.one();
                             if (is_irreducible(UniPoly(K, std::move(q)))) {
                                 p.elems["c"] = c;
                                 break;
                             }
                         }
                         if (p.elems.count("c") == 0) throw ConstraintViolation("p irreducible", "no c makes p irreducible");
                     }
                 },
                 [](const P& p) {
                     const FieldCtx& K = *p.field;
                     const long long i = p["i"], k = p["k"];
                     const FieldElem& c = p.elem("c");
                     return make_polyspec(K, {{K.one(), pw(i) + 1},
                                              {K.one(), pw(k) + 1},
                                              {c, pw(i + k) + 1},
                                              {c.frobenius(static_cast<int>(k)), pw(i) + pw(k)},
                                              {p.elem("b"), pw(i) + pw(i + k)},
                                              {K.one(), pw(i + k) + pw(k)}},
                                          p.field);
                 }});
    return c;
}

}  // namespace detail

inline const std::vector<CatalogFamily>& catalog() {
    static const std::vector<CatalogFamily> c = detail::build_catalog();
    return c;
}

inline const CatalogFamily& catalog_family(const std::string& id) {
    for (const auto& f : catalog()) {
        if (f.id == id) return f;
    }
    std::string known;
    for (const auto& f : catalog()) known += (known.empty() ? "" : ", ") + f.id;
    throw InvalidArgument("unknown family '" + id + "' (known: " + known + ")");
}

namespace detail {

/// Throws naming every violated constraint of one kind; `constraint` holds
/// the first in table order.
inline void check_constraints(const CatalogFamily& fam, const ResolvedParams& p, bool elements) {
    std::string first, all;
    for (const auto& con : fam.constraints) {
        if (con.on_elements != elements || con.holds(p)) continue;
        if (first.empty()) first = con.name;
        all += (all.empty() ? "" : "; ") + con.printed;
    }
    if (!first.empty()) throw ConstraintViolation(first, fam.id + ": constraint violated: " + all);
}

}  // namespace detail

struct CatalogInstance {
    std::string family;
    ResolvedParams params;
    PolySpec poly;
};

/// Checks the tabulated constraints and builds the function on the implied
/// field. A failed check throws ConstraintViolation naming the constraint.
inline CatalogInstance catalog_instantiate(const std::string& id, const CatalogParams& in) {
    const CatalogFamily& fam = catalog_family(id);
    auto ints = in.ints;
    for (const auto& [name, v] : ints) {
        if (std::find(fam.int_params.begin(), fam.int_params.end(), name) == fam.int_params.end()) {
            throw InvalidArgument("family " + id + " has no integer parameter '" + name + "'");
        }
    }
    fam.derive(ints);
    for (const auto& name : fam.int_params) {
        if (ints.count(name) == 0) throw InvalidArgument("family " + id + " needs parameter '" + name + "'");
        if (ints[name] < (name == "m" ? 2 : 1) || ints[name] > 63) {
            throw InvalidArgument("parameter " + name + " out of range");
        }
    }
    ResolvedParams p;
    p.ints = ints;
    detail::check_constraints(fam, p, false);
    p.field = in.field ? parse_field_spec(*in.field) : make_field(p.m());
    if (p.field->degree() != p.m()) throw InvalidArgument("field degree does not match m");
    if (p.m() > 64) throw InvalidArgument("catalog fields are limited to m <= 64");
    for (const auto& [name, lit] : in.elems) {
        const bool rj = id == "family3" && name.size() > 1 && name[0] == 'r';
        if (!rj && std::find(fam.elem_params.begin(), fam.elem_params.end(), name) == fam.elem_params.end()) {
            throw InvalidArgument("family " + id + " has no element parameter '" + name + "'");
        }
        p.elems[name] = parse_element(*p.field, lit);
    }
    fam.defaults(p);
    detail::check_constraints(fam, p, true);
    PolySpec poly = fam.build(p);
    return {id, std::move(p), std::move(poly)};
}

// ---------------------------------------------------------------------------
// Hexanomial irreducibility ratio.

struct HexRatio {
    int k = 0;
    int i = 0;
    std::uint64_t irreducible = 0;
    std::uint64_t rootless = 0;  // p has no root in GF(2^(2k))
    std::uint64_t total = 0;

    double ratio() const noexcept { return total == 0 ? 0.0 : static_cast<double>(irreducible) / static_cast<double>(total); }
};

/// Fraction of c in GF(2^(2k)) with p(x) = x^(2^i+1) + c x^(2^i) + c^(2^k) x + 1
/// irreducible over GF(2^(2k)).
inline HexRatio hexanomial_ratio(int k, int i, unsigned threads = 0) {
    if (k < 3) throw ConstraintViolation("k>=3", "hexanomial needs k >= 3");
    if (i < 1 || std::gcd(i, k) != 1) throw ConstraintViolation("(i,k)=1", "hexanomial needs gcd(i, k) = 1");
    if (2 * k > 16) throw CapExceeded("exhaustive c sweep limited to 2k <= 16");
    if (i > 16) throw CapExceeded("exponent 2^i too large");
    const Field K = make_field(2 * k);
    const std::uint64_t size = std::uint64_t{1} << (2 * k);
    const std::uint64_t e = std::uint64_t{1} << i;
    threads = detail::resolve_threads(threads);
    std::vector<std::uint64_t> irr(threads, 0), rootless(threads, 0);
    detail::parallel_chunks(0, size, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        for (std::uint64_t v = lo; v < hi; ++v) {
            const FieldElem c = K->element(v);
            std::vector<FieldElem> q(e + 2, K->zero());
            q[0] = K->one();
            q[1] = c.frobenius(k);
            q[e] = c;
            q[e + 1] = K->one();
            const UniPoly p(*K, std::move(q));
            if (is_irreducible(p)) {
                ++irr[w];
                ++rootless[w];
            } else if (find_roots(p).empty()) {
                ++rootless[w];
            }
        }
    });
    return {k, i, std::accumulate(irr.begin(), irr.end(), std::uint64_t{0}),
            std::accumulate(rootless.begin(), rootless.end(), std::uint64_t{0}), size};
}

}  // namespace apnforge

#endif  // APNFORGE_VERIFY_HPP
