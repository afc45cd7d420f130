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

// Integer helpers: 64-bit factorization (for multiplicative group orders),
// divisor enumeration, and a minimal unsigned big integer used as an
// exponent for polynomial powering.

#ifndef APNFORGE_DETAIL_NUMTHEORY_HPP
#define APNFORGE_DETAIL_NUMTHEORY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

namespace apnforge {

/// Unsigned integer of arbitrary size, little-endian 64-bit limbs.
/// Only what exponentiation needs: construction, bit access, powers of two.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
        if (v != 0) limbs_.push_back(v);
    }

    static BigUint pow2(std::size_t k) {
        BigUint r;
        r.limbs_.assign(k / 64 + 1, 0);
        r.limbs_[k / 64] = std::uint64_t{1} << (k % 64);
        return r;
    }

    /// 2^k - 1
    static BigUint mersenne(std::size_t k) {
        BigUint r;
        if (k == 0) return r;
        r.limbs_.assign((k + 63) / 64, ~std::uint64_t{0});
        if (k % 64 != 0) r.limbs_.back() = (std::uint64_t{1} << (k % 64)) - 1;
        return r;
    }

    bool is_zero() const noexcept { return limbs_.empty(); }

    std::size_t bit_length() const noexcept {
        if (limbs_.empty()) return 0;
        return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
    }

    bool bit(std::size_t i) const noexcept {
        const std::size_t w = i / 64;
        return w < limbs_.size() && ((limbs_[w] >> (i % 64)) & 1U) != 0;
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;

private:
    std::vector<std::uint64_t> limbs_;
};

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e != 0) {
        if ((e & 1U) != 0) r = mulmod64(r, a, n);
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n must be odd and composite.
inline std::uint64_t pollard_brent(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod64(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t kBatch = 128;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = f(y);
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += kBatch;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime64(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Prime factors with multiplicity, ascending.
inline std::vector<std::uint64_t> factor64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
    auto f = factor64(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

/// Prime factors of 2^m - 1 (distinct), memoized per m. m in [1, 64].
inline const std::vector<std::uint64_t>& mersenne_primes_of(int m) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        const std::uint64_t n = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        it = cache.emplace(m, distinct_primes(n)).first;
    }
    return it->second;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(std::uint64_t n) {
    const auto f = factor64(n);
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i] == f[i - 1]) return 0;
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

}  // namespace detail
}  // namespace apnforge

#endif  // APNFORGE_DETAIL_NUMTHEORY_HPP
