#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "congruent/rational.hpp"

namespace congruent {

// Primes below 65536 by sieve of Eratosthenes; enough trial divisors to
// factor anything below 2^32, and desk-scale inputs stay well under that.
inline const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t bound = 1u << 16;
        std::vector<bool> composite(bound, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i < bound; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < bound; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

inline std::vector<uint32_t> primes_up_to(uint32_t bound) {
    std::vector<bool> composite(size_t(bound) + 1, false);
    std::vector<uint32_t> ps;
    for (uint32_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (uint64_t j = uint64_t(i) * i; j <= bound; j += i) composite[j] = true;
    }
    return ps;
}

struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes ascending
};

// Deterministic trial division. A remainder surviving every prime below 2^16
// is prime whenever it is below 2^32; a larger survivor would need divisors
// past the sieve, which is outside the desk-scale contract, so it is an error
// rather than an open-ended grind.
inline Factorization factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    Int m = n;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.factors.emplace_back(Int(p), e);
        }
    }
    if (m > 1) {
        if (m >= (Int(1) << 32))
            throw std::domain_error("factorize: cofactor " + to_string(m) +
                                    " exceeds the trial-division bound");
        f.factors.emplace_back(m, 1);
    }
    return f;
}

inline int mobius(const Int& n) {
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

inline bool is_square_free(const Int& n) { return mobius(n) != 0; }

struct SquareFreeSplit {
    Int input;
    Int squarefree_part;   // product of primes with odd exponent
    Int square_root_part;  // input == squarefree_part * square_root_part^2
};

inline SquareFreeSplit squarefree_split(const Int& m) {
    if (m < 1) throw std::domain_error("squarefree_split: m must be >= 1");
    SquareFreeSplit s{m, 1, 1};
    for (const auto& [p, e] : factorize(m).factors) {
        if (e % 2) s.squarefree_part *= p;
        s.square_root_part *= int_pow(p, e / 2);
    }
    return s;
}

inline Int squarefree_part(const Int& m) { return squarefree_split(m).squarefree_part; }

inline Int totient(const Int& k) {
    if (k < 1) throw std::domain_error("totient: k must be >= 1");
    Int t = k;
    for (const auto& [p, e] : factorize(k).factors) t = t / p * (p - 1);
    return t;
}

// sigma_k(n) = sum of d^k over divisors d of n.
inline Int divisor_power_sum(unsigned k, const Int& n) {
    if (n < 1) throw std::domain_error("divisor_power_sum: n must be >= 1");
    Int s = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        if (k == 0) {
            s *= e + 1;
        } else {
            // (p^{k(e+1)} - 1) / (p^k - 1)
            Int pk = int_pow(p, k);
            s *= (int_pow(pk, e + 1) - 1) / (pk - 1);
        }
    }
    return s;
}

inline std::vector<Int> divisors(const std::vector<std::pair<Int, unsigned>>& factors) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factors) {
        size_t sz = ds.size();
        Int pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<Int> divisors(const Int& n) { return divisors(factorize(n).factors); }

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    const auto f = factorize(n).factors;
    return f.size() == 1 && f[0].second == 1;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Bernoulli numbers from z/(e^z - 1): sum_{j<=m} C(m+1,j) B_j = 0 for m >= 1.
// This convention has B_1 = -1/2 and B_k = 0 for odd k >= 3. The memo table
// is guarded so concurrent callers stay safe.
inline Rat bernoulli(unsigned k) {
    static std::mutex lock;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> guard(lock);
    for (size_t m = cache.size(); m <= k; ++m) {
        Rat sum(0);
        for (size_t j = 0; j < m; ++j) sum += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-sum / Rat(Int(m) + 1));
    }
    return cache[k];
}

}  // namespace congruent
