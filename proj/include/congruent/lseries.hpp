#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "congruent/arith.hpp"
#include "congruent/rational.hpp"

namespace congruent {

// (Z/kappa)^x presented as a product of cyclic groups: odd prime powers are
// cyclic; 2^e splits as <-1> x <5> for e >= 3.
struct UnitGroup {
    long modulus = 1;
    std::vector<std::pair<long, long>> generators;  // (residue mod kappa, order)
};

namespace detail {

inline long pow_mod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = long(__int128(r) * base % mod);
        base = long(__int128(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

inline long order_mod(long a, long mod, long group_order) {
    long ord = group_order;
    for (const auto& [p, e] : factorize(Int(group_order)).factors) {
        long pl = p.get_si();
        for (unsigned i = 0; i < e; ++i) {
            if (pow_mod(a, ord / pl, mod) == 1)
                ord /= pl;
            else
                break;
        }
    }
    return ord;
}

inline long primitive_root_mod(long pk) {
    long phi = totient(Int(pk)).get_si();
    for (long g = 2; g < pk; ++g) {
        if (std::gcd(g, pk) != 1) continue;
        if (order_mod(g, pk, phi) == phi) return g;
    }
    throw std::logic_error("primitive_root_mod: none found");
}

// CRT lift: residue r modulo m, 1 modulo kappa/m.
inline long crt_lift(long r, long m, long kappa) {
    long rest = kappa / m;
    if (rest == 1) return r % kappa;
    for (long x = 1; x < kappa; ++x)
        if (x % m == r % m && x % rest == 1 % rest) return x;
    throw std::logic_error("crt_lift: no solution");
}

}  // namespace detail

inline UnitGroup unit_group(long kappa) {
    if (kappa < 1) throw std::domain_error("unit_group: modulus must be >= 1");
    UnitGroup g;
    g.modulus = kappa;
    for (const auto& [pz, e] : factorize(Int(kappa)).factors) {
        long p = pz.get_si();
        long pk = int_pow(Int(p), e).get_si();
        if (p == 2) {
            if (e == 1) continue;  // trivial
            if (e == 2) {
                g.generators.emplace_back(detail::crt_lift(3, 4, kappa), 2);
            } else {
                g.generators.emplace_back(detail::crt_lift(pk - 1, pk, kappa), 2);
                g.generators.emplace_back(detail::crt_lift(5, pk, kappa), pk / 4);
            }
        } else {
            long root = detail::primitive_root_mod(pk);
            long phi = pk / p * (p - 1);
            g.generators.emplace_back(detail::crt_lift(root, pk, kappa), phi);
        }
    }
    return g;
}

// A modulus-kappa Dirichlet character, stored as the images of the unit-group
// generators; images are exact fractions of a full turn, realized as complex
// doubles only at evaluation time. chi(n) = 0 exactly when gcd(n,kappa) > 1.
class DirichletCharacter {
public:
    DirichletCharacter(const UnitGroup& g, std::vector<Rat> generator_turns)
        : modulus_(g.modulus), generator_turns_(std::move(generator_turns)) {
        // tabulate exact turns residue-by-residue from generator powers
        std::vector<long> idx(g.generators.size(), 0);
        for (;;) {
            long r = 1 % modulus_;
            Rat turn(0);
            for (size_t i = 0; i < idx.size(); ++i) {
                r = long(__int128(r) * detail::pow_mod(g.generators[i].first, idx[i], modulus_) %
                         modulus_);
                turn += Rat(idx[i]) * generator_turns_[i];
            }
            turn -= Int(mpz_class(turn.get_num() / turn.get_den()));  // reduce mod 1
            if (turn < 0) turn += 1;
            turns_[r] = turn;
            size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < g.generators[i].second) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }

    long modulus() const { return modulus_; }
    const std::vector<Rat>& generator_images() const { return generator_turns_; }

    bool is_principal() const {
        for (const auto& [r, t] : turns_)
            if (t != 0) return false;
        return true;
    }

    // Exact turn fraction in [0,1), or nullopt where chi vanishes.
    std::optional<Rat> turn(const Int& n) const {
        Int r = n % modulus_;
        if (r < 0) r += modulus_;
        auto it = turns_.find(r.get_si());
        if (it == turns_.end()) return std::nullopt;
        return it->second;
    }

    std::complex<double> operator()(const Int& n) const {
        auto t = turn(n);
        if (!t) return {0.0, 0.0};
        double a = 2.0 * std::numbers::pi * to_double(*t);
        return {std::cos(a), std::sin(a)};
    }

    // value tables decide identity
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.turns_ == b.turns_;
    }

private:
    long modulus_;
    std::vector<Rat> generator_turns_;
    std::map<long, Rat> turns_;  // residue -> exact turn, units only
};

// All totient(kappa) characters of modulus kappa, principal character first.
inline std::vector<DirichletCharacter> characters(long kappa) {
    if (kappa < 1) throw std::domain_error("characters: modulus must be >= 1");
    UnitGroup g = unit_group(kappa);
    std::vector<DirichletCharacter> chars;
    std::vector<long> idx(g.generators.size(), 0);
    for (;;) {
        std::vector<Rat> turns;
        for (size_t i = 0; i < idx.size(); ++i)
            turns.push_back(make_rat(idx[i], g.generators[i].second));
        chars.emplace_back(g, std::move(turns));
        size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < g.generators[i].second) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return chars;
}

// Sum over a full period: 0 for non-principal characters, totient(kappa) for
// the principal one.
inline std::complex<double> orthogonality_sum(const DirichletCharacter& chi) {
    std::complex<double> s{0, 0};
    for (long a = 0; a < chi.modulus(); ++a) s += chi(Int(a));
    return s;
}

inline double zeta_partial(double s, long terms) {
    if (s <= 1) throw std::domain_error("zeta_partial: need s > 1");
    double sum = 0;
    for (long n = terms; n >= 1; --n) sum += std::pow(double(n), -s);  // small terms first
    return sum;
}

inline double zeta_euler(double s, long prime_bound) {
    if (s <= 1) throw std::domain_error("zeta_euler: need s > 1");
    double prod = 1;
    for (uint32_t p : primes_up_to(uint32_t(std::max<long>(prime_bound, 2))))
        if (long(p) <= prime_bound) prod /= 1.0 - std::pow(double(p), -s);
    return prod;
}

inline std::complex<double> l_chi(double s, const DirichletCharacter& chi, long terms) {
    if (s <= 1) throw std::domain_error("l_chi: need s > 1");
    std::complex<double> sum{0, 0};
    for (long n = terms; n >= 1; --n) sum += chi(Int(n)) * std::pow(double(n), -s);
    return sum;
}

// Companion truncated Euler product over primes <= prime_bound.
inline std::complex<double> l_chi_euler(double s, const DirichletCharacter& chi,
                                        long prime_bound) {
    if (s <= 1) throw std::domain_error("l_chi_euler: need s > 1");
    std::complex<double> prod{1, 0};
    for (uint32_t p : primes_up_to(uint32_t(std::max<long>(prime_bound, 2))))
        if (long(p) <= prime_bound) prod /= 1.0 - chi(Int(p)) * std::pow(double(p), -s);
    return prod;
}

// Point count of E[n]: y^2 = x^3 - n^2 x over F_p (affine points plus
// infinity) and the trace a_p = p + 1 - #E(F_p) at good primes p (p not
// dividing 2n). Bad primes keep a_p = 0 and contribute local factor 1.
struct LocalFactorData {
    long p = 0;
    Int n;
    long point_count = 0;
    long a_p = 0;
    bool good = false;
};

inline LocalFactorData count_points_mod_p(const Int& n, long p) {
    if (p < 2 || !is_prime(Int(p))) throw std::domain_error("count_points_mod_p: p must be prime");
    LocalFactorData d;
    d.p = p;
    d.n = n;
    d.good = (2 * n) % p != 0;
    std::vector<long> sq_count(p, 0);
    for (long y = 0; y < p; ++y) ++sq_count[long(__int128(y) * y % p)];
    long nr = Int(n % p).get_si();
    long n2 = long(__int128(nr) * nr % p);
    long affine = 0;
    for (long x = 0; x < p; ++x) {
        long v = long(((__int128(x) * x % p) * x % p - __int128(n2) * x % p + __int128(p) * p) % p);
        affine += sq_count[v];
    }
    d.point_count = affine + 1;
    if (d.good) d.a_p = p + 1 - d.point_count;
    return d;
}

// Truncated L(E[n], s) = prod over good p <= bound of
// (1 - a_p p^{-s} + p^{1-2s})^{-1}; the Euler product converges for
// s > 3/2, anything at or below that is flagged heuristic.
struct LSeriesValue {
    double value = 1;
    bool heuristic = false;
};

inline LSeriesValue l_curve_truncated(const Int& n, double s, long prime_bound) {
    LSeriesValue v;
    v.heuristic = s <= 1.5;
    for (uint32_t p : primes_up_to(uint32_t(std::max<long>(prime_bound, 2)))) {
        if (long(p) > prime_bound) break;
        LocalFactorData d = count_points_mod_p(n, p);
        if (!d.good) continue;
        double ps = std::pow(double(p), -s);
        v.value /= 1.0 - d.a_p * ps + std::pow(double(p), 1.0 - 2.0 * s);
    }
    return v;
}

// Truncated Hasse-Weil function zeta(s) zeta(s-1) / L(E[n], s).
inline double z_hasse_weil(const Int& n, double s, long terms, long prime_bound) {
    if (s <= 2) throw std::domain_error("z_hasse_weil: need s > 2");
    return zeta_partial(s, terms) * zeta_partial(s - 1, terms) /
           l_curve_truncated(n, s, prime_bound).value;
}

}  // namespace congruent
