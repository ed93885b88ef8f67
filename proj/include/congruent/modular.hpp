#pragma once

#include <stdexcept>

#include "congruent/arith.hpp"
#include "congruent/qseries.hpp"
#include "congruent/rational.hpp"

namespace congruent {

// psi(N) = N prod_{p|N} (1 + 1/p) = [Gamma(1) : Gamma_0(N)].
inline Int psi(const Int& N) {
    if (N < 1) throw std::domain_error("psi: N must be >= 1");
    Int v = N;
    for (const auto& [p, e] : factorize(N).factors) v = v / p * (p + 1);
    return v;
}

// phi(N) = [Gamma_0(N) : Gamma_1(N)], the totient.
inline Int phi(const Int& N) { return totient(N); }

// [Gamma(1) : Gamma(N)] = #SL_2(Z/N) = N^3 prod_{p|N} (1 - p^{-2}).
inline Int gamma_index(const Int& N) {
    if (N < 1) throw std::domain_error("gamma_index: N must be >= 1");
    Int v = N * N * N;
    for (const auto& [p, e] : factorize(N).factors) v = v / (p * p) * (p * p - 1);
    return v;
}

// mu quotients the index by {+-1}: mu(Gamma_0(N)) = psi(N) as printed, with
// no N >= 3 qualifier; the half formulas carry one.
inline Int mu_gamma0(const Int& N) { return psi(N); }

inline Int mu_gamma1(const Int& N) {
    if (N < 3) throw std::domain_error("mu_gamma1: formula requires N >= 3");
    return phi(N) * psi(N) / 2;
}

inline Int mu_gammaN(const Int& N) {
    if (N < 3) throw std::domain_error("mu_gammaN: formula requires N >= 3");
    return N * phi(N) * psi(N) / 2;
}

// Genus of X(N): 0 for N <= 2, else 1 + N^2(N-6)/24 prod_{p|N}(1 - p^{-2}),
// computed exactly and asserted integral.
inline Int genus_principal(const Int& N) {
    if (N < 1) throw std::domain_error("genus_principal: N must be >= 1");
    if (N <= 2) return 0;
    Rat g = make_rat(N * N * (N - 6), 24);
    for (const auto& [p, e] : factorize(N).factors) g *= make_rat(p * p - 1, p * p);
    g += 1;
    if (g.get_den() != 1) throw std::logic_error("genus_principal: non-integral genus");
    return g.get_num();
}

// Prime level p >= 5: genus of X(p) = (p+2)(p-3)(p-5)/24.
inline Int genus_prime(const Int& p) {
    if (p < 5 || !is_prime(p)) throw std::domain_error("genus_prime: need a prime p >= 5");
    Int v = (p + 2) * (p - 3) * (p - 5);
    if (v % 24 != 0) throw std::logic_error("genus_prime: non-integral genus");
    return v / 24;
}

// g(X_Gamma) = 1 + d/12 - e2/4 - e3/3 - e_inf/2. Supplied elliptic-point and
// cusp counts are data, not derived; a non-integer value flags inconsistent
// inputs.
struct GenusInput {
    Int d;  // covering degree
    Int e2, e3, e_inf;
};

struct GenusResult {
    Rat value;
    bool integral = false;
};

inline GenusResult genus_general(const GenusInput& in) {
    if (in.d < 1) throw std::domain_error("genus_general: degree must be >= 1");
    if (in.e2 > in.d || in.e3 > in.d) throw std::domain_error("genus_general: e2, e3 cannot exceed d");
    if (in.e_inf < 1) throw std::domain_error("genus_general: need at least one cusp");
    Rat g = Rat(1) + make_rat(in.d, 12) - make_rat(in.e2, 4) - make_rat(in.e3, 3) -
            make_rat(in.e_inf, 2);
    return GenusResult{g, g.get_den() == 1};
}

// Riemann-Hurwitz: 2g_cover - 2 = (2g_base - 2) degree + b.
inline bool riemann_hurwitz_check(const Int& g_cover, const Int& g_base, const Int& degree,
                                  const Int& total_ramification) {
    if (g_cover < 0 || g_base < 0 || degree < 1)
        throw std::domain_error("riemann_hurwitz_check: bad genus or degree");
    return 2 * g_cover - 2 == (2 * g_base - 2) * degree + total_ramification;
}

// E_k(q) = 1 + c_k sum_{n>=1} sigma_{k-1}(n) q^n with c_k = -2k/B_k.
inline QSeries eisenstein_qexp(unsigned k, long cutoff) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("eisenstein_qexp: need even k >= 4");
    if (cutoff < 1) throw std::domain_error("eisenstein_qexp: cutoff must be >= 1");
    Rat ck = Rat(-2) * Rat(k) / bernoulli(k);
    QSeries s(0, cutoff);
    s.set(0, Rat(1));
    for (long n = 1; n <= cutoff; ++n) s.set(n, ck * Rat(divisor_power_sum(k - 1, Int(n))));
    return s;
}

// Normalized discriminant form (E_4^3 - E_6^2)/1728: the coefficient of q^n
// is the Ramanujan tau(n); the (2pi)^12 of the classical normalization is a
// symbolic unit, never a float.
inline QSeries delta_qexp(long cutoff) {
    if (cutoff < 1) throw std::domain_error("delta_qexp: cutoff must be >= 1");
    QSeries e4 = eisenstein_qexp(4, cutoff);
    QSeries e6 = eisenstein_qexp(6, cutoff);
    QSeries num = e4 * e4 * e4 - e6 * e6;
    QSeries d(1, cutoff);
    for (long n = 1; n <= cutoff; ++n) d.set(n, num.coeff(n) / 1728);
    return d;
}

// j(q) = 1728 E_4^3 / (E_4^3 - E_6^2), a Laurent series with leading term
// q^{-1}.
inline QSeries j_qexp(long cutoff) {
    if (cutoff < -1) throw std::domain_error("j_qexp: cutoff must be >= -1");
    long work = cutoff + 2;
    QSeries e4 = eisenstein_qexp(4, work);
    QSeries e6 = eisenstein_qexp(6, work);
    QSeries den = e4 * e4 * e4 - e6 * e6;  // 1728 q + O(q^2)
    QSeries den_shifted(0, work - 1);      // divide out the q
    for (long n = 0; n <= work - 1; ++n) den_shifted.set(n, den.coeff(n + 1));
    QSeries quotient = (e4 * e4 * e4).scaled(Rat(1728)) * den_shifted.inverse();
    QSeries j(-1, cutoff);
    for (long n = -1; n <= cutoff; ++n) j.set(n, quotient.coeff(n + 1));
    return j;
}

}  // namespace congruent
