#include <catch2/catch_amalgamated.hpp>

#include "congruent/modular.hpp"

using namespace congruent;

TEST_CASE("congruence group indexes") {
    REQUIRE(psi(6) == 12);
    REQUIRE(psi(1) == 1);
    REQUIRE(gamma_index(2) == 6);
    REQUIRE(gamma_index(1) == 1);
    REQUIRE(mu_gammaN(5) == 60);
    REQUIRE(mu_gamma1(5) == 12);
    REQUIRE(mu_gamma0(5) == 6);
    REQUIRE(mu_gamma0(2) == 3);  // printed without an N >= 3 qualifier
    REQUIRE_THROWS_AS(mu_gamma1(2), std::domain_error);
    REQUIRE_THROWS_AS(mu_gammaN(2), std::domain_error);
}

TEST_CASE("index coherence") {
    for (long N = 1; N <= 60; ++N) {
        REQUIRE(gamma_index(N) == Int(N) * phi(N) * psi(N));
        if (N >= 3) REQUIRE(gamma_index(N) == 2 * mu_gammaN(N));
    }
}

TEST_CASE("genus of principal modular curves") {
    REQUIRE(genus_principal(1) == 0);
    REQUIRE(genus_principal(2) == 0);
    REQUIRE(genus_principal(5) == 0);
    REQUIRE(genus_principal(7) == 3);
    REQUIRE(genus_principal(11) == 26);
    REQUIRE_THROWS_AS(genus_principal(0), std::domain_error);
}

TEST_CASE("prime-level genus formula agrees") {
    REQUIRE(genus_prime(7) == 3);
    REQUIRE(genus_prime(5) == 0);
    REQUIRE(genus_prime(11) == 26);
    REQUIRE_THROWS_AS(genus_prime(4), std::domain_error);
    REQUIRE_THROWS_AS(genus_prime(3), std::domain_error);
    REQUIRE_THROWS_AS(genus_prime(9), std::domain_error);

    for (uint32_t p : primes_up_to(97))
        if (p >= 5) REQUIRE(genus_prime(p) == genus_principal(p));
}

TEST_CASE("general genus formula") {
    GenusResult r = genus_general({60, 0, 0, 12});
    REQUIRE(r.integral);
    REQUIRE(r.value == 0);

    r = genus_general({168, 0, 0, 24});
    REQUIRE(r.integral);
    REQUIRE(r.value == 3);

    r = genus_general({1, 1, 1, 1});
    REQUIRE(r.integral);
    REQUIRE(r.value == 0);

    // X(11): cusp count supplied as input data (mu/N = 660/11 = 60)
    r = genus_general({660, 0, 0, 60});
    REQUIRE(r.integral);
    REQUIRE(r.value == 26);
    REQUIRE(mu_gammaN(11) == 660);

    // degrees come straight from the index machinery
    REQUIRE(mu_gammaN(5) == 60);
    REQUIRE(mu_gammaN(7) == 168);

    // inconsistent data flags as non-integral
    r = genus_general({2, 0, 0, 1});
    REQUIRE(!r.integral);
    REQUIRE(r.value == Rat(2, 3));

    REQUIRE_THROWS_AS(genus_general({0, 0, 0, 1}), std::domain_error);
    REQUIRE_THROWS_AS(genus_general({2, 3, 0, 1}), std::domain_error);
    REQUIRE_THROWS_AS(genus_general({2, 0, 0, 0}), std::domain_error);
}

TEST_CASE("Riemann-Hurwitz") {
    REQUIRE(riemann_hurwitz_check(0, 0, 1, 0));

    // X(7) over X(1): d = 168, fibers over i, rho and the cusps give
    // b = (d - e2)/2 + 2(d - e3)/3 + (d - e_inf) = 84 + 112 + 144 = 340,
    // the value that solving the formula for b also yields.
    Int b7 = 2 * Int(3) - 2 - (2 * Int(0) - 2) * 168;
    REQUIRE(b7 == 340);
    REQUIRE(riemann_hurwitz_check(3, 0, 168, b7));

    // X(11): d = 660, 60 cusps, b = 330 + 440 + 600 = 1370
    Int b11 = 2 * Int(26) - 2 - (2 * Int(0) - 2) * 660;
    REQUIRE(b11 == 1370);
    REQUIRE(riemann_hurwitz_check(26, 0, 660, b11));

    REQUIRE(!riemann_hurwitz_check(3, 0, 168, 172));
    REQUIRE_THROWS_AS(riemann_hurwitz_check(1, 0, 0, 0), std::domain_error);
}

TEST_CASE("Eisenstein q-expansions") {
    QSeries e4 = eisenstein_qexp(4, 6);
    REQUIRE(e4.coeff(0) == 1);
    REQUIRE(e4.coeff(1) == 240);
    REQUIRE(e4.coeff(2) == 2160);   // 240 * sigma_3(2)
    REQUIRE(e4.coeff(3) == 6720);   // 240 * 28
    REQUIRE(e4.coeff(4) == 17520);  // 240 * 73

    QSeries e6 = eisenstein_qexp(6, 4);
    REQUIRE(e6.coeff(0) == 1);
    REQUIRE(e6.coeff(1) == -504);
    REQUIRE(e6.coeff(2) == -16632);  // -504 * sigma_5(2)

    REQUIRE_THROWS_AS(eisenstein_qexp(5, 4), std::domain_error);
    REQUIRE_THROWS_AS(eisenstein_qexp(2, 4), std::domain_error);
}

namespace {

// Independent polynomial-expansion oracle for tau: build E4, E6 directly
// from sigma sums and convolve with plain loops, no QSeries involved.
std::vector<Rat> tau_oracle(long cutoff) {
    long len = cutoff + 1;
    std::vector<Rat> e4(len, Rat(0)), e6(len, Rat(0));
    e4[0] = 1;
    e6[0] = 1;
    for (long n = 1; n < len; ++n) {
        e4[n] = 240 * Rat(divisor_power_sum(3, n));
        e6[n] = -504 * Rat(divisor_power_sum(5, n));
    }
    auto conv = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r(len, Rat(0));
        for (long i = 0; i < len; ++i)
            for (long j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<Rat> e4cubed = conv(conv(e4, e4), e4);
    std::vector<Rat> e6sq = conv(e6, e6);
    std::vector<Rat> tau(len, Rat(0));
    for (long n = 0; n < len; ++n) tau[n] = (e4cubed[n] - e6sq[n]) / 1728;
    return tau;
}

}  // namespace

TEST_CASE("delta q-expansion carries Ramanujan tau") {
    QSeries d = delta_qexp(10);
    REQUIRE(d.lowest_exponent() == 1);
    REQUIRE(d.coeff(1) == 1);
    REQUIRE(d.coeff(2) == -24);
    REQUIRE(d.coeff(3) == 252);
    REQUIRE(d.coeff(4) == -1472);
    REQUIRE(d.coeff(5) == 4830);

    auto tau = tau_oracle(10);
    for (long n = 1; n <= 10; ++n) REQUIRE(d.coeff(n) == tau[n]);
}

TEST_CASE("1728 delta equals E4^3 - E6^2 through the cutoff") {
    long cutoff = 20;
    QSeries e4 = eisenstein_qexp(4, cutoff);
    QSeries e6 = eisenstein_qexp(6, cutoff);
    QSeries rhs = e4 * e4 * e4 - e6 * e6;
    QSeries d = delta_qexp(cutoff);
    for (long n = 0; n <= cutoff; ++n) REQUIRE(1728 * d.coeff(n) == rhs.coeff(n));
}

TEST_CASE("j q-expansion") {
    QSeries j = j_qexp(3);
    REQUIRE(j.lowest_exponent() == -1);
    REQUIRE(j.coeff(-1) == 1);
    REQUIRE(j.coeff(0) == 744);
    REQUIRE(j.coeff(1) == 196884);
    REQUIRE(j.coeff(2) == 21493760);

    // independent route: j * (E4^3 - E6^2) must equal 1728 E4^3
    long cutoff = 12;
    QSeries jj = j_qexp(cutoff);
    QSeries e4 = eisenstein_qexp(4, cutoff + 2);
    QSeries e6 = eisenstein_qexp(6, cutoff + 2);
    QSeries den = e4 * e4 * e4 - e6 * e6;
    QSeries lhs = jj * den;
    QSeries rhs = (e4 * e4 * e4).scaled(Rat(1728));
    for (long n = 0; n <= lhs.cutoff(); ++n) REQUIRE(lhs.coeff(n) == rhs.coeff(n));
}
