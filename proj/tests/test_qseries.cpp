#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "congruent/qseries.hpp"

using namespace congruent;

namespace {

QSeries random_series(std::mt19937& rng, long low, long cutoff) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    QSeries s(low, cutoff);
    for (long k = low; k <= cutoff; ++k) s.set(k, make_rat(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("coefficient access and bounds") {
    QSeries s(-1, 3);
    s.set(-1, 1);
    s.set(2, make_rat(7, 2));
    REQUIRE(s.coeff(-1) == 1);
    REQUIRE(s.coeff(2) == Rat(7, 2));
    REQUIRE(s.coeff(5) == 0);   // beyond cutoff reads as zero
    REQUIRE(s.coeff(-3) == 0);  // below lowest exponent too
    REQUIRE_THROWS_AS(s.set(4, Rat(1)), std::out_of_range);
    REQUIRE_THROWS_AS(QSeries(3, 1), std::domain_error);
}

TEST_CASE("ring laws on random truncated series") {
    std::mt19937 rng(20);
    for (int i = 0; i < 40; ++i) {
        QSeries a = random_series(rng, 0, 20);
        QSeries b = random_series(rng, 0, 20);
        QSeries c = random_series(rng, 0, 20);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));  // truncation independent of association
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a) * b == QSeries(0, 20) * b);
    }
}

TEST_CASE("Laurent multiplication tracks exponent ranges") {
    std::mt19937 rng(21);
    QSeries a = random_series(rng, -1, 5);
    QSeries b = random_series(rng, 2, 9);
    QSeries p = a * b;
    REQUIRE(p.lowest_exponent() == 1);
    // validity limited by what both operands certify
    REQUIRE(p.cutoff() == std::min(a.cutoff() + b.lowest_exponent(),
                                   b.cutoff() + a.lowest_exponent()));
}

TEST_CASE("inverse and division") {
    std::mt19937 rng(22);
    for (int i = 0; i < 20; ++i) {
        QSeries u = random_series(rng, 0, 15);
        if (u.coeff(0) == 0) u.set(0, Rat(1));
        QSeries inv = u.inverse();
        QSeries prod = u * inv;
        for (long k = 0; k <= prod.cutoff(); ++k)
            REQUIRE(prod.coeff(k) == (k == 0 ? Rat(1) : Rat(0)));
    }

    // Laurent unit: leading exponent negates
    QSeries q(1, 6);
    q.set(1, make_rat(2, 1));
    q.set(2, Rat(3));
    QSeries qi = q.inverse();
    REQUIRE(qi.lowest_exponent() == -1);
    REQUIRE(qi.coeff(-1) == Rat(1, 2));

    QSeries zero(0, 4);
    REQUIRE_THROWS_AS(zero.inverse(), std::domain_error);
}

TEST_CASE("division undoes multiplication") {
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        QSeries a = random_series(rng, 0, 12);
        QSeries b = random_series(rng, 0, 12);
        if (b.coeff(0) == 0) b.set(0, make_rat(3, 2));
        QSeries q = (a * b) / b;
        for (long k = 0; k <= q.cutoff(); ++k) REQUIRE(q.coeff(k) == a.coeff(k));
    }
}
