#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "congruent/arith.hpp"
#include "congruent/rational.hpp"

namespace congruent {

// A right triangle [q|a,b,c] with exact rational sides and area label q:
// a^2 + b^2 = c^2 and a*b = 2q. Sides may be signed (symmetry orbits);
// a "positive" triangle has all sides > 0.
struct RationalTriangle {
    Rat q, a, b, c;

    bool valid() const { return a * a + b * b == c * c && a * b == 2 * q; }
    bool positive() const { return a > 0 && b > 0 && c > 0; }
};

inline bool operator==(const RationalTriangle& s, const RationalTriangle& t) {
    return s.q == t.q && s.a == t.a && s.b == t.b && s.c == t.c;
}

// Primitive-scaled Pythagorean triple (s(k^2-l^2), 2skl, s(k^2+l^2)),
// k > l > 0, k-l odd, gcd(k,l) = 1.
struct PythTriple {
    long kappa = 0, l = 0, s = 1;
    Int leg1, leg2, hyp, area;
};

inline PythTriple pythagorean(long kappa, long l, long s) {
    if (l <= 0 || kappa <= l) throw std::domain_error("pythagorean: need kappa > l > 0");
    if ((kappa - l) % 2 == 0) throw std::domain_error("pythagorean: kappa - l must be odd");
    if (std::gcd(kappa, l) != 1) throw std::domain_error("pythagorean: kappa, l must be coprime");
    if (s < 1) throw std::domain_error("pythagorean: s must be >= 1");
    PythTriple t;
    t.kappa = kappa;
    t.l = l;
    t.s = s;
    Int k(kappa), ll(l), ss(s);
    t.leg1 = ss * (k * k - ll * ll);
    t.leg2 = 2 * ss * k * ll;
    t.hyp = ss * (k * k + ll * ll);
    t.area = t.leg1 * t.leg2 / 2;
    return t;
}

// All primitive (s=1) triples with area <= bound, ordered by (kappa, l).
// The minimal area for a given kappa is kappa^3 - kappa (at l = 1), which
// bounds the outer loop.
inline std::vector<PythTriple> enumerate_pythagorean(const Int& area_bound) {
    std::vector<PythTriple> out;
    for (long k = 2; Int(k) * k * k - k <= area_bound; ++k)
        for (long l = 1 + (k % 2); l < k; l += 2)
            if (std::gcd(k, l) == 1) {
                PythTriple t = pythagorean(k, l, 1);
                if (t.area <= area_bound) out.push_back(t);
            }
    return out;
}

struct TriangleClass {
    Int n;  // square-free part of the area
    Int m;  // area = m^2 * n
    RationalTriangle triangle;
};

// Reduce a Pythagorean triangle to its strong-congruent class representative
// [n | leg1/m, leg2/m, hyp/m] of exact area n.
inline TriangleClass class_of(const PythTriple& t) {
    SquareFreeSplit s = squarefree_split(t.area);
    TriangleClass c{s.squarefree_part, s.square_root_part, {}};
    Rat m(c.m);
    c.triangle = RationalTriangle{Rat(c.n), Rat(t.leg1) / m, Rat(t.leg2) / m, Rat(t.hyp) / m};
    return c;
}

namespace detail {

// Square-free part of (k-l)(k+l)k*l from the factors of the four small
// parts; never factors the big product itself.
inline Int area_squarefree_part(long k, long l) {
    uint64_t parts[4] = {uint64_t(k - l), uint64_t(k + l), uint64_t(k), uint64_t(l)};
    Int sf = 1;
    for (uint32_t p : small_primes()) {
        uint64_t pp = uint64_t(p) * p;
        if (pp > parts[0] && pp > parts[1] && pp > parts[2] && pp > parts[3]) break;
        unsigned e = 0;
        for (uint64_t& v : parts)
            while (v % p == 0) {
                v /= p;
                ++e;
            }
        if (e % 2) sf *= p;
    }
    // survivors are prime (or 1); pair up equal ones
    std::sort(std::begin(parts), std::end(parts));
    for (int i = 0; i < 4; ++i) {
        if (parts[i] == 1) continue;
        if (i + 1 < 4 && parts[i + 1] == parts[i]) {
            ++i;  // squared pair drops out
        } else {
            sf *= Int(parts[i]);
        }
    }
    return sf;
}

}  // namespace detail

// First criterion scan: search admissible (kappa, l) with kappa <= bound for
// squarefree_part((k^2-l^2)kl) == n. Absence means UNKNOWN, never
// non-congruence -- for non-congruent n the scan can never terminate
// affirmatively at any bound.
inline std::optional<RationalTriangle> witness_search(const Int& n, long kappa_bound) {
    if (!is_square_free(n)) throw std::domain_error("witness_search: n must be square-free");
    for (long k = 2; k <= kappa_bound; ++k)
        for (long l = 1 + (k % 2); l < k; l += 2)
            if (std::gcd(k, l) == 1 && detail::area_squarefree_part(k, l) == n)
                return class_of(pythagorean(k, l, 1)).triangle;
    return std::nullopt;
}

// Second-criterion witness: 0 < r < s < t with t^2 - r^2 = 2n, t^2 + r^2 = 2s^2.
struct RstWitness {
    Rat r, s, t;
    Int n;
};

inline RstWitness rst_from_triangle(const RationalTriangle& tri) {
    if (tri.a == tri.b) throw std::domain_error("rst_from_triangle: degenerate a == b");
    if (!tri.positive() || !tri.valid())
        throw std::domain_error("rst_from_triangle: need a valid positive triangle");
    if (tri.q.get_den() != 1 || tri.q < 1)
        throw std::domain_error("rst_from_triangle: area must be a positive integer");
    Rat r = abs(tri.a - tri.b) / 2;
    Rat t = (tri.a + tri.b) / 2;
    Rat s = tri.c / 2;
    return RstWitness{r, s, t, tri.q.get_num()};
}

inline RationalTriangle triangle_from_rst(const RstWitness& w) {
    return RationalTriangle{Rat(w.n), w.r + w.t, w.t - w.r, 2 * w.s};
}

inline RationalTriangle scale_triangle(const RationalTriangle& t, const Rat& s) {
    if (s == 0) throw std::domain_error("scale_triangle: s must be nonzero");
    if (s < 0) throw std::domain_error("scale_triangle: s must be positive");
    return RationalTriangle{s * s * t.q, s * t.a, s * t.b, s * t.c};
}

}  // namespace congruent
