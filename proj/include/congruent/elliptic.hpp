#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "congruent/arith.hpp"
#include "congruent/rational.hpp"
#include "congruent/triangles.hpp"

namespace congruent {

// The curve E[q]: y^2 = x^3 - q^2 x for a positive rational label q. The
// discriminant is a nonzero multiple of q^6, so the curve is never singular.
struct CurveE {
    Rat q;

    explicit CurveE(Rat label) : q(std::move(label)) {
        if (q <= 0) throw std::domain_error("CurveE: label must be positive");
    }
};

// Affine point or the point at infinity on E[q]: y^2 = x^3 - q^2 x.
// Infinity is the group identity.
struct CurvePoint {
    bool infinity = true;
    Rat x, y;

    static CurvePoint inf() { return CurvePoint{}; }
    static CurvePoint affine(Rat x, Rat y) { return CurvePoint{false, std::move(x), std::move(y)}; }
};

inline bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
}

inline bool operator<(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity != q.infinity) return p.infinity;  // infinity sorts first
    if (p.infinity) return false;
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

inline bool on_curve(const Rat& q, const CurvePoint& p) {
    if (p.infinity) return true;
    return p.y * p.y == p.x * p.x * p.x - q * q * p.x;
}

namespace detail {

inline void require_on_curve(const Rat& q, const CurvePoint& p, const char* who) {
    if (!on_curve(q, p)) throw std::domain_error(std::string(who) + ": point not on E[q]");
}

// (x, y) = (q(a+c)/b, 2q^2(a+c)/b^2) for any signed solution of
// a^2+b^2=c^2, ab=2q; fuels both the bijection and the Table-2 orbit.
inline CurvePoint point_from_sides(const Rat& q, const Rat& a, const Rat& b, const Rat& c) {
    if (b == 0) throw std::domain_error("triangle-to-point map: b must be nonzero");
    Rat x = q * (a + c) / b;
    Rat y = 2 * q * q * (a + c) / (b * b);
    return CurvePoint::affine(x, y);
}

}  // namespace detail

inline CurvePoint point_from_triangle(const RationalTriangle& t) {
    if (!t.valid()) throw std::domain_error("point_from_triangle: invalid triangle");
    if (!t.positive()) throw std::domain_error("point_from_triangle: triangle must be positive");
    return detail::point_from_sides(t.q, t.a, t.b, t.c);
}

// a = (x^2-q^2)/y, b = 2qx/y, c = (x^2+q^2)/y. Torsion points (y = 0) carry
// no triangle.
inline RationalTriangle triangle_from_point(const Rat& q, const CurvePoint& p) {
    if (p.infinity || p.y == 0)
        throw std::domain_error("triangle_from_point: need an affine point with y != 0");
    detail::require_on_curve(q, p, "triangle_from_point");
    Rat a = (p.x * p.x - q * q) / p.y;
    Rat b = 2 * q * p.x / p.y;
    Rat c = (p.x * p.x + q * q) / p.y;
    return RationalTriangle{q, a, b, c};
}

// The eight rational points generated by the signed/swapped triples
// (a,b,c), (-a,-b,-c), (a,b,-c), (-a,-b,c), (b,a,-c), (-b,-a,c), (b,a,c),
// (-b,-a,-c), in that row order.
inline std::vector<CurvePoint> orbit8(const Rat& q, const RationalTriangle& t) {
    if (q != t.q) throw std::domain_error("orbit8: curve label does not match the triangle");
    if (!t.valid() || !t.positive()) throw std::domain_error("orbit8: need a valid positive triangle");
    const Rat &a = t.a, &b = t.b, &c = t.c;
    const std::vector<std::array<Rat, 3>> rows = {
        {a, b, c},   {-a, -b, -c}, {a, b, -c}, {-a, -b, c},
        {b, a, -c},  {-b, -a, c},  {b, a, c},  {-b, -a, -c},
    };
    std::vector<CurvePoint> pts;
    pts.reserve(8);
    for (const auto& r : rows) pts.push_back(detail::point_from_sides(q, r[0], r[1], r[2]));
    return pts;
}

inline CurvePoint negate(const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y);
}

// Chord-tangent addition on E[q], total in all cases.
inline CurvePoint add(const Rat& q, const CurvePoint& p1, const CurvePoint& p2) {
    detail::require_on_curve(q, p1, "add");
    detail::require_on_curve(q, p2, "add");
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    if (p1.x == p2.x) {
        if (p1.y != p2.y || p1.y == 0) return CurvePoint::inf();  // vertical chord / 2-torsion
        // tangent: lambda = (3x^2 - q^2) / (2y)
        Rat lambda = (3 * p1.x * p1.x - q * q) / (2 * p1.y);
        Rat x3 = lambda * lambda - 2 * p1.x;
        Rat y3 = lambda * (p1.x - x3) - p1.y;
        return CurvePoint::affine(x3, y3);
    }
    Rat lambda = (p2.y - p1.y) / (p2.x - p1.x);
    Rat x3 = lambda * lambda - p1.x - p2.x;
    Rat y3 = lambda * (p1.x - x3) - p1.y;
    return CurvePoint::affine(x3, y3);
}

namespace detail {

inline bool has_finite_order(const Rat& q, const CurvePoint& p) {
    // Mazur: rational torsion has order at most 12.
    CurvePoint acc = p;
    for (int k = 2; k <= 12; ++k) {
        acc = add(q, acc, p);
        if (acc.infinity) return true;
    }
    return false;
}

// Integer solutions of x^3 - n^2 x = target on a range where the cubic is
// monotone, by exact bisection.
inline std::optional<Int> cubic_root_on(const Int& n, const Int& target, Int lo, Int hi,
                                        bool increasing) {
    // explicit Int return: a deduced gmp expression template would dangle
    auto f = [&](const Int& x) -> Int { return x * x * x - n * n * x; };
    while (lo <= hi) {
        // floor division keeps the bisection well-behaved on negative ranges
        Int mid;
        mpz_fdiv_q_ui(mid.get_mpz_t(), Int(lo + hi).get_mpz_t(), 2);
        Int v = f(mid);
        if (v == target) return mid;
        if ((v < target) == increasing)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

}  // namespace detail

// Nagell-Lutz enumeration of the torsion of E[n], n a positive integer.
// Candidates: integral roots of x^3 - n^2 x (y = 0), then integral y with
// y^2 | 4n^6 (equivalently y | 2n^3) paired with integral roots x of
// x(x^2 - n^2) = y^2, found by exact bisection on the three monotone pieces;
// survivors must lie on the curve and have finite order. The outcome is
// always {inf, (-n,0), (0,0), (n,0)}.
inline std::vector<CurvePoint> torsion_points(const Int& n) {
    if (n < 1) throw std::domain_error("torsion_points: n must be >= 1");
    Rat q(n);
    std::vector<CurvePoint> pts{CurvePoint::inf()};
    auto consider = [&](const CurvePoint& p) {
        if (!on_curve(q, p)) return;
        if (!p.infinity && p.y != 0 && !detail::has_finite_order(q, p)) return;
        for (const auto& seen : pts)
            if (seen == p) return;
        pts.push_back(p);
    };
    // y = 0: x = 0 (zero constant term) and x = +-sqrt(n^2).
    consider(CurvePoint::affine(0, 0));
    Int r = isqrt(n * n);
    consider(CurvePoint::affine(Rat(r), 0));
    consider(CurvePoint::affine(Rat(-r), 0));
    // y != 0: enumerate y | 2n^3 from the factors of n, never factoring 2n^3
    // itself.
    std::vector<std::pair<Int, unsigned>> fac = factorize(n).factors;
    bool has2 = !fac.empty() && fac.front().first == 2;
    for (auto& [p, e] : fac) e *= 3;
    if (has2)
        fac.front().second += 1;
    else
        fac.insert(fac.begin(), {2, 1});
    std::vector<Int> ys = divisors(fac);
    // the cubic increases on [n, 2n^2], and on (-n, 0) splits at -n/sqrt(3)
    // into an increasing then a decreasing piece
    Int split = isqrt(n * n / 3);
    for (const Int& y : ys) {
        Int y2 = y * y;
        std::optional<Int> roots[3] = {
            detail::cubic_root_on(n, y2, n + 1, 2 * n * n, true),
            detail::cubic_root_on(n, y2, -n, -(split + 1), true),
            detail::cubic_root_on(n, y2, -split, 0, false),
        };
        for (const auto& x : roots)
            if (x) {
                consider(CurvePoint::affine(Rat(*x), Rat(y)));
                consider(CurvePoint::affine(Rat(*x), Rat(-y)));
            }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// The b/c quantities, discriminant and j-invariant of a general Weierstrass
// quintuple (a1, a2, a3, a4, a6).
struct WeierstrassInvariants {
    Rat b2, b4, b6, b8, c4, c6, disc, j;
};

inline WeierstrassInvariants weierstrass_invariants(const Rat& a1, const Rat& a2, const Rat& a3,
                                                    const Rat& a4, const Rat& a6) {
    WeierstrassInvariants w;
    w.b2 = a1 * a1 + 4 * a2;
    w.b4 = a1 * a3 + 2 * a4;
    w.b6 = a3 * a3 + 4 * a6;
    w.b8 = a1 * a1 * a6 - a1 * a3 * a4 + a2 * a3 * a3 + 4 * a2 * a6 - a4 * a4;
    w.c4 = w.b2 * w.b2 - 24 * w.b4;
    w.c6 = -w.b2 * w.b2 * w.b2 + 36 * w.b2 * w.b4 - 216 * w.b6;
    w.disc = -w.b2 * w.b2 * w.b8 + 9 * w.b2 * w.b4 * w.b6 - 8 * w.b4 * w.b4 * w.b4 - 27 * w.b6 * w.b6;
    if (w.disc == 0) throw std::domain_error("weierstrass_invariants: singular curve (disc = 0)");
    w.j = w.c4 * w.c4 * w.c4 / w.disc;
    return w;
}

inline WeierstrassInvariants curve_invariants(const Rat& q) {
    return weierstrass_invariants(0, 0, 0, -q * q, 0);
}

inline WeierstrassInvariants curve_invariants(const CurveE& e) { return curve_invariants(e.q); }

inline bool on_curve(const CurveE& e, const CurvePoint& p) { return on_curve(e.q, p); }

// The two connected components of E[q] in the plane: the bounded oval over
// -q <= x <= 0 and the unbounded branch over x >= q. Infinity joins the
// branch under compactification.
enum class ComponentTag { Oval, Branch };

inline ComponentTag component(const Rat& q, const CurvePoint& p) {
    detail::require_on_curve(q, p, "component");
    if (p.infinity) return ComponentTag::Branch;
    return p.x <= 0 ? ComponentTag::Oval : ComponentTag::Branch;
}

// Two points bord exactly when they lie on the same component; the class
// group has exactly the two classes Oval / Branch.
inline bool bordant(const Rat& q, const CurvePoint& p1, const CurvePoint& p2) {
    return component(q, p1) == component(q, p2);
}

// Image of P under the deformation flow from E[n] to E[n_target] at time
// lambda: n_lambda = n + lambda(n_target - n) and
// (x, y) -> ((n_lambda/n) x, (n_lambda/n)^{3/2} y). The image is exact
// precisely when n_lambda/n is a rational square; otherwise it is a floating
// approximation verified against the target curve to 1e-12 relative.
struct FlowImage {
    Rat n_lambda;
    double x = 0, y = 0;
    bool exact = false;
    std::optional<CurvePoint> exact_point;
    double residual = 0;
};

inline FlowImage flow_map(const Int& n, const Int& n_target, const Rat& lambda,
                          const CurvePoint& p) {
    if (lambda < 0 || lambda > 1) throw std::domain_error("flow_map: lambda must lie in [0,1]");
    if (n < 1 || n_target < 1) throw std::domain_error("flow_map: curve labels must be positive");
    detail::require_on_curve(Rat(n), p, "flow_map");
    FlowImage img;
    img.n_lambda = Rat(n) + lambda * Rat(n_target - n);
    if (p.infinity) {
        img.exact = true;
        img.exact_point = CurvePoint::inf();
        return img;
    }
    Rat ratio = img.n_lambda / Rat(n);
    if (auto root = rat_sqrt(ratio)) {
        Rat xi = ratio * p.x;
        Rat yi = ratio * (*root) * p.y;  // ratio^{3/2}
        img.exact = true;
        img.exact_point = CurvePoint::affine(xi, yi);
        if (!on_curve(img.n_lambda, *img.exact_point))
            throw std::logic_error("flow_map: exact image missed the target curve");
        img.x = to_double(xi);
        img.y = to_double(yi);
        return img;
    }
    double r = to_double(ratio);
    img.x = r * to_double(p.x);
    img.y = std::pow(r, 1.5) * to_double(p.y);
    double nl = to_double(img.n_lambda);
    double lhs = img.y * img.y;
    double rhs = img.x * img.x * img.x - nl * nl * img.x;
    double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    img.residual = std::fabs(lhs - rhs) / scale;
    if (img.residual > 1e-12) throw std::logic_error("flow_map: numeric image off target curve");
    return img;
}

// (x, y) -> (s^2 x, s^3 y), landing exactly on E[s^2 q].
inline CurvePoint conform_image(const Rat& q, const Rat& s, const CurvePoint& p) {
    if (s == 0) throw std::domain_error("conform_image: s must be nonzero");
    detail::require_on_curve(q, p, "conform_image");
    if (p.infinity) return p;
    return CurvePoint::affine(s * s * p.x, s * s * s * p.y);
}

// n'/n is the square of a rational iff the square-free parts agree.
inline bool is_square_scaling(const Int& n, const Int& n_prime) {
    if (n < 1 || n_prime < 1) throw std::domain_error("is_square_scaling: inputs must be >= 1");
    return squarefree_part(n) == squarefree_part(n_prime);
}

// The multiples 2*seed, 3*seed, ..., (count+1)*seed. A rational seed with
// y != 0 is non-torsion, so these are pairwise distinct rational points.
inline std::vector<CurvePoint> generate_points(const Rat& q, const CurvePoint& seed, int count) {
    if (seed.infinity || seed.y == 0)
        throw std::domain_error("generate_points: seed must be affine with y != 0");
    detail::require_on_curve(q, seed, "generate_points");
    if (count < 1) throw std::domain_error("generate_points: count must be >= 1");
    std::vector<CurvePoint> out;
    out.reserve(count);
    CurvePoint acc = add(q, seed, seed);
    for (int i = 0; i < count; ++i) {
        out.push_back(acc);
        acc = add(q, acc, seed);
    }
    return out;
}

}  // namespace congruent
