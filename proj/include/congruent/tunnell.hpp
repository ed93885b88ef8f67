#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "congruent/arith.hpp"
#include "congruent/triangles.hpp"

namespace congruent {

// #{(x,y,z) in Z^3 : a x^2 + b y^2 + c z^2 = n}, all sign/zero combinations.
// x and y are enumerated over their exact ranges, z is solved by exact square
// root; the naive triple-loop lives in the tests as an independent oracle.
inline long ternary_form_count(long a, long b, long c, const Int& n) {
    if (!n.fits_slong_p() || n > (Int(1) << 60))
        throw std::domain_error("ternary_form_count: n too large");
    const long nn = n.get_si();
    long count = 0;
    for (long x = 0; a * x * x <= nn; ++x)
        for (long y = 0; a * x * x + b * y * y <= nn; ++y) {
            long rem = nn - a * x * x - b * y * y;
            long combos = long(x > 0 ? 2 : 1) * long(y > 0 ? 2 : 1);
            if (rem == 0) {
                count += combos;
            } else if (rem % c == 0) {
                long zz = rem / c;
                long z = long(std::sqrt(double(zz)));
                while (z * z > zz) --z;
                while ((z + 1) * (z + 1) <= zz) ++z;
                if (z * z == zz) count += 2 * combos;  // z and -z
            }
        }
    return count;
}

// Tunnell's lattice counts at n. The B form is 2x^2 + y^2 + 8z^2: the
// printed 2x^2 + 2y^2 + 8z^2 is even for every (x,y,z) and cannot reproduce
// B_1 = 2 or B_3 = 4.
struct TunnellCounts {
    Int n;
    long A = 0, B = 0, C = 0, D = 0;
    bool even = false;
};

inline TunnellCounts tunnell_counts(const Int& n) {
    if (n < 1) throw std::domain_error("tunnell_counts: n must be >= 1");
    if (!is_square_free(n)) throw std::domain_error("tunnell_counts: n must be square-free");
    TunnellCounts t;
    t.n = n;
    t.even = mpz_even_p(n.get_mpz_t()) != 0;
    t.A = ternary_form_count(2, 1, 32, n);
    t.B = ternary_form_count(2, 1, 8, n);
    t.C = ternary_form_count(8, 2, 64, n);
    t.D = ternary_form_count(8, 2, 16, n);
    return t;
}

// L_bullet(n) = 2A - B for odd n, 2C - D for even n; its vanishing is
// Tunnell's necessary condition for congruence.
inline long l_bullet_of(const TunnellCounts& t) {
    return t.even ? 2 * t.C - t.D : 2 * t.A - t.B;
}

inline long l_bullet(const Int& n) { return l_bullet_of(tunnell_counts(n)); }

// Three-valued outcome: L_bullet != 0 rules congruence out unconditionally;
// L_bullet == 0 plus a found triangle certifies it; a vanishing L_bullet with
// an exhausted search bound stays unresolved (the converse is BSD-conditional).
enum class Congruence { NotCongruent, CongruentWitnessed, TunnellPositiveUnverified };

struct CongruenceStatus {
    Congruence kind = Congruence::TunnellPositiveUnverified;
    std::optional<RationalTriangle> witness;
};

inline CongruenceStatus classify(const Int& n, long witness_bound) {
    if (l_bullet(n) != 0) return {Congruence::NotCongruent, std::nullopt};
    if (auto t = witness_search(n, witness_bound)) return {Congruence::CongruentWitnessed, t};
    return {Congruence::TunnellPositiveUnverified, std::nullopt};
}

struct KernelRow {
    TunnellCounts counts;
    long l_bullet = 0;
    CongruenceStatus status;
};

// One row per square-free n <= limit, ascending. Rows for distinct n are
// independent, so the scan may fan out over workers; each worker owns a
// fixed stride of slots and the merged order stays ascending regardless of
// the worker count.
inline std::vector<KernelRow> kernel_scan(const Int& limit, long witness_bound,
                                          unsigned workers = 1) {
    if (limit < 5) throw std::domain_error("kernel_scan: limit must be >= 5");
    std::vector<Int> ns;
    for (Int n = 1; n <= limit; ++n)
        if (is_square_free(n)) ns.push_back(n);

    std::vector<KernelRow> rows(ns.size());
    auto fill = [&](size_t first, size_t stride) {
        for (size_t i = first; i < ns.size(); i += stride) {
            KernelRow row;
            row.counts = tunnell_counts(ns[i]);
            row.l_bullet = l_bullet_of(row.counts);
            row.status = row.l_bullet != 0
                             ? CongruenceStatus{Congruence::NotCongruent, std::nullopt}
                             : classify(ns[i], witness_bound);
            rows[i] = std::move(row);
        }
    };
    if (workers <= 1) {
        fill(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
        for (auto& t : pool) t.join();
    }
    return rows;
}

}  // namespace congruent
