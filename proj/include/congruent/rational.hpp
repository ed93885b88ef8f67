#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace congruent {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form required everywhere downstream; equality is structural.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& n) { return n.get_str(); }

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int int_from_string(const std::string& s) {
    Int n;
    if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return n;
}

// Parses "num" or "num/den" (den > 0 after canonicalization; den == 0 rejected).
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    Int num = int_from_string(s.substr(0, slash));
    Int den = 1;
    if (slash != std::string::npos) den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// mpq_class(num, den) does not canonicalize on its own; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    return Rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Exact square root of a rational, when one exists.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (!is_perfect_square(r.get_num()) || !is_perfect_square(r.get_den()))
        return std::nullopt;
    return Rat(isqrt(r.get_num()), isqrt(r.get_den()));
}

inline bool is_rational_square(const Rat& r) { return rat_sqrt(r).has_value(); }

}  // namespace congruent
