#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace weylift {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) {
    return r.get_str();  // "p" or "p/q", canonicalized
}

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q".
inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

// Exact rational square root, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational root(sn, sd);
    root.canonicalize();
    return root;
}

}  // namespace weylift
