#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacring {

// Exact arithmetic everywhere: Rational is always canonical
// (reduced, positive denominator), Integer is arbitrary precision.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q"; no whitespace, no floats.
inline Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    Rational q;
    try {
        q = Rational(std::string(text), 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in: " + std::string(text));
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();  // "p" or "p/q", canonical
}

inline long floor_long(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p())
        throw std::overflow_error("floor out of range");
    return f.get_si();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace jacring
