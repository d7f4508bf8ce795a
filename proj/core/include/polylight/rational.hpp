#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polylight {

// All coordinates and derived quantities are arbitrary-precision rationals.
// Every value is kept canonical (reduced, positive denominator) so that
// operator== is structural equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Parses "p", "-p", or "p/q". Throws on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rat& r);

// Decimal rendering with a fixed number of fractional digits, truncated
// toward zero. Deterministic (pure integer arithmetic, no floating point).
std::string to_decimal_string(const Rat& r, int digits);

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace polylight
