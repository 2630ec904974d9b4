#ifndef MAXEXP_RATIONAL_HPP
#define MAXEXP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "maxexp/errors.hpp"

namespace maxexp {

// Exact rational coordinate. All geometry in this library is computed over
// arbitrary-precision rationals; there is no floating-point fast path.
// mpq_class keeps values canonical (reduced, positive denominator), so
// equality is structural.
using Rat = mpq_class;

// Parses "p/q", an integer, or a decimal string ("-0.125") to an exact
// rational. Decimals convert exactly (no rounding). Throws InputError on
// anything else.
Rat parse_rat(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
// parse_rat(rat_to_string(x)) == x for all x.
std::string rat_to_string(const Rat& value);

// Rational from a possibly non-reduced numerator/denominator pair. The
// two-argument mpq_class constructor does NOT canonicalize; always build
// rationals from integer pairs through this helper.
inline Rat make_rat(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Largest integer <= value.
long floor_rat(const Rat& value);

// Smallest integer >= value.
long ceil_rat(const Rat& value);

inline double rat_to_double(const Rat& value) { return value.get_d(); }

}  // namespace maxexp

#endif
