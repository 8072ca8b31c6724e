#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace skein {

// Arbitrary-precision rational, canonical (gcd-reduced, positive denominator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r);

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace skein
