#pragma once

#include <gmpxx.h>

#include <string>

namespace lgr {

/* All scalar arithmetic in this library is exact. Rat is GMP's canonical
 * rational: always in lowest terms, denominator > 0. A residual that prints
 * as "0" therefore certifies literal equality, not closeness. */
using Rat = mpq_class;

/* p/q reduced to lowest terms. The two-argument mpq_class constructor does
 * not canonicalize, so raw Rat(p, q) would silently break the invariant
 * above; q must be positive. */
Rat rat_frac(long p, long q);

/* Strict parser for the wire format "p" or "p/q": an optional leading minus,
 * decimal digits, optionally a slash and an unsigned nonzero denominator.
 * Anything else (whitespace, hex, empty fields, "1/0", "1/-2") throws
 * std::invalid_argument. */
Rat rat_from_string(const std::string& s);

/* Inverse of rat_from_string: "p/q", or "p" when the denominator is 1. */
std::string rat_to_string(const Rat& r);

}  // namespace lgr
