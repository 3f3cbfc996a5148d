// Exact rational numbers and their canonical text form.
//
// Rat is an arbitrary-precision rational; the canonical text form is "p/q"
// in lowest terms with q > 0, or just "p" for integers. parse_rat accepts
// both forms; format_rat always emits the canonical one.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tropgerm {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws InputError on
// malformed text (empty, stray characters, zero denominator).
Rat parse_rat(const std::string& text);

// Canonical text: lowest terms, "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& value);

// Floor of a rational as an arbitrary-precision integer.
Int rat_floor(const Rat& value);

// Ceiling of a rational as an arbitrary-precision integer.
Int rat_ceil(const Rat& value);

}  // namespace tropgerm
