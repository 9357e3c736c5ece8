#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gambier {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// r^e with integer (possibly negative) exponent. Throws on 0^negative.
Rat rat_pow(const Rat& r, int e);

// Nearest rational to x by continued fractions, stopping once
// |x - p/q| <= tol * max(1, |x|). Exact for small dyadics and table entries.
Rat rationalize(double x, double tol = 1e-12);

std::string rat_to_string(const Rat& r);

}  // namespace gambier
