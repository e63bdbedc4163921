#pragma once
// Exact arithmetic scalars: arbitrary-precision integers and rationals.
// All algebra in this library runs over these; no floating point anywhere.
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hopf/errors.hpp"

namespace hopf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Int& x) { return x.is_zero(); }

inline Rat rat(long num, long den = 1) {
    require(den != 0, "rational with zero denominator");
    return Rat(num, den);
}

Int binomial(long n, long k);
Int factorial(long n);
Int multinomial(const std::vector<long>& parts);

// Accepts "3", "-3", "3/4", "-3/4" with optional surrounding spaces.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

} // namespace hopf
