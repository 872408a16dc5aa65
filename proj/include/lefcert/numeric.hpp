#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lefcert {

// Exact arithmetic everywhere: counts and Euler characteristics fit in
// int64, but homology matrices and inequality slacks do not in general.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string to_fraction_string(const Rational& r);

bool is_zero_vector(const IntVec& v);

/// True iff v is nonzero and the gcd of its entries is 1.
bool is_primitive_vector(const IntVec& v);

/// Checked narrowing for report/serialization boundaries.
std::int64_t to_int64(const Int& v);

}  // namespace lefcert
