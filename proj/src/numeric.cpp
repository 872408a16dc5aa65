#include "lefcert/numeric.hpp"

#include "lefcert/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace lefcert {

std::string to_fraction_string(const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

bool is_zero_vector(const IntVec& v) {
  for (const Int& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool is_primitive_vector(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) {
      return true;
    }
  }
  return false;  // zero vector or common factor > 1
}

std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw Error(Err::Overflow, "value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace lefcert
