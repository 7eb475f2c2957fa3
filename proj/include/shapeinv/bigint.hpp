#ifndef SHAPEINV_BIGINT_HPP
#define SHAPEINV_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shapeinv {

// Exact counts. Multinomials and colored partition numbers leave 64 bits
// quickly, so every count that is not bounded by n! for a guarded n uses this.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace shapeinv

#endif  // SHAPEINV_BIGINT_HPP
