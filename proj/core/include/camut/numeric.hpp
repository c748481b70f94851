#ifndef CAMUT_NUMERIC_HPP
#define CAMUT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace camut {

// All arithmetic in the engine is exact. Entries of exchange matrices and
// Laurent coefficients grow exponentially under deep mutation, so everything
// is arbitrary precision from the start.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Int& a) { return a.sign(); }
inline int sgn(const Rat& a) { return a.sign(); }

/// sign(sign(a) + sign(b)) with sign(0) = 0.
inline int common_sign(const Int& a, const Int& b) {
  int s = sgn(a) + sgn(b);
  return (s > 0) - (s < 0);
}

Int gcd(Int a, Int b);
Int lcm(const Int& a, const Int& b);

Rat parse_rational(const std::string& text);
std::string to_string(const Rat& q);

std::string to_string(const std::vector<Int>& v);

}  // namespace camut

#endif
