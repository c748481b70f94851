#include "camut/numeric.hpp"

#include "camut/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace camut {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int l = boost::multiprecision::lcm(a, b);
  return l < 0 ? Int(-l) : l;
}

Rat parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw parse_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw parse_error("bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rat& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

std::string to_string(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace camut
