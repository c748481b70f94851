#ifndef CAMUT_LAURENT_HPP
#define CAMUT_LAURENT_HPP

#include "camut/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace camut {

/// Exact multivariate Laurent polynomial over the integers. Terms are kept
/// in a map ordered lexicographically on exponent vectors, with no zero
/// coefficients, so the representation is canonical: equal values compare
/// and hash equal regardless of how they were computed.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, Int value);
  static LaurentPoly variable(int nvars, int index);  // 0-based index
  static LaurentPoly monomial(int nvars, Exponents exps, Int coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& q) const;
  LaurentPoly operator-(const LaurentPoly& q) const;
  LaurentPoly operator*(const LaurentPoly& q) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& q) const = default;

  /// p^e for e >= 0; also negative e when p is a single monomial.
  LaurentPoly pow(long e) const;

  /// Exact quotient in the Laurent ring: returns r with r*q == *this.
  /// Throws laurent_violation("not divisible") when no such r exists.
  LaurentPoly div_exact(const LaurentPoly& q) const;

  /// Total order compatible with the canonical form (used to sort clusters).
  static int compare(const LaurentPoly& a, const LaurentPoly& b);
  bool operator<(const LaurentPoly& q) const { return compare(*this, q) < 0; }

  uint64_t hash64() const;

  /// Canonical text, e.g. "3*x1^2*x2^-1 + 1". Variables are named
  /// <prefix>1..<prefix>n.
  std::string to_string(const std::string& prefix = "x") const;

  /// Parses the textual form. Accepts any alphabetic variable prefix with a
  /// 1-based index, '^' exponents (possibly negative) and '*' products.
  static LaurentPoly parse(const std::string& text, int nvars);

 private:
  void add_term(Exponents e, Int c);

  int nvars_;
  std::map<Exponents, Int> terms_;
};

}  // namespace camut

#endif
