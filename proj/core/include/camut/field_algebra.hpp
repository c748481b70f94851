#ifndef CAMUT_FIELD_ALGEBRA_HPP
#define CAMUT_FIELD_ALGEBRA_HPP

#include "camut/numeric.hpp"
#include "camut/ratmat.hpp"

#include <memory>
#include <string>
#include <vector>

namespace camut {

enum class Irreducibility { irreducible, reducible, undecided };

/// Irreducibility over Q of a monic rational polynomial. Decided up to
/// degree 4 (rational-root test plus quadratic-factor search on the
/// integerized polynomial); degree >= 5 gets the root test only and returns
/// `undecided` when no factor is found.
Irreducibility irreducible_over_q(const std::vector<Rat>& monic_coeffs);

/// Commutative number field k = Q[x]/(f) with the regular-representation
/// trace. Elements are rational coordinate vectors in the power basis
/// 1, x, .., x^(deg-1). The trace form's Gram matrix is verified
/// non-degenerate at construction.
class FieldAlgebra {
 public:
  using Elem = std::vector<Rat>;

  /// minpoly as ascending coefficients, constant term first, monic.
  /// Degree <= 4 polynomials are rejected unless irreducible; for higher
  /// degree a root test runs and the caller certifies irreducibility.
  static std::shared_ptr<const FieldAlgebra> make(std::vector<Rat> minpoly);

  int degree() const { return deg_; }
  const std::vector<Rat>& minpoly() const { return minpoly_; }
  bool is_rationals() const { return deg_ == 1; }

  Elem zero() const { return Elem(deg_); }
  Elem one() const;
  Elem generator() const;  // the class of x
  Elem from_rational(const Rat& r) const;
  Elem power_basis(int a) const;  // x^a for 0 <= a < deg

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Rat& c, const Elem& a) const;
  Elem inv(const Elem& a) const;  // throws on zero (or zero divisors)
  bool is_zero(const Elem& a) const;

  Rat trace(const Elem& a) const;
  /// Gram matrix of the trace form in the power basis: G_ab = t(x^a x^b).
  const RatMat& gram() const { return gram_; }
  const RatMat& gram_inverse() const { return gram_inv_; }
  /// Matrix of multiplication by a on the power basis.
  RatMat mult_matrix(const Elem& a) const;

  bool same_algebra(const FieldAlgebra& other) const { return minpoly_ == other.minpoly_; }

  std::string to_string(const Elem& a, const std::string& var = "x") const;
  std::string describe() const;

 private:
  FieldAlgebra() = default;

  std::vector<Rat> minpoly_;
  int deg_ = 0;
  std::vector<Elem> xpow_;  // x^a reduced, a = 0 .. 2 deg - 2
  std::vector<Rat> trace_pow_;
  RatMat gram_, gram_inv_;
};

using FieldPtr = std::shared_ptr<const FieldAlgebra>;

}  // namespace camut

#endif
