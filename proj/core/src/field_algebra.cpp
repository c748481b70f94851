#include "camut/field_algebra.hpp"

#include "camut/errors.hpp"

#include <algorithm>
#include <sstream>

namespace camut {

namespace {

// Monic rational f -> monic integer g with f irreducible iff g irreducible:
// g(y) = N^d f(y/N) where N is the lcm of coefficient denominators.
std::vector<Int> integerize(const std::vector<Rat>& f) {
  int d = int(f.size()) - 1;
  Int n = 1;
  for (const Rat& c : f) n = lcm(n, Int(denominator(c)));
  std::vector<Int> g(f.size());
  Int scale = 1;  // N^(d-i)
  for (int i = d; i >= 0; --i) {
    Rat c = f[i] * Rat(scale);
    if (denominator(c) != 1) throw error("internal: integerization failed");
    g[i] = Int(numerator(c));
    scale *= n;
  }
  return g;
}

std::vector<Int> divisors_with_sign(const Int& v, long long cap_iterations = 2000000) {
  Int a = v < 0 ? Int(-v) : v;
  std::vector<Int> divs;
  Int i = 1;
  long long steps = 0;
  while (i * i <= a) {
    if (++steps > cap_iterations)
      throw resource_error("constant term too large for factor search");
    if (a % i == 0) {
      divs.push_back(i);
      divs.push_back(-i);
      Int other = a / i;
      if (other != i) {
        divs.push_back(other);
        divs.push_back(-other);
      }
    }
    ++i;
  }
  return divs;
}

Int eval_int(const std::vector<Int>& g, const Int& x) {
  Int acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_integer_root(const std::vector<Int>& g) {
  if (g[0] == 0) return true;  // y divides g
  for (const Int& r : divisors_with_sign(g[0]))
    if (eval_int(g, r) == 0) return true;
  return false;
}

bool is_perfect_square(const Int& v, Int& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

// Monic integer quartic: reducible iff it has an integer root or splits
// into two monic integer quadratics.
bool quartic_has_quadratic_factor(const std::vector<Int>& g) {
  const Int &g0 = g[0], &g1 = g[1], &g2 = g[2], &g3 = g[3];
  if (g0 == 0) return true;
  for (const Int& b : divisors_with_sign(g0)) {
    Int d2 = g0 / b;
    // a + c = g3, ac = g2 - b - d2, a d2 + b c = g1.
    Int s = g3;
    Int prod = g2 - b - d2;
    Int disc = s * s - 4 * prod;
    Int root;
    if (!is_perfect_square(disc, root)) continue;
    for (int sign : {1, -1}) {
      Int twice_a = s + sign * root;
      if (twice_a % 2 != 0) continue;
      Int a = twice_a / 2;
      Int c = s - a;
      if (a * d2 + b * c == g1) return true;
    }
  }
  return false;
}

}  // namespace

Irreducibility irreducible_over_q(const std::vector<Rat>& monic_coeffs) {
  int d = int(monic_coeffs.size()) - 1;
  if (d < 1) return Irreducibility::reducible;
  if (monic_coeffs[d] != 1) throw precondition_error("polynomial must be monic");
  if (d == 1) return Irreducibility::irreducible;
  std::vector<Int> g = integerize(monic_coeffs);
  if (has_integer_root(g)) return Irreducibility::reducible;
  if (d <= 3) return Irreducibility::irreducible;
  if (d == 4)
    return quartic_has_quadratic_factor(g) ? Irreducibility::reducible
                                           : Irreducibility::irreducible;
  return Irreducibility::undecided;
}

std::shared_ptr<const FieldAlgebra> FieldAlgebra::make(std::vector<Rat> minpoly) {
  int d = int(minpoly.size()) - 1;
  if (d < 1) throw precondition_error("minimal polynomial must have degree >= 1");
  if (minpoly[d] != 1) throw precondition_error("minimal polynomial must be monic");
  switch (irreducible_over_q(minpoly)) {
    case Irreducibility::reducible:
      throw precondition_error("minimal polynomial is reducible over Q");
    case Irreducibility::irreducible:
    case Irreducibility::undecided:
      break;  // degree >= 5 without a detected factor: caller certifies
  }

  auto alg = std::shared_ptr<FieldAlgebra>(new FieldAlgebra());
  alg->minpoly_ = std::move(minpoly);
  alg->deg_ = d;

  // x^a reduced modulo f for a up to 2d-2, enough for products of elements.
  alg->xpow_.resize(std::max(2 * d - 1, 1));
  alg->xpow_[0] = alg->zero();
  alg->xpow_[0][0] = 1;
  for (int a = 1; a < int(alg->xpow_.size()); ++a) {
    const Elem& prev = alg->xpow_[a - 1];
    Elem cur(d);
    // multiply by x: shift, then reduce the overflow via x^d = -sum c_i x^i.
    Rat top = prev[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) cur[i] -= top * alg->minpoly_[i];
    alg->xpow_[a] = std::move(cur);
  }

  // Regular-representation traces of the power basis.
  alg->trace_pow_.resize(alg->xpow_.size());
  for (int a = 0; a < int(alg->xpow_.size()); ++a) {
    RatMat mm = alg->mult_matrix(alg->xpow_[a]);
    Rat t = 0;
    for (int i = 0; i < d; ++i) t += mm.at(i, i);
    alg->trace_pow_[a] = t;
  }

  alg->gram_ = RatMat(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) alg->gram_.at(a, b) = alg->trace_pow_[a + b];
  auto inv = invert(alg->gram_);
  if (!inv)
    throw precondition_error("trace form is degenerate (polynomial not squarefree?)");
  alg->gram_inv_ = std::move(*inv);
  return alg;
}

FieldAlgebra::Elem FieldAlgebra::one() const { return from_rational(1); }

FieldAlgebra::Elem FieldAlgebra::generator() const {
  Elem e(deg_);
  if (deg_ == 1)
    e[0] = -minpoly_[0];  // x = root of linear polynomial
  else
    e[1] = 1;
  return e;
}

FieldAlgebra::Elem FieldAlgebra::from_rational(const Rat& r) const {
  Elem e(deg_);
  e[0] = r;
  return e;
}

FieldAlgebra::Elem FieldAlgebra::power_basis(int a) const {
  if (a < 0 || a >= deg_) throw precondition_error("power basis index out of range");
  Elem e(deg_);
  e[a] = 1;
  return e;
}

FieldAlgebra::Elem FieldAlgebra::add(const Elem& a, const Elem& b) const {
  Elem r(deg_);
  for (int i = 0; i < deg_; ++i) r[i] = a[i] + b[i];
  return r;
}

FieldAlgebra::Elem FieldAlgebra::sub(const Elem& a, const Elem& b) const {
  Elem r(deg_);
  for (int i = 0; i < deg_; ++i) r[i] = a[i] - b[i];
  return r;
}

FieldAlgebra::Elem FieldAlgebra::neg(const Elem& a) const {
  Elem r(deg_);
  for (int i = 0; i < deg_; ++i) r[i] = -a[i];
  return r;
}

FieldAlgebra::Elem FieldAlgebra::mul(const Elem& a, const Elem& b) const {
  std::vector<Rat> conv(2 * deg_ - 1);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  Elem r(deg_);
  for (int k = 0; k < int(conv.size()); ++k) {
    if (conv[k] == 0) continue;
    for (int i = 0; i < deg_; ++i) r[i] += conv[k] * xpow_[k][i];
  }
  return r;
}

FieldAlgebra::Elem FieldAlgebra::scale(const Rat& c, const Elem& a) const {
  Elem r(deg_);
  for (int i = 0; i < deg_; ++i) r[i] = c * a[i];
  return r;
}

FieldAlgebra::Elem FieldAlgebra::inv(const Elem& a) const {
  auto x = solve(mult_matrix(a), one());
  if (!x) throw precondition_error("element is not invertible");
  return *x;
}

bool FieldAlgebra::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

Rat FieldAlgebra::trace(const Elem& a) const {
  Rat t = 0;
  for (int i = 0; i < deg_; ++i)
    if (a[i] != 0) t += a[i] * trace_pow_[i];
  return t;
}

RatMat FieldAlgebra::mult_matrix(const Elem& a) const {
  RatMat m(deg_, deg_);
  for (int b = 0; b < deg_; ++b) {
    // column b = a * x^b
    std::vector<Rat> conv(2 * deg_ - 1);
    for (int i = 0; i < deg_; ++i)
      if (a[i] != 0) conv[i + b] += a[i];
    Elem col(deg_);
    for (int k = 0; k < int(conv.size()); ++k) {
      if (conv[k] == 0) continue;
      for (int i = 0; i < deg_; ++i) col[i] += conv[k] * xpow_[k][i];
    }
    for (int i = 0; i < deg_; ++i) m.at(i, b) = col[i];
  }
  return m;
}

std::string FieldAlgebra::to_string(const Elem& a, const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    if (!first) out << " + ";
    out << camut::to_string(a[i]);
    if (i >= 1) out << "*" << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string FieldAlgebra::describe() const {
  std::ostringstream out;
  out << "Q[x]/(";
  bool first = true;
  for (int i = deg_; i >= 0; --i) {
    if (minpoly_[i] == 0) continue;
    if (!first) out << " + ";
    out << camut::to_string(minpoly_[i]);
    if (i >= 1) out << "*x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace camut
