#ifndef CAMUT_BIMODULE_HPP
#define CAMUT_BIMODULE_HPP

#include "camut/field_algebra.hpp"
#include "camut/ratmat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace camut {

/// Finite dimensional (E,F)-bimodule over commutative number fields, given
/// by the action matrices of each algebra's generator on a Q-basis.
class Bimodule {
 public:
  /// Empty bimodule; useful only as a container placeholder.
  Bimodule() = default;

  /// Validates that f_E(L) = 0 = f_F(R) and that the actions commute.
  static Bimodule make(FieldPtr left, FieldPtr right, RatMat theta_left, RatMat theta_right);

  /// The algebra as a bimodule over (E, E), both actions by multiplication.
  static Bimodule regular(const FieldPtr& alg);
  /// The algebra as an (E, Q)-bimodule: left multiplication, rational scaling.
  static Bimodule left_regular(const FieldPtr& alg, const FieldPtr& rationals);
  /// Direct sum of copies of a bimodule.
  static Bimodule direct_sum(const Bimodule& b, int copies);

  const FieldPtr& left() const { return left_; }
  const FieldPtr& right() const { return right_; }
  int dim() const { return dim_; }  // over Q
  int left_dim() const { return dim_ / left_->degree(); }
  int right_dim() const { return dim_ / right_->degree(); }

  std::vector<Rat> act_left(const FieldAlgebra::Elem& e, const std::vector<Rat>& x) const;
  std::vector<Rat> act_right(const std::vector<Rat>& x, const FieldAlgebra::Elem& e) const;

  /// Action matrix of the left generator power theta^a (a < deg E).
  const RatMat& left_power(int a) const { return lact_[a]; }
  const RatMat& right_power(int b) const { return ract_[b]; }

 private:
  FieldPtr left_, right_;
  int dim_ = 0;
  std::vector<RatMat> lact_, ract_;  // theta powers 0..deg-1
};

/// A one-sided basis of a bimodule over one of its algebras, with the exact
/// coordinate map x = sum_a vecs[a] * c_a (right case) or x = sum c_a *
/// vecs[a] (left case), c_a in the algebra.
struct SidedBasis {
  std::vector<std::vector<Rat>> vecs;
  RatMat coord;  // (count * deg) x dim; stacked algebra coordinates
  int count = 0;
  int deg = 1;

  /// c_a coefficients of x, one algebra element per basis vector.
  std::vector<FieldAlgebra::Elem> coords(const std::vector<Rat>& x) const;
};

SidedBasis right_basis(const Bimodule& m);
SidedBasis left_basis(const Bimodule& m);

/// Symmetrizable dualizing pair {M, M*; eps_E, eps_F} built from the trace
/// forms: eps_E : M (x)_F M* -> E and eps_F : M* (x)_E M -> F, mutually
/// non-degenerate, with t(eps_E(x (x) u)) = t'(eps_F(u (x) x)).
class DualizingPair {
 public:
  const Bimodule& mod() const { return mod_; }
  const Bimodule& dual() const { return dual_; }
  const FieldPtr& E() const { return mod_.left(); }
  const FieldPtr& F() const { return mod_.right(); }

  FieldAlgebra::Elem eval_e(const std::vector<Rat>& x, const std::vector<Rat>& u) const;
  FieldAlgebra::Elem eval_f(const std::vector<Rat>& u, const std::vector<Rat>& x) const;

  /// Form values on basis pairs: eps_E(m_r (x) u_s) and eps_F(u_s (x) m_r).
  const FieldAlgebra::Elem& eps_e_entry(int r, int s) const { return epsE_[r][s]; }
  const FieldAlgebra::Elem& eps_f_entry(int s, int r) const { return epsF_[s][r]; }

  friend DualizingPair make_dualizing_pair(const Bimodule& m);
  friend DualizingPair product_pair(const DualizingPair& p12, const DualizingPair& p23);
  friend void verify_pair(const DualizingPair& p);

 private:
  Bimodule mod_, dual_;
  // Forms on basis pairs: epsE_[r][s] = eps_E(m_r (x) u_s), epsF_[s][r].
  std::vector<std::vector<FieldAlgebra::Elem>> epsE_, epsF_;
};

/// M* = Hom_Q(M, Q) with (a.xi.e)(x) = xi(e x a); the forms are induced by
/// the regular-representation traces. Invariants are re-verified.
DualizingPair make_dualizing_pair(const Bimodule& m);

/// Throws unless both forms are non-degenerate, bilinear over the correct
/// algebras, balanced over the middle one, and symmetrizable via the traces.
void verify_pair(const DualizingPair& p);

struct DualBasisResult {
  std::vector<std::vector<Rat>> basis;  // in M
  std::vector<std::vector<Rat>> dual;   // in M*, Kronecker against basis
};

enum class PairSide { left, right };

/// Kronecker-dual basis: left side solves eps_E(m_k (x) m*_l) = delta_kl,
/// right side solves eps_F(z*_s (x) z_t) = delta_st. A basis of M may be
/// supplied; otherwise the canonical greedy one is used.
DualBasisResult dual_basis(const DualizingPair& p, PairSide side,
                           std::optional<std::vector<std::vector<Rat>>> basis = std::nullopt);

/// Pure-tensor expansion of a central element.
struct CentralElement {
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> terms;
};

enum class CentralSide { e_side, f_side };

/// E-side: sum_t z_t (x) z*_t from a right F-basis; F-side: sum_k m*_k (x)
/// m_k from a left E-basis. Independent of the basis choice as an element of
/// the balanced tensor product.
CentralElement central_element(const DualizingPair& p, CentralSide side,
                               std::optional<std::vector<std::vector<Rat>>> basis = std::nullopt);

/// Canonical coordinates of sum x_t (x) y_t in M (x)_F M* (e_side) or
/// M* (x)_E M (f_side), for exact equality tests.
std::vector<Rat> balanced_coords(const DualizingPair& p, CentralSide side,
                                 const CentralElement& elt);

/// Left adjoint of u : M (x)_F X -> Y along eps_E:
/// ubar(x) = sum_k m*_k (x) u(m_k (x) x), a map X -> M* (x) Y.
/// u is a (dim Y) x (dim M * dim X) matrix on the Q-tensor basis
/// m_r (x) x_b -> column r*dimX+b; the adjoint rows follow u*_s (x) y.
RatMat adjoint_left(const DualizingPair& p, const RatMat& u, int dim_x, int dim_y);

/// Inverse of adjoint_left: u(m (x) x) = sum_s eps_E(m (x) u*_s) . y_s,
/// where the E-action on Y is given by y_act (theta powers).
RatMat unadjoint_left(const DualizingPair& p, const RatMat& v, int dim_x, int dim_y,
                      const std::vector<RatMat>& y_act);

/// Right adjoint of u : V (x)_E M -> W along eps_F:
/// utilde(x) = sum_s u(x (x) z_s) (x) z*_s, a map V -> W (x) M*.
RatMat adjoint_right(const DualizingPair& p, const RatMat& u, int dim_v, int dim_w);
RatMat unadjoint_right(const DualizingPair& p, const RatMat& v, int dim_v, int dim_w,
                       const std::vector<RatMat>& w_act);

/// Product pair {M12 (x)_L M23, M23* (x)_L M12*} with the induced forms
/// eps13((x (x) y) (x) (v (x) u)) = eps12(x . eps23(y (x) v) (x) u).
DualizingPair product_pair(const DualizingPair& p12, const DualizingPair& p23);

}  // namespace camut

#endif
