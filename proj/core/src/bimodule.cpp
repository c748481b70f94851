#include "camut/bimodule.hpp"

#include "camut/errors.hpp"

#include <algorithm>

namespace camut {

namespace {

// f(A) for monic rational f, by Horner.
RatMat eval_poly_at(const std::vector<Rat>& f, const RatMat& a) {
  size_t n = a.rows();
  RatMat acc(n, n);
  for (size_t i = 0; i < n; ++i) acc.at(i, i) = f.back();
  for (int k = int(f.size()) - 2; k >= 0; --k) {
    acc = acc * a;
    for (size_t i = 0; i < n; ++i) acc.at(i, i) += f[k];
  }
  return acc;
}

RatMat scaled_identity(size_t n, const Rat& c) {
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

}  // namespace

Bimodule Bimodule::make(FieldPtr left, FieldPtr right, RatMat theta_left, RatMat theta_right) {
  Bimodule b;
  if (!left || !right) throw precondition_error("bimodule algebras must be non-null");
  size_t n = theta_left.rows();
  if (n == 0 || theta_left.cols() != n || theta_right.rows() != n || theta_right.cols() != n)
    throw precondition_error("action matrices must be square of the bimodule dimension");
  if (!eval_poly_at(left->minpoly(), theta_left).is_zero())
    throw precondition_error("left action does not satisfy the minimal polynomial");
  if (!eval_poly_at(right->minpoly(), theta_right).is_zero())
    throw precondition_error("right action does not satisfy the minimal polynomial");
  if (!(theta_left * theta_right == theta_right * theta_left))
    throw precondition_error("left and right actions do not commute");

  b.left_ = std::move(left);
  b.right_ = std::move(right);
  b.dim_ = int(n);
  b.lact_.resize(b.left_->degree());
  b.lact_[0] = RatMat::identity(n);
  for (int a = 1; a < b.left_->degree(); ++a) b.lact_[a] = b.lact_[a - 1] * theta_left;
  b.ract_.resize(b.right_->degree());
  b.ract_[0] = RatMat::identity(n);
  for (int a = 1; a < b.right_->degree(); ++a) b.ract_[a] = b.ract_[a - 1] * theta_right;

  // Module over a field, hence free; the degrees must divide.
  if (b.dim_ % b.left_->degree() != 0 || b.dim_ % b.right_->degree() != 0)
    throw precondition_error("bimodule dimension not divisible by an algebra degree");
  return b;
}

Bimodule Bimodule::regular(const FieldPtr& alg) {
  RatMat gen = alg->mult_matrix(alg->generator());
  return make(alg, alg, gen, gen);
}

Bimodule Bimodule::left_regular(const FieldPtr& alg, const FieldPtr& rationals) {
  if (rationals->degree() != 1)
    throw precondition_error("right algebra of a left-regular bimodule must have degree 1");
  RatMat genl = alg->mult_matrix(alg->generator());
  // Degree-1 generator is the rational root of its minimal polynomial.
  Rat root = -rationals->minpoly()[0];
  return make(alg, rationals, genl, scaled_identity(alg->degree(), root));
}

Bimodule Bimodule::direct_sum(const Bimodule& b, int copies) {
  if (copies < 1) throw precondition_error("direct sum needs at least one copy");
  size_t n = size_t(b.dim_);
  auto block = [&](const RatMat& m) {
    RatMat big(n * copies, n * copies);
    for (int c = 0; c < copies; ++c)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) big.at(c * n + i, c * n + j) = m.at(i, j);
    return big;
  };
  RatMat genl = b.left_->degree() > 1 ? b.lact_[1] : scaled_identity(n, -b.left_->minpoly()[0]);
  RatMat genr = b.right_->degree() > 1 ? b.ract_[1] : scaled_identity(n, -b.right_->minpoly()[0]);
  return make(b.left_, b.right_, block(genl), block(genr));
}

std::vector<Rat> Bimodule::act_left(const FieldAlgebra::Elem& e, const std::vector<Rat>& x) const {
  std::vector<Rat> r(dim_);
  for (int a = 0; a < left_->degree(); ++a) {
    if (e[a] == 0) continue;
    std::vector<Rat> part = lact_[a].mul(x);
    for (int i = 0; i < dim_; ++i) r[i] += e[a] * part[i];
  }
  return r;
}

std::vector<Rat> Bimodule::act_right(const std::vector<Rat>& x, const FieldAlgebra::Elem& e) const {
  std::vector<Rat> r(dim_);
  for (int a = 0; a < right_->degree(); ++a) {
    if (e[a] == 0) continue;
    std::vector<Rat> part = ract_[a].mul(x);
    for (int i = 0; i < dim_; ++i) r[i] += e[a] * part[i];
  }
  return r;
}

namespace {

SidedBasis sided_basis(const Bimodule& m, bool right_side) {
  const FieldPtr& alg = right_side ? m.right() : m.left();
  int deg = alg->degree();
  int count = m.dim() / deg;
  Echelon span(m.dim());
  std::vector<std::vector<Rat>> chosen;
  for (int i = 0; i < m.dim() && int(chosen.size()) < count; ++i) {
    std::vector<Rat> v(m.dim());
    v[i] = 1;
    if (span.contains(v)) continue;
    chosen.push_back(v);
    for (int a = 0; a < deg; ++a)
      span.add(right_side ? m.right_power(a).mul(v) : m.left_power(a).mul(v));
  }
  if (int(chosen.size()) != count || span.rank() != size_t(m.dim()))
    throw error("internal: one-sided basis extraction failed");

  RatMat a(m.dim(), m.dim());
  for (int c = 0; c < count; ++c)
    for (int b = 0; b < deg; ++b) {
      std::vector<Rat> col =
          right_side ? m.right_power(b).mul(chosen[c]) : m.left_power(b).mul(chosen[c]);
      for (int i = 0; i < m.dim(); ++i) a.at(i, c * deg + b) = col[i];
    }
  auto inv = invert(a);
  if (!inv) throw error("internal: one-sided coordinate matrix singular");

  SidedBasis sb;
  sb.vecs = std::move(chosen);
  sb.coord = std::move(*inv);
  sb.count = count;
  sb.deg = deg;
  return sb;
}

}  // namespace

std::vector<FieldAlgebra::Elem> SidedBasis::coords(const std::vector<Rat>& x) const {
  std::vector<Rat> y = coord.mul(x);
  std::vector<FieldAlgebra::Elem> cs(count, FieldAlgebra::Elem(deg));
  for (int c = 0; c < count; ++c)
    for (int b = 0; b < deg; ++b) cs[c][b] = y[size_t(c) * deg + b];
  return cs;
}

SidedBasis right_basis(const Bimodule& m) { return sided_basis(m, true); }
SidedBasis left_basis(const Bimodule& m) { return sided_basis(m, false); }

FieldAlgebra::Elem DualizingPair::eval_e(const std::vector<Rat>& x,
                                         const std::vector<Rat>& u) const {
  FieldAlgebra::Elem acc = E()->zero();
  for (int r = 0; r < mod_.dim(); ++r) {
    if (x[r] == 0) continue;
    for (int s = 0; s < dual_.dim(); ++s) {
      if (u[s] == 0) continue;
      Rat c = x[r] * u[s];
      const FieldAlgebra::Elem& e = epsE_[r][s];
      for (size_t a = 0; a < acc.size(); ++a) acc[a] += c * e[a];
    }
  }
  return acc;
}

FieldAlgebra::Elem DualizingPair::eval_f(const std::vector<Rat>& u,
                                         const std::vector<Rat>& x) const {
  FieldAlgebra::Elem acc = F()->zero();
  for (int s = 0; s < dual_.dim(); ++s) {
    if (u[s] == 0) continue;
    for (int r = 0; r < mod_.dim(); ++r) {
      if (x[r] == 0) continue;
      Rat c = u[s] * x[r];
      const FieldAlgebra::Elem& e = epsF_[s][r];
      for (size_t a = 0; a < acc.size(); ++a) acc[a] += c * e[a];
    }
  }
  return acc;
}

DualizingPair make_dualizing_pair(const Bimodule& m) {
  const FieldPtr& e_alg = m.left();
  const FieldPtr& f_alg = m.right();
  size_t n = size_t(m.dim());

  // M* = Hom_Q(M, Q) with (a.xi.e)(x) = xi(e x a): transposed actions.
  RatMat genl = f_alg->degree() > 1 ? m.right_power(1) : scaled_identity(n, -f_alg->minpoly()[0]);
  RatMat genr = e_alg->degree() > 1 ? m.left_power(1) : scaled_identity(n, -e_alg->minpoly()[0]);
  Bimodule dual = Bimodule::make(f_alg, e_alg, genl.transpose(), genr.transpose());

  DualizingPair p;
  p.mod_ = m;
  p.dual_ = std::move(dual);

  // eps_E(x (x) u) is the unique element of E with t(a eps) = u(a x) for all
  // a; on basis pairs the right side reads off entries of the power actions.
  int de = e_alg->degree(), df = f_alg->degree();
  p.epsE_.assign(n, std::vector<FieldAlgebra::Elem>(n));
  p.epsF_.assign(n, std::vector<FieldAlgebra::Elem>(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t s = 0; s < n; ++s) {
      std::vector<Rat> v(de);
      for (int a = 0; a < de; ++a) v[a] = m.left_power(a).at(s, r);
      p.epsE_[r][s] = e_alg->gram_inverse().mul(v);
      std::vector<Rat> w(df);
      for (int b = 0; b < df; ++b) w[b] = m.right_power(b).at(s, r);
      p.epsF_[s][r] = f_alg->gram_inverse().mul(w);
    }
  }
  verify_pair(p);
  return p;
}

void verify_pair(const DualizingPair& p) {
  const Bimodule& m = p.mod();
  const Bimodule& d = p.dual();
  const FieldAlgebra& e_alg = *p.E();
  const FieldAlgebra& f_alg = *p.F();
  if (m.dim() != d.dim()) throw precondition_error("pair dimensions disagree");
  size_t n = size_t(m.dim());
  int de = e_alg.degree(), df = f_alg.degree();

  // Non-degeneracy of both forms in both arguments, as rational ranks.
  auto full_rank = [n](RatMat mt) { return rank(std::move(mt)) == n; };
  RatMat ne1(n, n * de), ne2(n, n * de), nf1(n, n * df), nf2(n, n * df);
  for (size_t r = 0; r < n; ++r)
    for (size_t s = 0; s < n; ++s) {
      for (int a = 0; a < de; ++a) {
        ne1.at(r, s * de + a) = p.epsE_[r][s][a];
        ne2.at(s, r * de + a) = p.epsE_[r][s][a];
      }
      for (int b = 0; b < df; ++b) {
        nf1.at(s, r * df + b) = p.epsF_[s][r][b];
        nf2.at(r, s * df + b) = p.epsF_[s][r][b];
      }
    }
  if (!full_rank(std::move(ne1)) || !full_rank(std::move(ne2)))
    throw precondition_error("eps_E is degenerate");
  if (!full_rank(std::move(nf1)) || !full_rank(std::move(nf2)))
    throw precondition_error("eps_F is degenerate");

  FieldAlgebra::Elem gen_e = e_alg.generator();
  FieldAlgebra::Elem gen_f = f_alg.generator();
  for (size_t r = 0; r < n; ++r) {
    std::vector<Rat> er(n);
    er[r] = 1;
    std::vector<Rat> ger = m.act_left(gen_e, er);    // theta_E . m_r
    std::vector<Rat> fr = m.act_right(er, gen_f);    // m_r . theta_F
    for (size_t s = 0; s < n; ++s) {
      std::vector<Rat> us(n);
      us[s] = 1;
      const FieldAlgebra::Elem& base_e = p.epsE_[r][s];
      // E-bilinearity and F-balance of eps_E.
      if (p.eval_e(ger, us) != e_alg.mul(gen_e, base_e))
        throw precondition_error("eps_E is not left E-linear");
      if (p.eval_e(er, d.act_right(us, gen_e)) != e_alg.mul(base_e, gen_e))
        throw precondition_error("eps_E is not right E-linear");
      if (p.eval_e(fr, us) != p.eval_e(er, d.act_left(gen_f, us)))
        throw precondition_error("eps_E is not balanced over F");
      // F-bilinearity and E-balance of eps_F.
      const FieldAlgebra::Elem& base_f = p.epsF_[s][r];
      if (p.eval_f(d.act_left(gen_f, us), er) != f_alg.mul(gen_f, base_f))
        throw precondition_error("eps_F is not left F-linear");
      if (p.eval_f(us, fr) != f_alg.mul(base_f, gen_f))
        throw precondition_error("eps_F is not right F-linear");
      if (p.eval_f(d.act_right(us, gen_e), er) != p.eval_f(us, ger))
        throw precondition_error("eps_F is not balanced over E");
      // Symmetrizability through the traces.
      if (e_alg.trace(base_e) != f_alg.trace(base_f))
        throw precondition_error("pair is not symmetrizable via the traces");
    }
  }
}

DualBasisResult dual_basis(const DualizingPair& p, PairSide side,
                           std::optional<std::vector<std::vector<Rat>>> basis) {
  const Bimodule& m = p.mod();
  bool left = side == PairSide::left;
  const FieldAlgebra& alg = left ? *p.E() : *p.F();
  int count = left ? m.left_dim() : m.right_dim();
  int deg = alg.degree();

  std::vector<std::vector<Rat>> bas;
  if (basis) {
    bas = std::move(*basis);
    if (int(bas.size()) != count)
      throw precondition_error("supplied basis has the wrong size");
  } else {
    bas = left ? left_basis(m).vecs : right_basis(m).vecs;
  }

  // One square system per dual vector: eps_E(basis_k (x) u) = delta_kl (left)
  // or eps_F(u (x) basis_t) = delta_st (right), written over Q.
  size_t dim = size_t(m.dim());
  RatMat sys(size_t(count) * deg, dim);
  for (int k = 0; k < count; ++k)
    for (int a = 0; a < deg; ++a)
      for (size_t s = 0; s < dim; ++s) {
        Rat acc = 0;
        for (size_t r = 0; r < dim; ++r) {
          if (bas[k][r] == 0) continue;
          const FieldAlgebra::Elem& e =
              left ? p.eps_e_entry(int(r), int(s)) : p.eps_f_entry(int(s), int(r));
          acc += bas[k][r] * e[a];
        }
        sys.at(size_t(k) * deg + a, s) = acc;
      }

  auto inv = invert(sys);
  if (!inv)
    throw precondition_error("dual basis system is singular (degenerate pair data)");

  DualBasisResult out;
  out.basis = std::move(bas);
  out.dual.resize(count);
  for (int l = 0; l < count; ++l) {
    std::vector<Rat> rhs(size_t(count) * deg);
    rhs[size_t(l) * deg] = 1;  // delta_kl . 1_alg
    out.dual[l] = inv->mul(rhs);
  }
  return out;
}

CentralElement central_element(const DualizingPair& p, CentralSide side,
                               std::optional<std::vector<std::vector<Rat>>> basis) {
  CentralElement c;
  if (side == CentralSide::e_side) {
    DualBasisResult db = dual_basis(p, PairSide::right, std::move(basis));
    for (size_t t = 0; t < db.basis.size(); ++t)
      c.terms.emplace_back(db.basis[t], db.dual[t]);
  } else {
    DualBasisResult db = dual_basis(p, PairSide::left, std::move(basis));
    for (size_t k = 0; k < db.basis.size(); ++k)
      c.terms.emplace_back(db.dual[k], db.basis[k]);
  }
  return c;
}

std::vector<Rat> balanced_coords(const DualizingPair& p, CentralSide side,
                                 const CentralElement& elt) {
  const Bimodule& first = side == CentralSide::e_side ? p.mod() : p.dual();
  const Bimodule& second = side == CentralSide::e_side ? p.dual() : p.mod();
  SidedBasis rb = right_basis(first);
  std::vector<Rat> out(size_t(rb.count) * second.dim());
  for (const auto& [x, y] : elt.terms) {
    std::vector<FieldAlgebra::Elem> cs = rb.coords(x);
    for (int a = 0; a < rb.count; ++a) {
      if (std::all_of(cs[a].begin(), cs[a].end(), [](const Rat& q) { return q == 0; })) continue;
      std::vector<Rat> w = second.act_left(cs[a], y);
      for (int s = 0; s < second.dim(); ++s) out[size_t(a) * second.dim() + s] += w[s];
    }
  }
  return out;
}

RatMat adjoint_left(const DualizingPair& p, const RatMat& u, int dim_x, int dim_y) {
  const Bimodule& m = p.mod();
  if (u.rows() != size_t(dim_y) || u.cols() != size_t(m.dim()) * dim_x)
    throw precondition_error("adjoint: map shape mismatch");
  DualBasisResult db = dual_basis(p, PairSide::left);
  RatMat v(size_t(p.dual().dim()) * dim_y, dim_x);
  for (int beta = 0; beta < dim_x; ++beta) {
    for (size_t k = 0; k < db.basis.size(); ++k) {
      // y = u(m_k (x) x_beta)
      std::vector<Rat> y(dim_y);
      for (int r = 0; r < m.dim(); ++r) {
        if (db.basis[k][r] == 0) continue;
        for (int t = 0; t < dim_y; ++t)
          y[t] += db.basis[k][r] * u.at(t, size_t(r) * dim_x + beta);
      }
      for (int s = 0; s < p.dual().dim(); ++s) {
        if (db.dual[k][s] == 0) continue;
        for (int t = 0; t < dim_y; ++t)
          v.at(size_t(s) * dim_y + t, beta) += db.dual[k][s] * y[t];
      }
    }
  }
  return v;
}

RatMat unadjoint_left(const DualizingPair& p, const RatMat& v, int dim_x, int dim_y,
                      const std::vector<RatMat>& y_act) {
  const Bimodule& m = p.mod();
  if (v.rows() != size_t(p.dual().dim()) * dim_y || v.cols() != size_t(dim_x))
    throw precondition_error("unadjoint: map shape mismatch");
  if (int(y_act.size()) != p.E()->degree())
    throw precondition_error("unadjoint: Y needs one action matrix per power of E");
  RatMat u(dim_y, size_t(m.dim()) * dim_x);
  for (int beta = 0; beta < dim_x; ++beta)
    for (int s = 0; s < p.dual().dim(); ++s)
      for (int t = 0; t < dim_y; ++t) {
        const Rat& c = v.at(size_t(s) * dim_y + t, beta);
        if (c == 0) continue;
        for (int r = 0; r < m.dim(); ++r) {
          const FieldAlgebra::Elem& eps = p.eps_e_entry(r, s);
          for (int a = 0; a < p.E()->degree(); ++a) {
            if (eps[a] == 0) continue;
            for (int tt = 0; tt < dim_y; ++tt)
              u.at(tt, size_t(r) * dim_x + beta) += c * eps[a] * y_act[a].at(tt, t);
          }
        }
      }
  return u;
}

RatMat adjoint_right(const DualizingPair& p, const RatMat& u, int dim_v, int dim_w) {
  const Bimodule& m = p.mod();
  if (u.rows() != size_t(dim_w) || u.cols() != size_t(dim_v) * m.dim())
    throw precondition_error("adjoint: map shape mismatch");
  DualBasisResult db = dual_basis(p, PairSide::right);
  RatMat v(size_t(dim_w) * p.dual().dim(), dim_v);
  for (int alpha = 0; alpha < dim_v; ++alpha) {
    for (size_t s = 0; s < db.basis.size(); ++s) {
      std::vector<Rat> w(dim_w);
      for (int r = 0; r < m.dim(); ++r) {
        if (db.basis[s][r] == 0) continue;
        for (int t = 0; t < dim_w; ++t)
          w[t] += db.basis[s][r] * u.at(t, size_t(alpha) * m.dim() + r);
      }
      for (int sp = 0; sp < p.dual().dim(); ++sp) {
        if (db.dual[s][sp] == 0) continue;
        for (int t = 0; t < dim_w; ++t)
          v.at(size_t(t) * p.dual().dim() + sp, alpha) += db.dual[s][sp] * w[t];
      }
    }
  }
  return v;
}

RatMat unadjoint_right(const DualizingPair& p, const RatMat& v, int dim_v, int dim_w,
                       const std::vector<RatMat>& w_act) {
  const Bimodule& m = p.mod();
  if (v.rows() != size_t(dim_w) * p.dual().dim() || v.cols() != size_t(dim_v))
    throw precondition_error("unadjoint: map shape mismatch");
  if (int(w_act.size()) != p.F()->degree())
    throw precondition_error("unadjoint: W needs one action matrix per power of F");
  RatMat u(dim_w, size_t(dim_v) * m.dim());
  for (int alpha = 0; alpha < dim_v; ++alpha)
    for (int t = 0; t < dim_w; ++t)
      for (int sp = 0; sp < p.dual().dim(); ++sp) {
        const Rat& c = v.at(size_t(t) * p.dual().dim() + sp, alpha);
        if (c == 0) continue;
        for (int r = 0; r < m.dim(); ++r) {
          const FieldAlgebra::Elem& eps = p.eps_f_entry(sp, r);
          for (int b = 0; b < p.F()->degree(); ++b) {
            if (eps[b] == 0) continue;
            for (int tt = 0; tt < dim_w; ++tt)
              u.at(tt, size_t(alpha) * m.dim() + r) += c * eps[b] * w_act[b].at(tt, t);
          }
        }
      }
  return u;
}

DualizingPair product_pair(const DualizingPair& p12, const DualizingPair& p23) {
  const FieldPtr& e1 = p12.E();
  const FieldPtr& mid = p12.F();
  const FieldPtr& f3 = p23.F();
  if (!mid->same_algebra(*p23.E()))
    throw precondition_error("product: inner algebras do not match");

  const Bimodule& m12 = p12.mod();
  const Bimodule& m23 = p23.mod();
  const Bimodule& d12 = p12.dual();
  const Bimodule& d23 = p23.dual();

  SidedBasis rb12 = right_basis(m12);
  SidedBasis rbd23 = right_basis(d23);
  size_t dim = size_t(rb12.count) * m23.dim();
  size_t dimd = size_t(rbd23.count) * d12.dim();
  if (dim != dimd) throw error("internal: product dimensions disagree");

  // M = M12 (x)_mid M23 on the basis w_alpha (x) v_beta.
  RatMat tl(dim, dim), tr(dim, dim);
  FieldAlgebra::Elem gen1 = e1->generator();
  for (int alpha = 0; alpha < rb12.count; ++alpha) {
    std::vector<FieldAlgebra::Elem> cs = rb12.coords(m12.act_left(gen1, rb12.vecs[alpha]));
    for (int gamma = 0; gamma < rb12.count; ++gamma) {
      RatMat actc = RatMat(m23.dim(), m23.dim());
      bool nonzero = false;
      for (int a = 0; a < mid->degree(); ++a)
        if (cs[gamma][a] != 0) nonzero = true;
      if (!nonzero) continue;
      // matrix of (cs[gamma] . -) on M23
      for (int beta = 0; beta < m23.dim(); ++beta) {
        std::vector<Rat> unit(m23.dim());
        unit[beta] = 1;
        std::vector<Rat> w = m23.act_left(cs[gamma], unit);
        for (int i = 0; i < m23.dim(); ++i) actc.at(i, beta) = w[i];
      }
      for (int beta = 0; beta < m23.dim(); ++beta)
        for (int i = 0; i < m23.dim(); ++i)
          tl.at(size_t(gamma) * m23.dim() + i, size_t(alpha) * m23.dim() + beta) =
              actc.at(i, beta);
    }
  }
  FieldAlgebra::Elem gen3 = f3->generator();
  for (int alpha = 0; alpha < rb12.count; ++alpha)
    for (int beta = 0; beta < m23.dim(); ++beta) {
      std::vector<Rat> unit(m23.dim());
      unit[beta] = 1;
      std::vector<Rat> w = m23.act_right(unit, gen3);
      for (int i = 0; i < m23.dim(); ++i)
        tr.at(size_t(alpha) * m23.dim() + i, size_t(alpha) * m23.dim() + beta) = w[i];
    }
  Bimodule prod = Bimodule::make(e1, f3, std::move(tl), std::move(tr));

  // M* = M23* (x)_mid M12* on the basis z_gamma (x) u_delta.
  RatMat dtl(dim, dim), dtr(dim, dim);
  for (int gamma = 0; gamma < rbd23.count; ++gamma) {
    std::vector<FieldAlgebra::Elem> cs = rbd23.coords(d23.act_left(gen3, rbd23.vecs[gamma]));
    for (int g2 = 0; g2 < rbd23.count; ++g2) {
      for (int delta = 0; delta < d12.dim(); ++delta) {
        std::vector<Rat> unit(d12.dim());
        unit[delta] = 1;
        std::vector<Rat> w = d12.act_left(cs[g2], unit);
        for (int i = 0; i < d12.dim(); ++i)
          dtl.at(size_t(g2) * d12.dim() + i, size_t(gamma) * d12.dim() + delta) += w[i];
      }
    }
  }
  for (int gamma = 0; gamma < rbd23.count; ++gamma)
    for (int delta = 0; delta < d12.dim(); ++delta) {
      std::vector<Rat> unit(d12.dim());
      unit[delta] = 1;
      std::vector<Rat> w = d12.act_right(unit, gen1);
      for (int i = 0; i < d12.dim(); ++i)
        dtr.at(size_t(gamma) * d12.dim() + i, size_t(gamma) * d12.dim() + delta) = w[i];
    }
  Bimodule dprod = Bimodule::make(f3, e1, std::move(dtl), std::move(dtr));

  DualizingPair out;
  out.mod_ = std::move(prod);
  out.dual_ = std::move(dprod);
  out.epsE_.assign(dim, std::vector<FieldAlgebra::Elem>(dim));
  out.epsF_.assign(dim, std::vector<FieldAlgebra::Elem>(dim));
  for (int alpha = 0; alpha < rb12.count; ++alpha)
    for (int beta = 0; beta < m23.dim(); ++beta) {
      size_t row = size_t(alpha) * m23.dim() + beta;
      std::vector<Rat> vbeta(m23.dim());
      vbeta[beta] = 1;
      for (int gamma = 0; gamma < rbd23.count; ++gamma)
        for (int delta = 0; delta < d12.dim(); ++delta) {
          size_t col = size_t(gamma) * d12.dim() + delta;
          std::vector<Rat> udelta(d12.dim());
          udelta[delta] = 1;
          // eps13((w (x) v) (x) (z (x) u)) = eps12(w . eps23(v (x) z) (x) u)
          FieldAlgebra::Elem inner = p23.eval_e(vbeta, rbd23.vecs[gamma]);
          std::vector<Rat> shifted = m12.act_right(rb12.vecs[alpha], inner);
          out.epsE_[row][col] = p12.eval_e(shifted, udelta);
          // eps31((z (x) u) (x) (w (x) v)) = eps32(z (x) eps21(u (x) w) . v)
          FieldAlgebra::Elem inner2 = p12.eval_f(udelta, rb12.vecs[alpha]);
          std::vector<Rat> shifted2 = m23.act_left(inner2, vbeta);
          out.epsF_[col][row] = p23.eval_f(rbd23.vecs[gamma], shifted2);
        }
    }
  verify_pair(out);
  return out;
}

}  // namespace camut
