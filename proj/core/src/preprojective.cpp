#include "camut/preprojective.hpp"

#include "camut/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace camut {

ModulatedGraph ModulatedGraph::make(std::vector<std::string> points,
                                    std::vector<FieldPtr> algebras,
                                    std::vector<EdgeInput> edges) {
  ModulatedGraph g;
  g.points_ = std::move(points);
  g.algebras_ = std::move(algebras);
  if (g.points_.empty()) throw precondition_error("modulated graph needs at least one point");
  if (g.algebras_.size() != g.points_.size())
    throw precondition_error("one algebra per point required");
  std::set<std::string> seen;
  for (const auto& p : g.points_)
    if (p.empty() || !seen.insert(p).second)
      throw precondition_error("point labels must be distinct and non-empty");

  for (auto& e : edges) {
    int i = g.index_of(e.from), j = g.index_of(e.to);
    if (i < 0 || j < 0) throw precondition_error("edge endpoint unknown");
    if (i == j) throw precondition_error("loops are not allowed");
    if (g.dir_.count({i, j}) || g.dir_.count({j, i}))
      throw precondition_error("at most one edge per pair of points");
    if (!e.bimodule.left()->same_algebra(*g.algebras_[i]) ||
        !e.bimodule.right()->same_algebra(*g.algebras_[j]))
      throw precondition_error("edge bimodule algebras do not match its endpoints");
    int idx = int(g.edges_.size());
    g.edges_.push_back({i, j, make_dualizing_pair(e.bimodule)});
    g.dir_[{i, j}] = {idx, true};
    g.dir_[{j, i}] = {idx, false};
  }
  return g;
}

int ModulatedGraph::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  return it == points_.end() ? -1 : int(it - points_.begin());
}

const Bimodule* ModulatedGraph::direction(int i, int j) const {
  auto it = dir_.find({i, j});
  if (it == dir_.end()) return nullptr;
  const Edge& e = edges_[it->second.first];
  return it->second.second ? &e.pair.mod() : &e.pair.dual();
}

std::vector<int> ModulatedGraph::neighbours(int i) const {
  std::vector<int> out;
  for (const auto& [key, v] : dir_) {
    (void)v;
    if (key.first == i) out.push_back(key.second);
  }
  return out;
}

ValuedQuiver ModulatedGraph::underlying_valued_graph() const {
  std::vector<Int> sym;
  sym.reserve(algebras_.size());
  for (const auto& a : algebras_) sym.push_back(a->degree());
  std::vector<ArrowSpec> arrows;
  for (const Edge& e : edges_) {
    const Bimodule& b = e.pair.mod();
    arrows.push_back({points_[e.i], points_[e.j], Int(b.right_dim()), Int(b.left_dim())});
  }
  return ValuedQuiver::make(points_, std::vector<bool>(points_.size(), false), sym, arrows,
                            /*extended=*/false);
}

std::vector<const RelationBlock*> RelationElement::at_point(int i) const {
  std::vector<const RelationBlock*> out;
  for (const auto& b : blocks)
    if (b.i == i) out.push_back(&b);
  return out;
}

namespace {

bool elem_is_zero(const FieldAlgebra::Elem& e) {
  return std::all_of(e.begin(), e.end(), [](const Rat& c) { return c == 0; });
}

/// Canonical coordinates of sum z (x) zstar in B_ij (x)_{k_j} B_ji:
/// decompose z over a right k_j-basis and push the scalars into the left
/// action on zstar.
std::vector<Rat> degree2_coords(const SidedBasis& rb_ij, const Bimodule& bji,
                                const std::vector<RelationTerm>& terms) {
  std::vector<Rat> out(size_t(rb_ij.count) * bji.dim());
  for (const auto& t : terms) {
    std::vector<FieldAlgebra::Elem> cs = rb_ij.coords(t.z);
    for (int a = 0; a < rb_ij.count; ++a) {
      if (elem_is_zero(cs[a])) continue;
      std::vector<Rat> w = bji.act_left(cs[a], t.zstar);
      for (int s = 0; s < bji.dim(); ++s) out[size_t(a) * bji.dim() + s] += w[s];
    }
  }
  return out;
}

}  // namespace

RelationElement relation_element(const ModulatedGraph& g) {
  RelationElement rho;
  for (const auto& e : g.edges()) {
    RelationBlock fwd{e.i, e.j, {}};
    for (const auto& [z, zs] : central_element(e.pair, CentralSide::e_side).terms)
      fwd.terms.push_back({z, zs});
    RelationBlock bwd{e.j, e.i, {}};
    for (const auto& [zs, z] : central_element(e.pair, CentralSide::f_side).terms)
      bwd.terms.push_back({zs, z});
    rho.blocks.push_back(std::move(fwd));
    rho.blocks.push_back(std::move(bwd));
  }
  std::sort(rho.blocks.begin(), rho.blocks.end(), [](const RelationBlock& a, const RelationBlock& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });

  // K-centrality, exactly: the generator of k_i commutes with the (i,*)
  // component of rho inside the balanced degree-2 space.
  for (const auto& block : rho.blocks) {
    const Bimodule* bij = g.direction(block.i, block.j);
    const Bimodule* bji = g.direction(block.j, block.i);
    SidedBasis rb = right_basis(*bij);
    const FieldAlgebra& ki = *g.algebra(block.i);
    FieldAlgebra::Elem gen = ki.generator();
    std::vector<RelationTerm> lhs, rhs;
    for (const auto& t : block.terms) {
      lhs.push_back({bij->act_left(gen, t.z), t.zstar});
      rhs.push_back({t.z, bji->act_right(t.zstar, gen)});
    }
    if (degree2_coords(rb, *bji, lhs) != degree2_coords(rb, *bji, rhs))
      throw error("internal: relation element is not K-central");
  }
  return rho;
}

namespace {

// ---- number-field echelon ----------------------------------------------

using KElem = FieldAlgebra::Elem;
using KVec = std::vector<KElem>;

struct KEchelon {
  const FieldAlgebra* k = nullptr;
  size_t cols = 0;
  std::vector<KVec> rows;
  std::vector<size_t> pivots;

  KVec reduce(KVec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const KElem& c = v[pivots[r]];
      if (elem_is_zero(c)) continue;
      KElem f = c;  // rows have pivot 1
      const KVec& row = rows[r];
      for (size_t j = pivots[r]; j < cols; ++j) {
        if (elem_is_zero(row[j])) continue;
        v[j] = k->sub(v[j], k->mul(f, row[j]));
      }
    }
    return v;
  }

  bool add(KVec v) {
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < cols && elem_is_zero(v[p])) ++p;
    if (p == cols) return false;
    KElem inv = k->inv(v[p]);
    for (size_t j = p; j < cols; ++j)
      if (!elem_is_zero(v[j])) v[j] = k->mul(inv, v[j]);
    for (size_t r = 0; r < rows.size(); ++r) {
      KElem f = rows[r][p];
      if (elem_is_zero(f)) continue;
      for (size_t j = p; j < cols; ++j)
        if (!elem_is_zero(v[j])) rows[r][j] = k->sub(rows[r][j], k->mul(f, v[j]));
    }
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, p);
    return true;
  }

  std::vector<size_t> free_columns() const {
    std::vector<size_t> free;
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
      if (r < pivots.size() && pivots[r] == c)
        ++r;
      else
        free.push_back(c);
    }
    return free;
  }
};

// ---- the layered quotient engine -----------------------------------------
//
// Lambda_m is held blockwise: Lambda_m^{(a,b)} = e_a Lambda_m e_b as a right
// k_b-vector space in explicit coordinates. The next layer is the quotient
//   Lambda_{m+1}^{(a,b)} = (sum_j Lambda_m^{(a,j)} (x)_{k_j} B_{jb}) / J
// where J is generated by v . rho_b with v running over a basis of
// Lambda_{m-1}^{(a,b)}; right k_b-multiples come for free from the field
// coordinates and left multiples reduce to these because rho is K-central
// (verified in relation_element). T_m itself is never materialized.

struct DirData {
  const Bimodule* bim = nullptr;
  SidedBasis rb;  // right basis over the target algebra
};

struct LayerBlock {
  int a = 0, b = 0;
  int kdim = 0;
  struct WSlot {
    int j, alpha, s;
  };
  std::vector<WSlot> wslots;
  std::map<int, size_t> offset;  // j -> first slot index
  KEchelon rel;
  std::vector<size_t> freecols;
};

struct Engine {
  const ModulatedGraph* g;
  const RelationElement* rho;
  std::map<std::pair<int, int>, DirData> dirs;
  std::vector<std::map<std::pair<int, int>, LayerBlock>> layers;

  explicit Engine(const ModulatedGraph& graph, const RelationElement& rel) : g(&graph), rho(&rel) {
    for (int i = 0; i < g->point_count(); ++i)
      for (int j : g->neighbours(i)) {
        DirData d;
        d.bim = g->direction(i, j);
        d.rb = right_basis(*d.bim);
        dirs[{i, j}] = std::move(d);
      }
  }

  const LayerBlock* block(int m, int a, int b) const {
    auto it = layers[m].find({a, b});
    return it == layers[m].end() ? nullptr : &it->second;
  }

  // W_m coords of lambda (x) y with lambda in Lambda_{m-1}^{(a,i)} and y in
  // B_{ib}; scatter into the target block's slot layout.
  void scatter(const LayerBlock& target, int i, const KVec& lambda, const std::vector<Rat>& y,
               KVec& out) const {
    const DirData& dd = dirs.at({i, target.b});
    const FieldAlgebra& ki = *g->algebra(i);
    const FieldAlgebra& kb = *g->algebra(target.b);
    auto base_it = target.offset.find(i);
    if (base_it == target.offset.end()) throw error("internal: missing W slot group");
    size_t base = base_it->second;
    int rdim = dd.rb.count;
    for (size_t alpha = 0; alpha < lambda.size(); ++alpha) {
      if (ki.is_zero(lambda[alpha])) continue;
      std::vector<Rat> x = dd.bim->act_left(lambda[alpha], y);
      std::vector<KElem> cs = dd.rb.coords(x);
      for (int s = 0; s < rdim; ++s) {
        if (elem_is_zero(cs[s])) continue;
        KElem& slot = out[base + alpha * rdim + s];
        slot = kb.add(slot, cs[s]);
      }
    }
  }

  // Multiply lambda in Lambda_{m-1}^{(a,i)} by y in B_{ib} and project to
  // Lambda_m^{(a,b)} coordinates. Empty when the target space is zero.
  KVec mul_into(int m, int a, int i, const KVec& lambda, const std::vector<Rat>& y, int b) const {
    const LayerBlock* tgt = block(m, a, b);
    if (!tgt) return {};
    const FieldAlgebra& kb = *g->algebra(b);
    KVec w(tgt->wslots.size(), kb.zero());
    scatter(*tgt, i, lambda, y, w);
    w = tgt->rel.reduce(std::move(w));
    KVec q(tgt->freecols.size());
    for (size_t c = 0; c < tgt->freecols.size(); ++c) q[c] = w[tgt->freecols[c]];
    return q;
  }
};

}  // namespace

GradedDims graded_dims(const ModulatedGraph& g, int cap, GradedDimsLimits limits) {
  if (cap < 0) throw precondition_error("cap must be non-negative");
  int np = g.point_count();

  GradedDims out;
  out.cap = cap;

  // dim_Q T_m by dynamic programming over endpoints.
  {
    std::vector<std::vector<Int>> f(np, std::vector<Int>(np, Int(0)));
    for (int a = 0; a < np; ++a) f[a][a] = g.algebra(a)->degree();
    for (int m = 0; m <= cap; ++m) {
      Int total = 0;
      for (auto& row : f)
        for (Int& v : row) total += v;
      out.tensor_dims.push_back(total.convert_to<long long>());
      std::vector<std::vector<Int>> nf(np, std::vector<Int>(np, Int(0)));
      for (int a = 0; a < np; ++a)
        for (int j = 0; j < np; ++j) {
          if (f[a][j] == 0) continue;
          for (int b : g.neighbours(j))
            nf[a][b] += f[a][j] / g.algebra(j)->degree() * g.direction(j, b)->dim();
        }
      f = std::move(nf);
    }
  }

  RelationElement rho = relation_element(g);
  Engine eng(g, rho);

  // Degree 0: Lambda_0^{(a,a)} = k_a.
  eng.layers.emplace_back();
  for (int a = 0; a < np; ++a) {
    LayerBlock blk;
    blk.a = blk.b = a;
    blk.kdim = 1;
    eng.layers[0][{a, a}] = std::move(blk);
  }

  auto layer_qdim = [&](const std::map<std::pair<int, int>, LayerBlock>& layer) {
    long long d = 0;
    for (const auto& [key, blk] : layer) d += (long long)blk.kdim * g.algebra(key.second)->degree();
    return d;
  };

  auto build_layer = [&](int m) {
    eng.layers.emplace_back();
    auto& prev = eng.layers[m - 1];
    for (const auto& [key, pblk] : prev) {
      auto [a, j] = key;
      if (pblk.kdim == 0) continue;
      for (int b : g.neighbours(j)) {
        LayerBlock& blk = eng.layers[m][{a, b}];
        blk.a = a;
        blk.b = b;
        if (blk.offset.count(j)) continue;
        blk.offset[j] = blk.wslots.size();
        int rdim = eng.dirs.at({j, b}).rb.count;
        for (int alpha = 0; alpha < pblk.kdim; ++alpha)
          for (int s = 0; s < rdim; ++s) blk.wslots.push_back({j, alpha, s});
      }
    }
    for (auto& [key, blk] : eng.layers[m]) {
      const FieldAlgebra& kb = *g.algebra(key.second);
      long long qdim = (long long)blk.wslots.size() * kb.degree();
      if (qdim > limits.max_block_qdim)
        throw resource_error("graded layer exceeds the configured size limit");
      blk.rel.k = &kb;
      blk.rel.cols = blk.wslots.size();
    }
    // Relations J_m = (lifts of Lambda_{m-2}) . rho.
    if (m >= 2) {
      auto& prev2 = eng.layers[m - 2];
      for (const auto& [key, p2blk] : prev2) {
        auto [a, b] = key;
        if (p2blk.kdim == 0) continue;
        auto rho_blocks = rho.at_point(b);
        if (rho_blocks.empty()) continue;
        LayerBlock* tgt = nullptr;
        {
          auto it = eng.layers[m].find({a, b});
          if (it != eng.layers[m].end()) tgt = &it->second;
        }
        const FieldAlgebra& kb = *g.algebra(b);
        for (int alpha = 0; alpha < p2blk.kdim; ++alpha) {
          KVec v(p2blk.kdim, kb.zero());
          v[alpha] = kb.one();
          KVec w;
          if (tgt) w.assign(tgt->wslots.size(), kb.zero());
          bool any = false;
          for (const RelationBlock* rb : rho_blocks) {
            for (const RelationTerm& t : rb->terms) {
              KVec step = eng.mul_into(m - 1, a, b, v, t.z, rb->j);
              bool zero = true;
              for (const KElem& c : step)
                if (!elem_is_zero(c)) {
                  zero = false;
                  break;
                }
              if (zero) continue;
              if (!tgt) throw error("internal: relation target block missing");
              eng.scatter(*tgt, rb->j, step, t.zstar, w);
              any = true;
            }
          }
          if (any && tgt) tgt->rel.add(std::move(w));
        }
      }
    }
    for (auto& [key, blk] : eng.layers[m]) {
      (void)key;
      blk.freecols = blk.rel.free_columns();
      blk.kdim = int(blk.freecols.size());
    }
  };

  long long d0 = layer_qdim(eng.layers[0]);
  out.dims.push_back(d0);
  int zero_at = d0 == 0 ? 0 : -1;

  int m = 0;
  while (zero_at < 0 && m < cap) {
    ++m;
    build_layer(m);
    long long d = layer_qdim(eng.layers[m]);
    out.dims.push_back(d);
    if (d == 0) zero_at = m;
  }

  if (zero_at >= 0) {
    // The ideal is generated in degree 2; one zero layer kills everything
    // above it. Verify one degree further anyway.
    build_layer(zero_at + 1);
    if (layer_qdim(eng.layers[zero_at + 1]) != 0)
      throw error("internal: zero layer failed to propagate");
    long long sum = 0;
    for (long long d : out.dims) sum += d;
    out.total = sum;
  }
  return out;
}

bool is_dynkin(const ValuedQuiver& q) {
  if (!q.is_two_acyclic())
    throw precondition_error("Dynkin test requires a 2-acyclic valued graph");
  int n = q.point_count();
  RatMat cartan(n, n);
  for (int i = 0; i < n; ++i) cartan.at(i, i) = 2;
  for (const auto& [key, v] : q.arrows()) {
    auto [i, j] = key;
    cartan.at(i, j) = Rat(-v.fwd);
    cartan.at(j, i) = Rat(-v.bwd);
  }
  // C D is symmetric positive definite iff all leading principal minors of C
  // are positive (D the positive symmetrizer), so exact minors decide.
  for (int k = 1; k <= n; ++k) {
    RatMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = cartan.at(i, j);
    if (det(std::move(lead)) <= 0) return false;
  }
  return true;
}

}  // namespace camut
