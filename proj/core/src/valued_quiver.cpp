#include "camut/valued_quiver.hpp"

#include "camut/errors.hpp"

#include <algorithm>
#include <set>

namespace camut {

ValuedQuiver ValuedQuiver::make(std::vector<std::string> points,
                                std::vector<bool> frozen,
                                std::vector<Int> symmetrizer,
                                const std::vector<ArrowSpec>& arrows,
                                bool extended) {
  ValuedQuiver q;
  int n = int(points.size());
  if (n == 0) throw precondition_error("valued quiver needs at least one point");
  if (int(frozen.size()) != n || int(symmetrizer.size()) != n)
    throw precondition_error("frozen/symmetrizer length must match point count");
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (p.empty() || !seen.insert(p).second)
      throw precondition_error("point labels must be distinct and non-empty");
  }
  for (const Int& s : symmetrizer)
    if (s <= 0) throw precondition_error("symmetrizer entries must be positive");

  q.points_ = std::move(points);
  q.frozen_ = std::move(frozen);
  q.sym_ = std::move(symmetrizer);
  q.extended_ = extended;

  for (const auto& a : arrows) {
    int i = q.index_of(a.from);
    int j = q.index_of(a.to);
    if (i < 0 || j < 0) throw precondition_error("arrow endpoint '" + a.from + "'/'" + a.to + "' unknown");
    if (i == j) throw precondition_error("loops are not allowed");
    if (a.fwd == 0 && a.bwd == 0) continue;  // zero-valued arrows are not counted
    if (a.fwd <= 0 || a.bwd <= 0)
      throw precondition_error("arrow valuations must be positive");
    ArrowVal& v = q.arrows_[{i, j}];
    v.fwd += a.fwd;
    v.bwd += a.bwd;
  }

  for (const auto& [key, v] : q.arrows_) {
    auto [i, j] = key;
    if (v.fwd * q.sym_[j] != v.bwd * q.sym_[i])
      throw precondition_error("arrow " + q.points_[i] + "->" + q.points_[j] +
                               " violates d_ij n_j = d_ji n_i");
    if (extended && q.frozen_[i] && q.frozen_[j])
      throw precondition_error("extended quiver may not have arrows between frozen points");
  }
  return q;
}

int ValuedQuiver::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  return it == points_.end() ? -1 : int(it - points_.begin());
}

ArrowVal ValuedQuiver::arrow(int i, int j) const {
  auto it = arrows_.find({i, j});
  return it == arrows_.end() ? ArrowVal{0, 0} : it->second;
}

int ValuedQuiver::mutable_count() const {
  int n = 0;
  for (bool f : frozen_) n += !f;
  return n;
}

int ValuedQuiver::two_cycle_count() const {
  int c = 0;
  for (const auto& [key, v] : arrows_) {
    (void)v;
    if (key.first < key.second && arrows_.count({key.second, key.first})) ++c;
  }
  return c;
}

ValuedQuiver from_matrix(const ExchangeMatrix& b) {
  int n = b.n_mutable(), m = b.m_total();
  std::vector<std::string> points(m);
  std::vector<bool> frozen(m, false);
  std::vector<Int> sym(m, Int(1));
  for (int i = 0; i < m; ++i) {
    points[i] = std::to_string(i + 1);
    if (i >= n) frozen[i] = true;
  }
  for (int i = 0; i < n; ++i) sym[i] = b.symmetrizer().diag[i];
  // The matrix pins only the mutable-side component of a frozen arrow; pick
  // the minimal positive frozen weight compatible with every neighbour.
  for (int c = n; c < m; ++c) {
    Int g = 0;
    for (int j = 0; j < n; ++j)
      if (b.at(c, j) != 0) g = gcd(g, abs(b.at(c, j)) * sym[j]);
    if (g != 0) sym[c] = g;
  }

  std::vector<ArrowSpec> arrows;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Int& bij = b.at(i, j);
      if (bij == 0) continue;
      Int d_ij = abs(bij);
      if (i < n) {
        if (bij > 0)
          arrows.push_back({points[i], points[j], d_ij, abs(b.at(j, i))});
        // The arrow is recorded once, from the positive entry.
      } else {
        Int d_ji = d_ij * sym[j] / sym[i];
        if (bij > 0)
          arrows.push_back({points[i], points[j], d_ij, d_ji});
        else
          arrows.push_back({points[j], points[i], d_ji, d_ij});
      }
    }
  }
  return ValuedQuiver::make(std::move(points), std::move(frozen), std::move(sym), arrows,
                            /*extended=*/true);
}

ExchangeMatrix to_matrix(const ValuedQuiver& q) {
  int m = q.point_count();
  int n = q.mutable_count();
  if (n == 0) throw precondition_error("quiver has no mutable points");
  // Matrix row/column of each point: mutables first, in quiver order.
  std::vector<int> row_of(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i)
    if (!q.frozen()[i]) row_of[i] = next++;
  for (int i = 0; i < m; ++i)
    if (q.frozen()[i]) row_of[i] = next++;

  IntGrid g(m, std::vector<Int>(n, Int(0)));
  for (const auto& [key, v] : q.arrows()) {
    auto [i, j] = key;
    if (q.arrows().count({j, i}))
      throw precondition_error("two-cycle between " + q.points()[i] + " and " + q.points()[j] +
                               ": no exchange matrix corresponds");
    if (row_of[j] < n) g[row_of[i]][row_of[j]] = v.fwd;
    if (row_of[i] < n) g[row_of[j]][row_of[i]] = -v.bwd;
  }
  return ExchangeMatrix::make(std::move(g));
}

bool check_mutable_at(const ValuedQuiver& q, int k) {
  if (k < 0 || k >= q.point_count()) throw precondition_error("unknown point");
  if (q.frozen()[k]) throw precondition_error("point " + q.points()[k] + " is frozen");
  for (int i = 0; i < q.point_count(); ++i)
    if (q.has_arrow(i, k) && q.has_arrow(k, i)) return false;
  return true;
}

ValuedQuiver mutate_quiver(const ValuedQuiver& q, int k) {
  if (!check_mutable_at(q, k))
    throw precondition_error("point " + q.points()[k] + " lies on a 2-cycle");

  int m = q.point_count();
  std::map<std::pair<int, int>, ArrowVal> out;

  // Arrows at k reverse with unchanged valuation.
  for (const auto& [key, v] : q.arrows()) {
    auto [i, j] = key;
    if (i == k || j == k) out[{j, i}] = {v.bwd, v.fwd};
  }

  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (a == k || b == k) continue;
      // Orient the pair so that composite paths, if any, run i -> k -> j.
      int i, j;
      if (q.has_arrow(a, k) && q.has_arrow(k, b)) {
        i = a;
        j = b;
      } else if (q.has_arrow(b, k) && q.has_arrow(k, a)) {
        i = b;
        j = a;
      } else {
        if (auto v = q.arrow(a, b); !(v == ArrowVal{0, 0})) out[{a, b}] = v;
        if (auto v = q.arrow(b, a); !(v == ArrowVal{0, 0})) out[{b, a}] = v;
        continue;
      }
      // Valued quivers of extended clusters carry no data between two frozen
      // points; matrix mutation has no such entries either.
      if (q.extended() && q.frozen()[i] && q.frozen()[j]) continue;

      ArrowVal ik = q.arrow(i, k);
      ArrowVal kj = q.arrow(k, j);
      Int p = ik.fwd * kj.fwd;    // val_ij of the composite path
      Int pp = ik.bwd * kj.bwd;   // val_ji of the composite path
      ArrowVal gamma = q.arrow(j, i);
      Int c = gamma.bwd;          // val_ij of the opposing arrow
      Int cc = gamma.fwd;         // val_ji of the opposing arrow

      if (auto v = q.arrow(i, j); !(v == ArrowVal{0, 0})) out[{i, j}] = v;

      Int diff = p - c;
      Int diff2 = pp - cc;
      if (sgn(diff) != sgn(diff2))
        throw error("internal: symmetrizability broken in quiver mutation");
      if (diff > 0) {
        ArrowVal& v = out[{i, j}];
        v.fwd += diff;
        v.bwd += diff2;
      } else if (diff < 0) {
        ArrowVal& v = out[{j, i}];
        v.fwd += -diff2;
        v.bwd += -diff;
      }
    }
  }

  std::vector<ArrowSpec> specs;
  specs.reserve(out.size());
  for (const auto& [key, v] : out)
    specs.push_back({q.points()[key.first], q.points()[key.second], v.fwd, v.bwd});
  return ValuedQuiver::make(q.points(), q.frozen(), q.symmetrizer(), specs, q.extended());
}

}  // namespace camut
