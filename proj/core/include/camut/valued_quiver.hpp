#ifndef CAMUT_VALUED_QUIVER_HPP
#define CAMUT_VALUED_QUIVER_HPP

#include "camut/exchange_matrix.hpp"
#include "camut/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace camut {

/// Valuation of an arrow i->j: fwd = d_ij, bwd = d_ji.
struct ArrowVal {
  Int fwd, bwd;
  bool operator==(const ArrowVal&) const = default;
};

struct ArrowSpec {
  std::string from, to;
  Int fwd, bwd;
};

/// Finite valued quiver with symmetrizable valuation: at most one fully
/// valued arrow per ordered pair, no loops, d_ij n_j = d_ji n_i on every
/// arrow. Parallel input arrows are merged componentwise into the fully
/// valued arrow. "Extended" quivers additionally carry no arrow between two
/// frozen points.
class ValuedQuiver {
 public:
  static ValuedQuiver make(std::vector<std::string> points,
                           std::vector<bool> frozen,
                           std::vector<Int> symmetrizer,
                           const std::vector<ArrowSpec>& arrows,
                           bool extended = false);

  int point_count() const { return int(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<bool>& frozen() const { return frozen_; }
  const std::vector<Int>& symmetrizer() const { return sym_; }
  bool extended() const { return extended_; }

  int index_of(const std::string& label) const;  // -1 if absent

  const std::map<std::pair<int, int>, ArrowVal>& arrows() const { return arrows_; }
  bool has_arrow(int i, int j) const { return arrows_.count({i, j}) != 0; }
  /// Valuation of the arrow i->j, or (0,0) when absent.
  ArrowVal arrow(int i, int j) const;

  int mutable_count() const;
  int two_cycle_count() const;
  bool is_two_acyclic() const { return two_cycle_count() == 0; }

  bool operator==(const ValuedQuiver&) const = default;

 private:
  ValuedQuiver() = default;
  std::vector<std::string> points_;
  std::vector<bool> frozen_;
  std::vector<Int> sym_;
  std::map<std::pair<int, int>, ArrowVal> arrows_;
  bool extended_ = false;
};

/// Quiver of a matrix: b_ij > 0 gives an arrow i->j valued (b_ij, -b_ji).
/// Points are labeled "1".."m", frozen ones are n+1..m, and the symmetrizer
/// is extended to frozen points by the minimal positive choice.
ValuedQuiver from_matrix(const ExchangeMatrix& b);

/// Inverse of from_matrix on 2-acyclic loop-free quivers. Mutable points
/// take the matrix indices 1..n in quiver order, frozen points n+1..m.
ExchangeMatrix to_matrix(const ValuedQuiver& q);

/// True iff mutation at point k (0-based index) is defined: k mutable and on
/// no loop and no 2-cycle. Throws on unknown or frozen points.
bool check_mutable_at(const ValuedQuiver& q, int k);

/// Mutation at point k. Arrows incident to k reverse with unchanged
/// valuation; for each length-2 path i -> k -> j the arrows between i and j
/// are rewritten by the componentwise |composite - opposing| rule, oriented
/// by the sign of the difference. Arrows of Q_1(i,j) are preserved. On
/// extended quivers no arrow between two frozen points is ever created.
ValuedQuiver mutate_quiver(const ValuedQuiver& q, int k);

}  // namespace camut

#endif
