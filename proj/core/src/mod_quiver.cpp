#include "camut/mod_quiver.hpp"

#include "camut/errors.hpp"

#include <algorithm>

namespace camut {

ModQuiverDims ModQuiverDims::make(std::vector<std::string> points, std::vector<Int> degrees,
                                  std::vector<bool> frozen,
                                  const std::vector<ModArrowSpec>& arrows) {
  ModQuiverDims d;
  d.points_ = std::move(points);
  d.degrees_ = std::move(degrees);
  d.frozen_ = std::move(frozen);
  if (d.points_.empty()) throw precondition_error("modulated quiver needs at least one point");
  if (d.degrees_.size() != d.points_.size() || d.frozen_.size() != d.points_.size())
    throw precondition_error("degrees/frozen length must match point count");
  for (const Int& n : d.degrees_)
    if (n <= 0) throw precondition_error("algebra degrees must be positive");

  for (const auto& a : arrows) {
    int i = d.index_of(a.from), j = d.index_of(a.to);
    if (i < 0 || j < 0) throw precondition_error("arrow endpoint unknown");
    if (i == j) throw precondition_error("loops are not allowed");
    if (a.ldim <= 0) throw precondition_error("arrow dimensions must be positive");
    d.ldims_[{i, j}] += a.ldim;
  }
  for (const auto& [key, ldim] : d.ldims_) {
    auto [i, j] = key;
    if (ldim * d.degrees_[i] % d.degrees_[j] != 0)
      throw precondition_error("dim_Q of arrow " + d.points_[i] + "->" + d.points_[j] +
                               " is not divisible by the target degree");
  }
  return d;
}

int ModQuiverDims::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  return it == points_.end() ? -1 : int(it - points_.begin());
}

ValuedQuiver ModQuiverDims::underlying() const {
  std::vector<ArrowSpec> arrows;
  for (const auto& [key, ldim] : ldims_) {
    auto [i, j] = key;
    arrows.push_back({points_[i], points_[j], ldim * degrees_[i] / degrees_[j], ldim});
  }
  return ValuedQuiver::make(points_, frozen_, degrees_, arrows, /*extended=*/false);
}

ModQuiverDims semi_modulated_mutate(const ModQuiverDims& d, int k) {
  ValuedQuiver q = d.underlying();
  if (!check_mutable_at(q, k))
    throw precondition_error("point " + d.points()[k] + " lies on a 2-cycle");

  auto has = [&d](int i, int j) { return d.ldims().count({i, j}) != 0; };
  auto ldim = [&d](int i, int j) { return d.ldims().at({i, j}); };
  const std::vector<Int>& n = d.degrees();

  int m = d.point_count();
  std::vector<ModArrowSpec> out;
  for (const auto& [key, l] : d.ldims()) {
    auto [i, j] = key;
    if (i == k || j == k) {
      // Same bimodule on the reversed arrow, measured over the new source.
      out.push_back({d.points()[j], d.points()[i], l * n[i] / n[j]});
    } else if (!(has(i, k) && has(k, j))) {
      out.push_back({d.points()[i], d.points()[j], l});
    }
    // Arrows i->j sitting on a composite path i->k->j are handled below.
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || i == k || j == k) continue;
      if (!(has(i, k) && has(k, j))) continue;
      if (has(j, i))
        throw precondition_error("splitting hypothesis unverifiable: triple (" + d.points()[i] +
                                 "," + d.points()[k] + "," + d.points()[j] + ") is not acyclic");
      Int base = has(i, j) ? ldim(i, j) : Int(0);
      out.push_back({d.points()[i], d.points()[j], base + ldim(i, k) * ldim(k, j)});
    }
  }
  return ModQuiverDims::make(d.points(), d.degrees(), d.frozen(), out);
}

}  // namespace camut
