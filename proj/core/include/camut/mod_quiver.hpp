#ifndef CAMUT_MOD_QUIVER_HPP
#define CAMUT_MOD_QUIVER_HPP

#include "camut/valued_quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace camut {

struct ModArrowSpec {
  std::string from, to;
  Int ldim;  // dim over the source point's division algebra
};

/// Dimension-level data of a modulated quiver: per-point algebra degrees n_i
/// and per-arrow left dimensions ldim(i->j) = dim_{k_i} B_ij. The underlying
/// valued arrow i->j carries (d_ij, d_ji) = (ldim n_i / n_j, ldim), which is
/// symmetrizable with symmetrizer (n_i) by construction.
class ModQuiverDims {
 public:
  static ModQuiverDims make(std::vector<std::string> points, std::vector<Int> degrees,
                            std::vector<bool> frozen, const std::vector<ModArrowSpec>& arrows);

  int point_count() const { return int(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Int>& degrees() const { return degrees_; }
  const std::vector<bool>& frozen() const { return frozen_; }
  const std::map<std::pair<int, int>, Int>& ldims() const { return ldims_; }
  int index_of(const std::string& label) const;

  ValuedQuiver underlying() const;

  bool operator==(const ModQuiverDims&) const = default;

 private:
  ModQuiverDims() = default;
  std::vector<std::string> points_;
  std::vector<Int> degrees_;
  std::vector<bool> frozen_;
  std::map<std::pair<int, int>, Int> ldims_;
};

/// Mutation at point k (0-based) of the dimension table: arrows at k reverse
/// keeping their bimodule (so the stored left dimension is recomputed on the
/// new source), and every acyclic triple i -> k -> j gains
/// dim_{k_i} B'_ij = dim_{k_i} B_ij + dim_{k_i} B_ik . dim_{k_k} B_kj.
/// A triple through k that is not acyclic is an error ("splitting hypothesis
/// unverifiable"), never a silent computation.
ModQuiverDims semi_modulated_mutate(const ModQuiverDims& d, int k);

}  // namespace camut

#endif
