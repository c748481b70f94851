#ifndef CAMUT_PREPROJECTIVE_HPP
#define CAMUT_PREPROJECTIVE_HPP

#include "camut/bimodule.hpp"
#include "camut/valued_quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace camut {

/// Modulated graph: number-field algebras on points, one dualizing pair of
/// bimodules per unordered edge, no loops. The edge {i,j} stores B_ij as its
/// primary bimodule; B_ji is the dual within the same pair.
class ModulatedGraph {
 public:
  struct Edge {
    int i, j;
    DualizingPair pair;  // pair.mod() = B_ij over (k_i, k_j)
  };
  struct EdgeInput {
    std::string from, to;
    Bimodule bimodule;
  };

  static ModulatedGraph make(std::vector<std::string> points, std::vector<FieldPtr> algebras,
                             std::vector<EdgeInput> edges);

  int point_count() const { return int(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const FieldPtr& algebra(int i) const { return algebras_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int index_of(const std::string& label) const;

  /// Bimodule carried by the ordered direction (i,j), or nullptr.
  const Bimodule* direction(int i, int j) const;
  /// Neighbours of i, ascending.
  std::vector<int> neighbours(int i) const;

  /// Valued graph with edge {i,j} recorded as the arrow i->j carrying
  /// (dim_{k_j} B_ij, dim_{k_i} B_ij). All points mutable.
  ValuedQuiver underlying_valued_graph() const;

 private:
  ModulatedGraph() = default;
  std::vector<std::string> points_;
  std::vector<FieldPtr> algebras_;
  std::vector<Edge> edges_;
  std::map<std::pair<int, int>, std::pair<int, bool>> dir_;  // (i,j) -> (edge, primary?)
};

/// One tensor term of rho in the direction (i,j): z in B_ij, zstar in B_ji.
struct RelationTerm {
  std::vector<Rat> z, zstar;
};

struct RelationBlock {
  int i, j;
  std::vector<RelationTerm> terms;
};

/// rho = sum over ordered edge directions of the central element of the
/// corresponding pairing; the (i,j)-block lives in e_i (T_2) e_i.
struct RelationElement {
  std::vector<RelationBlock> blocks;  // ordered by (i,j)

  std::vector<const RelationBlock*> at_point(int i) const;
};

/// Builds rho and verifies exactly that it is K-central (the algebra
/// generator at each point commutes with rho in the balanced degree-2
/// space). The graded-dimension engine relies on that identity.
RelationElement relation_element(const ModulatedGraph& g);

struct GradedDims {
  std::vector<long long> tensor_dims;  // dim_Q T(Gamma)_m, m = 0..cap
  std::vector<long long> dims;         // dim_Q Lambda_m; ends at the first zero layer
  std::optional<long long> total;      // engaged iff a zero layer was reached
  int cap = 0;
};

struct GradedDimsLimits {
  long long max_block_qdim = 200000;

  /// Default limits, with CAMUT_MAX_BLOCK_DIM honored when set.
  static GradedDimsLimits from_env();
};

/// Graded dimensions of Lambda = T(Gamma)/<rho> by exact linear algebra over
/// the point fields, degree by degree. A zero layer is re-verified one degree
/// further before the total is reported; exceeding the block-size limit
/// raises resource_error rather than approximating.
GradedDims graded_dims(const ModulatedGraph& g, int cap, GradedDimsLimits limits = {});

/// Dynkin test for a loop-free 2-acyclic valued graph: the symmetrized
/// Cartan matrix (2 on the diagonal, -d_ij off it) is positive definite,
/// decided by exact leading principal minors.
bool is_dynkin(const ValuedQuiver& q);

}  // namespace camut

#endif
