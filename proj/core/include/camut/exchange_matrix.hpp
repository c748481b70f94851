#ifndef CAMUT_EXCHANGE_MATRIX_HPP
#define CAMUT_EXCHANGE_MATRIX_HPP

#include "camut/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace camut {

using IntGrid = std::vector<std::vector<Int>>;

/// Positive diagonal symmetrizer of a skew-symmetrizable principal part,
/// minimal per connected component.
struct Symmetrizer {
  std::vector<Int> diag;
  bool operator==(const Symmetrizer&) const = default;
};

/// Rectangular integer matrix whose principal part (the top square) is
/// skew-symmetrizable: b_ij n_j = -b_ji n_i for some positive integers n_i.
/// Rows below the square index frozen (coefficient) variables.
///
/// Shape is m_total x n_mutable. External interfaces are 1-based; the
/// in-memory accessors are 0-based.
class ExchangeMatrix {
 public:
  /// Empty matrix; useful only as a container placeholder.
  ExchangeMatrix() = default;

  /// Validates shape, zero diagonal and existence of a symmetrizer.
  static ExchangeMatrix make(IntGrid entries);

  int n_mutable() const { return n_; }
  int m_total() const { return m_; }

  const Int& at(int row, int col) const { return e_[size_t(row) * n_ + col]; }

  const Symmetrizer& symmetrizer() const { return sym_; }

  /// Simultaneous permutation of mutable indices: entry(i,j) of the result is
  /// entry(new_to_old[i], new_to_old[j]) for mutable i, and frozen rows keep
  /// their place with columns permuted.
  ExchangeMatrix permute_mutable(const std::vector<int>& new_to_old) const;

  IntGrid grid() const;
  std::string to_string() const;
  bool operator==(const ExchangeMatrix&) const = default;

 private:
  int n_ = 0, m_ = 0;
  std::vector<Int> e_;
  Symmetrizer sym_;
};

/// Minimal positive symmetrizer of a square integer matrix, if one exists.
/// Deterministic: per connected component of the support graph the entries
/// are scaled to coprime positive integers.
std::optional<Symmetrizer> find_symmetrizer(const IntGrid& principal);

/// Checks b_ij n_j = -b_ji n_i for all i,j over the principal part.
bool symmetrizes(const IntGrid& principal, const Symmetrizer& sym);

/// Mutation at mutable direction k (1-based):
///   b'_ij = -b_ij                                  if k in {i,j},
///   b'_ij = b_ij + common_sign(b_ik, b_kj) b_ik b_kj   otherwise.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

}  // namespace camut

#endif
