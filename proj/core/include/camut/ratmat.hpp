#ifndef CAMUT_RATMAT_HPP
#define CAMUT_RATMAT_HPP

#include "camut/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace camut {

/// Dense matrix over the rationals. Desk-scale sizes; everything exact.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& other) const;
  RatMat operator+(const RatMat& other) const;
  RatMat operator-(const RatMat& other) const;
  bool operator==(const RatMat& other) const = default;

  std::vector<Rat> mul(const std::vector<Rat>& v) const;
  bool is_zero() const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

size_t rank(RatMat m);
Rat det(RatMat m);

/// One solution of A x = b, if any.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);
std::optional<RatMat> invert(const RatMat& a);

/// Incremental reduced row echelon form over the rationals. Rows are kept
/// mutually reduced with leading coefficient 1, so residuals are canonical:
/// reduce(v) == reduce(w) iff v and w lie in the same coset of the row span.
class Echelon {
 public:
  explicit Echelon(size_t cols) : cols_(cols) {}

  size_t cols() const { return cols_; }
  size_t rank() const { return rows_.size(); }

  std::vector<Rat> reduce(std::vector<Rat> v) const;

  /// Reduce v and absorb the residual if nonzero. True iff the rank grew.
  bool add(std::vector<Rat> v);

  bool contains(const std::vector<Rat>& v) const;

  /// Columns without a pivot, in increasing order; they index a basis of the
  /// quotient by the row span.
  std::vector<size_t> free_columns() const;

  /// Quotient coordinates of v: reduce(v) sampled at the free columns.
  std::vector<Rat> quotient_coords(const std::vector<Rat>& v,
                                   const std::vector<size_t>& free_cols) const;

 private:
  size_t cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<size_t> pivots_;  // pivot column of rows_[i]
};

}  // namespace camut

#endif
