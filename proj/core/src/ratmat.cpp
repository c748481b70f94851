#include "camut/ratmat.hpp"

#include "camut/errors.hpp"

#include <algorithm>

namespace camut {

RatMat RatMat::identity(size_t n) {
  RatMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& other) const {
  if (cols_ != other.rows_) throw precondition_error("matrix product shape mismatch");
  RatMat r(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) {
        const Rat& bkj = other.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw precondition_error("matrix sum shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw precondition_error("matrix difference shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
  return r;
}

std::vector<Rat> RatMat::mul(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw precondition_error("matrix-vector shape mismatch");
  std::vector<Rat> r(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

bool RatMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (size_t j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(RatMat m) { return rref(m).size(); }

Rat det(RatMat m) {
  if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
  size_t n = m.rows();
  Rat d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (size_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = Rat(1) / m.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw precondition_error("solve: rhs length mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  std::vector<Rat> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

std::optional<RatMat> invert(const RatMat& a) {
  if (a.rows() != a.cols()) throw precondition_error("invert: non-square matrix");
  size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Rat> Echelon::reduce(std::vector<Rat> v) const {
  if (v.size() != cols_) throw precondition_error("echelon: vector length mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat f = c;  // rows have leading 1
    const std::vector<Rat>& row = rows_[r];
    for (size_t j = pivots_[r]; j < cols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool Echelon::add(std::vector<Rat> v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Rat inv = Rat(1) / v[p];
  for (size_t j = p; j < cols_; ++j) v[j] *= inv;
  // Keep previous rows reduced against the new one.
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][p];
    if (f == 0) continue;
    for (size_t j = p; j < cols_; ++j)
      if (v[j] != 0) rows_[r][j] -= f * v[j];
  }
  // Insert keeping pivot columns sorted.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Echelon::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

std::vector<size_t> Echelon::free_columns() const {
  std::vector<size_t> free;
  size_t r = 0;
  for (size_t c = 0; c < cols_; ++c) {
    if (r < pivots_.size() && pivots_[r] == c)
      ++r;
    else
      free.push_back(c);
  }
  return free;
}

std::vector<Rat> Echelon::quotient_coords(const std::vector<Rat>& v,
                                          const std::vector<size_t>& free_cols) const {
  std::vector<Rat> red = reduce(v);
  std::vector<Rat> q(free_cols.size());
  for (size_t i = 0; i < free_cols.size(); ++i) q[i] = red[free_cols[i]];
  return q;
}

}  // namespace camut
