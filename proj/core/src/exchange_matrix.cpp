#include "camut/exchange_matrix.hpp"

#include "camut/errors.hpp"

#include <sstream>

namespace camut {

namespace {

constexpr int kMaxTotal = 512;

void check_grid(const IntGrid& entries, int& n, int& m) {
  m = int(entries.size());
  if (m == 0) throw precondition_error("exchange matrix must have at least one row");
  n = int(entries[0].size());
  if (n == 0) throw precondition_error("exchange matrix must have at least one column");
  if (m < n) throw precondition_error("exchange matrix needs m_total >= n_mutable");
  if (m > kMaxTotal) throw precondition_error("exchange matrix too large (dense storage)");
  for (const auto& row : entries)
    if (int(row.size()) != n) throw precondition_error("exchange matrix rows have uneven length");
}

}  // namespace

std::optional<Symmetrizer> find_symmetrizer(const IntGrid& principal) {
  int n = int(principal.size());
  for (const auto& row : principal)
    if (int(row.size()) != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (principal[i][i] != 0) return std::nullopt;

  // b_ij n_j = -b_ji n_i pins the ratio n_j / n_i on every support edge.
  // Solve per connected component by propagation from the smallest index,
  // then verify every identity (cross edges included) and scale each
  // component to minimal positive integers.
  std::vector<Rat> val(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = ncomp;
    val[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (principal[i][j] == 0 && principal[j][i] == 0) continue;
        // Mixed zero pattern means no positive solution.
        if (principal[i][j] == 0 || principal[j][i] == 0) return std::nullopt;
        if (sgn(principal[i][j]) == sgn(principal[j][i])) return std::nullopt;
        Rat ratio = -Rat(principal[j][i]) / Rat(principal[i][j]);  // n_j / n_i
        if (comp[j] == -1) {
          comp[j] = ncomp;
          val[j] = val[i] * ratio;
          stack.push_back(j);
        } else if (val[j] != val[i] * ratio) {
          return std::nullopt;
        }
      }
    }
    ++ncomp;
  }

  Symmetrizer sym;
  sym.diag.assign(n, Int(1));
  for (int c = 0; c < ncomp; ++c) {
    Int den_lcm = 1;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) den_lcm = lcm(den_lcm, denominator(val[i]));
    Int num_gcd = 0;
    std::vector<Int> scaled(n);
    for (int i = 0; i < n; ++i) {
      if (comp[i] != c) continue;
      scaled[i] = Int(numerator(val[i]) * (den_lcm / denominator(val[i])));
      num_gcd = gcd(num_gcd, scaled[i]);
    }
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) sym.diag[i] = scaled[i] / num_gcd;
  }
  for (const Int& d : sym.diag)
    if (d <= 0) return std::nullopt;
  return sym;
}

bool symmetrizes(const IntGrid& principal, const Symmetrizer& sym) {
  int n = int(principal.size());
  if (int(sym.diag.size()) != n) return false;
  for (const Int& d : sym.diag)
    if (d <= 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (principal[i][j] * sym.diag[j] != -principal[j][i] * sym.diag[i]) return false;
  return true;
}

ExchangeMatrix ExchangeMatrix::make(IntGrid entries) {
  int n, m;
  check_grid(entries, n, m);
  IntGrid principal(entries.begin(), entries.begin() + n);
  auto sym = find_symmetrizer(principal);
  if (!sym)
    throw precondition_error("principal part is not skew-symmetrizable");
  ExchangeMatrix b;
  b.n_ = n;
  b.m_ = m;
  b.e_.reserve(size_t(m) * n);
  for (auto& row : entries)
    for (auto& x : row) b.e_.push_back(std::move(x));
  b.sym_ = std::move(*sym);
  return b;
}

IntGrid ExchangeMatrix::grid() const {
  IntGrid g(m_, std::vector<Int>(n_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) g[i][j] = at(i, j);
  return g;
}

ExchangeMatrix ExchangeMatrix::permute_mutable(const std::vector<int>& new_to_old) const {
  if (int(new_to_old.size()) != n_)
    throw precondition_error("permutation length must equal n_mutable");
  IntGrid g(m_, std::vector<Int>(n_));
  for (int i = 0; i < m_; ++i) {
    int oi = i < n_ ? new_to_old[i] : i;
    for (int j = 0; j < n_; ++j) g[i][j] = at(oi, new_to_old[j]);
  }
  return make(std::move(g));
}

std::string ExchangeMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < m_; ++i) {
    if (i) out << ";";
    out << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) out << ",";
      out << at(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  if (k < 1 || k > b.n_mutable())
    throw precondition_error("mutation direction out of range");
  int k0 = k - 1;
  IntGrid g(b.m_total(), std::vector<Int>(b.n_mutable()));
  for (int i = 0; i < b.m_total(); ++i) {
    for (int j = 0; j < b.n_mutable(); ++j) {
      if (i == k0 || j == k0) {
        g[i][j] = -b.at(i, j);
      } else {
        const Int& bik = b.at(i, k0);
        const Int& bkj = b.at(k0, j);
        g[i][j] = b.at(i, j) + common_sign(bik, bkj) * bik * bkj;
      }
    }
  }
  return ExchangeMatrix::make(std::move(g));
}

}  // namespace camut
