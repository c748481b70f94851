#ifndef CAMUT_SEED_HPP
#define CAMUT_SEED_HPP

#include "camut/exchange_matrix.hpp"
#include "camut/laurent.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace camut {

/// A seed of a geometric-type cluster algebra in the ambient field
/// Q(u_1..u_m): the n mutable cluster variables expressed as integer Laurent
/// polynomials in the initial variables, the m x n exchange matrix, and the
/// set of inverted coefficients. The m-n coefficient variables are the fixed
/// monomials u_{n+1}..u_m and are not stored.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> cluster;
  std::set<int> inverted;  // 1-based indices in n+1..m

  int n() const { return matrix.n_mutable(); }
  int m() const { return matrix.m_total(); }
  bool operator==(const Seed&) const = default;
};

Seed initial_seed(const ExchangeMatrix& b, std::set<int> inverted = {});

/// Exchange relation: x'_k x_k = prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0}
/// x_i^{-b_ik}, products over all rows including frozen ones. The division
/// is exact by the Laurent phenomenon; failure raises laurent_violation.
Seed mutate_seed(const Seed& s, int k);  // k 1-based

/// Seed identity is up to permutation of mutable indices with simultaneous
/// matrix permutation; frozen indices stay fixed.
struct CanonicalSeed {
  Seed seed;
  std::string key;  // canonical serialization; equal seeds get equal keys
  uint64_t hash;

  bool operator<(const CanonicalSeed& o) const { return key < o.key; }
};

CanonicalSeed canonical_form(const Seed& s);

struct ExchangeGraph {
  std::vector<CanonicalSeed> nodes;            // sorted by canonical key
  std::vector<std::array<int, 3>> edges;       // undirected (a, b, k), a <= b, k 1-based
  std::vector<std::string> variables;          // distinct cluster variables, canonical text
  bool complete = false;
  int depth_reached = 0;

  size_t seed_count() const { return nodes.size(); }
  size_t variable_count() const { return variables.size(); }
};

/// Breadth-first closure of s0 under all mutations, deduplicated by
/// canonical form. Stops at max_depth layers or when max_seeds distinct
/// seeds have been found; `complete` reports whether the frontier emptied.
/// CLUSTER_THREADS bounds worker threads; output is schedule-independent.
ExchangeGraph explore(const Seed& s0, int max_depth, int max_seeds);

struct FiniteTypeResult {
  std::optional<long> variable_count;  // engaged iff finite within cap
  long seeds_found = 0;
  bool finite() const { return variable_count.has_value(); }
};

FiniteTypeResult is_finite_type(const ExchangeMatrix& b, int cap);

/// Subcluster-seed verification: sigma maps sub indices 1..q injectively
/// into parent indices, the first p of them into the parent's mutable range.
/// Checks that mutable sub-columns are supported on the image of sigma and
/// that parent-inverted coefficients carried over remain inverted.
bool verify_subcluster(const Seed& parent, const std::vector<int>& sigma, int p,
                       const std::set<int>& inverted_sub);

}  // namespace camut

#endif
