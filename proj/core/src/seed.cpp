#include "camut/seed.hpp"

#include "camut/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace camut {

namespace {

constexpr long kMaxMutationExponent = 1000000;

LaurentPoly ambient_variable(const Seed& s, int i) {  // i 1-based in 1..m
  if (i <= s.n()) return s.cluster[i - 1];
  return LaurentPoly::variable(s.m(), i - 1);
}

}  // namespace

Seed initial_seed(const ExchangeMatrix& b, std::set<int> inverted) {
  for (int c : inverted)
    if (c <= b.n_mutable() || c > b.m_total())
      throw precondition_error("inverted set must lie in the coefficient range n+1..m");
  Seed s{b, {}, std::move(inverted)};
  s.cluster.reserve(b.n_mutable());
  for (int i = 0; i < b.n_mutable(); ++i)
    s.cluster.push_back(LaurentPoly::variable(b.m_total(), i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  if (k < 1 || k > s.n()) throw precondition_error("mutation direction out of range");
  int m = s.m();
  LaurentPoly pos = LaurentPoly::constant(m, 1);
  LaurentPoly neg = LaurentPoly::constant(m, 1);
  for (int i = 1; i <= m; ++i) {
    const Int& bik = s.matrix.at(i - 1, k - 1);
    if (bik == 0) continue;
    if (abs(bik) > kMaxMutationExponent)
      throw resource_error("exchange exponent exceeds resource limit");
    long e = bik.convert_to<long>();
    if (e > 0)
      pos = pos * ambient_variable(s, i).pow(e);
    else
      neg = neg * ambient_variable(s, i).pow(-e);
  }
  Seed out{mutate_matrix(s.matrix, k), s.cluster, s.inverted};
  out.cluster[k - 1] = (pos + neg).div_exact(s.cluster[k - 1]);
  return out;
}

CanonicalSeed canonical_form(const Seed& s) {
  int n = s.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&s](int a, int b) {
    return LaurentPoly::compare(s.cluster[a], s.cluster[b]) < 0;
  });

  Seed canon{s.matrix.permute_mutable(order), {}, s.inverted};
  canon.cluster.reserve(n);
  for (int i = 0; i < n; ++i) canon.cluster.push_back(s.cluster[order[i]]);

  std::ostringstream key;
  key << n << "|" << s.m() << "|" << canon.matrix.to_string() << "|";
  for (const auto& x : canon.cluster) key << x.to_string("u") << ";";
  key << "|";
  for (int c : canon.inverted) key << c << ",";

  std::string k = key.str();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : k) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return CanonicalSeed{std::move(canon), std::move(k), h};
}

namespace {

int thread_budget() {
  const char* env = std::getenv("CLUSTER_THREADS");
  if (!env) return 1;
  int t = std::atoi(env);
  if (t < 1) return 1;
  return std::min(t, 64);
}

}  // namespace

ExchangeGraph explore(const Seed& s0, int max_depth, int max_seeds) {
  if (max_depth <= 0 || max_seeds <= 0)
    throw precondition_error("exploration limits must be positive");

  int n = s0.n();
  CanonicalSeed root = canonical_form(s0);

  std::map<std::string, int> id_by_key;
  std::vector<CanonicalSeed> nodes;
  std::vector<std::array<int, 3>> directed;  // (from, k, to)
  std::vector<int> frontier;

  id_by_key.emplace(root.key, 0);
  nodes.push_back(std::move(root));
  frontier.push_back(0);

  bool truncated = false;
  int depth = 0;
  int threads = thread_budget();

  while (!frontier.empty() && depth < max_depth && !truncated) {
    ++depth;
    // All mutations of the layer are pure; compute them (possibly in
    // parallel), then merge in fixed (node, direction) order so the result
    // never depends on scheduling.
    std::vector<CanonicalSeed> children(frontier.size() * size_t(n));
    auto expand = [&](size_t begin, size_t end) {
      for (size_t t = begin; t < end; ++t) {
        int node = frontier[t / n];
        int k = int(t % n) + 1;
        children[t] = canonical_form(mutate_seed(nodes[node].seed, k));
      }
    };
    size_t tasks = children.size();
    if (threads > 1 && tasks > 8) {
      size_t workers = std::min<size_t>(threads, tasks);
      std::vector<std::thread> pool;
      size_t chunk = (tasks + workers - 1) / workers;
      for (size_t w = 0; w < workers; ++w) {
        size_t b = w * chunk, e = std::min(tasks, b + chunk);
        if (b < e) pool.emplace_back(expand, b, e);
      }
      for (auto& th : pool) th.join();
    } else {
      expand(0, tasks);
    }

    std::vector<int> next;
    for (size_t t = 0; t < tasks; ++t) {
      int node = frontier[t / n];
      int k = int(t % n) + 1;
      CanonicalSeed& child = children[t];
      auto it = id_by_key.find(child.key);
      int child_id;
      if (it != id_by_key.end()) {
        child_id = it->second;
      } else {
        if (int(nodes.size()) >= max_seeds) {
          truncated = true;
          continue;
        }
        child_id = int(nodes.size());
        id_by_key.emplace(child.key, child_id);
        nodes.push_back(std::move(child));
        next.push_back(child_id);
      }
      directed.push_back({node, k, child_id});
    }
    frontier = std::move(next);
  }

  ExchangeGraph g;
  g.complete = !truncated && frontier.empty();
  g.depth_reached = depth;

  // Sort nodes by canonical key so output is independent of traversal order.
  std::vector<int> by_key(nodes.size());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(),
            [&nodes](int a, int b) { return nodes[a].key < nodes[b].key; });
  std::vector<int> new_id(nodes.size());
  for (size_t i = 0; i < by_key.size(); ++i) new_id[by_key[i]] = int(i);
  g.nodes.reserve(nodes.size());
  for (int old : by_key) g.nodes.push_back(std::move(nodes[old]));

  std::vector<bool> expanded(g.nodes.size(), false);
  for (const auto& [from, k, to] : directed) {
    (void)k;
    (void)to;
    expanded[new_id[from]] = true;
  }
  std::set<std::array<int, 3>> undirected;
  for (const auto& [from, k, to] : directed) {
    int a = new_id[from], b = new_id[to];
    if (a <= b)
      undirected.insert({a, b, k});
    else if (!expanded[b])  // partner direction never traversed (truncation)
      undirected.insert({b, a, k});
  }
  g.edges.assign(undirected.begin(), undirected.end());

  std::set<std::string> vars;
  for (const auto& node : g.nodes)
    for (const auto& x : node.seed.cluster) vars.insert(x.to_string("u"));
  g.variables.assign(vars.begin(), vars.end());
  return g;
}

FiniteTypeResult is_finite_type(const ExchangeMatrix& b, int cap) {
  if (cap <= 0) throw precondition_error("cap must be positive");
  ExchangeGraph g = explore(initial_seed(b), cap, cap);
  FiniteTypeResult r;
  r.seeds_found = long(g.seed_count());
  if (g.complete) r.variable_count = long(g.variable_count());
  return r;
}

bool verify_subcluster(const Seed& parent, const std::vector<int>& sigma, int p,
                       const std::set<int>& inverted_sub) {
  int n = parent.n(), m = parent.m();
  int q = int(sigma.size());
  if (q < 1 || q > m) throw precondition_error("sigma must have between 1 and m entries");
  if (p < 1 || p > q) throw precondition_error("sub-mutable count p must satisfy 1 <= p <= q");
  std::set<int> image;
  for (int v : sigma) {
    if (v < 1 || v > m) throw precondition_error("sigma image out of range");
    if (!image.insert(v).second) throw precondition_error("sigma must be injective");
  }
  for (int i = 0; i < p; ++i)
    if (sigma[i] > n) throw precondition_error("the first p images of sigma must be mutable");
  std::set<int> sub_coeffs(sigma.begin() + p, sigma.end());
  for (int c : inverted_sub)
    if (!sub_coeffs.count(c))
      throw precondition_error("inverted_sub must be contained in the sub-coefficient set");

  // scls2: every exchange partner of a sub-mutable variable is itself a
  // sub-variable, so the sub-matrix b'_ij = b_{sigma_i sigma_j} captures the
  // whole exchange relation.
  for (int i = 0; i < p; ++i) {
    int col = sigma[i];
    for (int s = 1; s <= m; ++s)
      if (parent.matrix.at(s - 1, col - 1) != 0 && !image.count(s)) return false;
  }
  // scls3: inverted parent coefficients that survive stay inverted.
  for (int c : parent.inverted)
    if (sub_coeffs.count(c) && !inverted_sub.count(c)) return false;
  return true;
}

}  // namespace camut
