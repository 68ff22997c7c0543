// Slow, independent reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/spectra.hpp"

namespace oracle {

using distspec::Graph;

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Random spanning tree by attaching each vertex to an earlier one, plus each
/// remaining pair with probability p, then a random relabelling.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) g.add_edge(u, v);
  return relabel(g, random_permutation(n, rng));
}

inline std::vector<std::vector<int>> all_pairs_floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int brute_force_alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool independent = true;
    for (int u = 0; u < n && independent; ++u)
      for (int v = u + 1; v < n && independent; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) independent = false;
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

/// Backtracking isomorphism test, degrees must match along the mapping.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

/// Rounded sorted degree sequence and distance spectrum (connected graphs) as a bucket key.
inline std::vector<long long> fingerprint(const Graph& g) {
  std::vector<long long> key;
  for (int v = 0; v < g.order(); ++v) key.push_back(g.degree(v));
  std::sort(key.begin(), key.end());
  key.push_back(g.size());
  if (distspec::is_connected(g))
    for (double x : distspec::distance_spectrum(g).values) key.push_back(std::llround(x * 1e6));
  return key;
}

/// Isomorphism classes by fingerprint bucketing plus pairwise exhaustive isomorphism.
class ClassSet {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[fingerprint(g)];
    for (const auto& h : bucket)
      if (isomorphic(g, h)) return false;
    bucket.push_back(g);
    ++count_;
    return true;
  }
  std::size_t size() const { return count_; }
  bool contains(const Graph& g) const {
    auto it = buckets_.find(fingerprint(g));
    if (it == buckets_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const Graph& h) { return isomorphic(g, h); });
  }

 private:
  std::map<std::vector<long long>, std::vector<Graph>> buckets_;
  std::size_t count_ = 0;
};

/// Trees on n vertices grown by attaching a leaf to every vertex of every
/// tree on n - 1 vertices.
inline std::vector<Graph> trees_by_leaf_extension(int n) {
  std::vector<Graph> level = {Graph(1)};
  for (int order = 2; order <= n; ++order) {
    ClassSet seen;
    std::vector<Graph> next;
    for (const auto& t : level) {
      for (int v = 0; v < t.order(); ++v) {
        Graph g(order);
        for (auto [a, b] : t.edges()) g.add_edge(a, b);
        g.add_edge(v, order - 1);
        if (seen.insert(g)) next.push_back(g);
      }
    }
    level = std::move(next);
  }
  return level;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Eigenvalues of the distance matrix of C_n from the circulant formula.
inline std::vector<double> cycle_distance_eigenvalues(int n) {
  std::vector<double> out;
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int t = 1; t < n; ++t) sum += std::min(t, n - t) * std::cos(2.0 * std::acos(-1.0) * j * t / n);
    out.push_back(sum);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Sum of the k largest eigenvalues recomputed by inertia bisection.
inline double sum_top_k_by_inertia(const distspec::SymMatrix& a, int k) {
  double total = 0.0;
  for (int i = 1; i <= k; ++i) total += distspec::kth_largest_by_inertia(a, i);
  return total;
}

}  // namespace oracle
