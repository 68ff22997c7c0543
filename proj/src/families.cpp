#include "distspec/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <unordered_set>

#include "distspec/errors.hpp"

namespace distspec {

void FamilySpec::validate() const {
  switch (kind) {
    case Family::complete:
    case Family::path:
      if (n < 1) throw InvalidArgument("family needs n >= 1");
      break;
    case Family::star:
      if (n < 2) throw InvalidArgument("star needs n >= 2");
      break;
    case Family::cycle:
      if (n < 3) throw InvalidArgument("cycle needs n >= 3");
      break;
    case Family::complete_bipartite:
      if (r < 1 || r > n - r) throw InvalidArgument("complete bipartite needs 1 <= r <= n - r");
      break;
  }
  if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
}

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
  }
  return "unknown";
}

Family family_from_name(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite" || name == "bipartite") return Family::complete_bipartite;
  if (name == "star") return Family::star;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

Graph build(const FamilySpec& spec) {
  spec.validate();
  Graph g(spec.n);
  switch (spec.kind) {
    case Family::complete:
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) g.add_edge(u, v);
      break;
    case Family::complete_bipartite:
    case Family::star: {
      const int r = spec.kind == Family::star ? 1 : spec.r;
      for (int u = 0; u < r; ++u)
        for (int v = r; v < spec.n; ++v) g.add_edge(u, v);
      break;
    }
    case Family::path:
      for (int v = 1; v < spec.n; ++v) g.add_edge(v - 1, v);
      break;
    case Family::cycle:
      for (int v = 1; v < spec.n; ++v) g.add_edge(v - 1, v);
      g.add_edge(spec.n - 1, 0);
      break;
  }
  return g;
}

Spectrum closed_form_distance_spectrum(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  Spectrum out;
  out.values.reserve(static_cast<std::size_t>(n));
  switch (spec.kind) {
    case Family::complete:
      out.values.push_back(n - 1);
      out.values.insert(out.values.end(), static_cast<std::size_t>(n - 1), -1.0);
      break;
    case Family::complete_bipartite:
    case Family::star: {
      // equitable quotient [[2(r-1), s], [r, 2(s-1)]]
      const double r = spec.kind == Family::star ? 1 : spec.r;
      const double s = n - r;
      const double half_trace = (r - 1) + (s - 1);
      const double det = 4.0 * (r - 1) * (s - 1) - r * s;
      const double root = std::sqrt(half_trace * half_trace - det);
      out.values.push_back(half_trace + root);
      out.values.push_back(half_trace - root);
      out.values.insert(out.values.end(), static_cast<std::size_t>(n - 2), -2.0);
      break;
    }
    case Family::cycle:
      for (int j = 0; j < n; ++j) {
        double value = 0.0;
        for (int t = 1; t < n; ++t)
          value += std::min(t, n - t) * std::cos(2.0 * std::numbers::pi * j * t / n);
        out.values.push_back(value);
      }
      break;
    case Family::path:
      throw UnsupportedFamily("paths have no closed-form distance spectrum; use the eigensolver");
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

TanhRoot solve_tanh_root() {
  auto f = [](double a) { return a * std::tanh(a) - 1.0; };
  double lo = 1.0, hi = 1.5;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double a = 0.5 * (lo + hi);
  for (int iter = 0; iter < 50 && std::abs(f(a)) > 1e-15; ++iter) {
    const double th = std::tanh(a);
    const double slope = th + a * (1.0 - th * th);
    const double next = a - f(a) / slope;
    if (next == a) break;
    a = next;
  }
  return TanhRoot{a, std::abs(f(a))};
}

double path_lambda1_approx(int n) {
  if (n < 2) throw InvalidArgument("path approximation needs n >= 2");
  const double a = solve_tanh_root().a;
  const double a2 = a * a;
  const double nn = static_cast<double>(n) * n;
  return nn / (2.0 * a2) - (2.0 + a2) / (6.0 * a2);
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

using Mask = std::uint32_t;

struct SmallGraph {
  int n = 0;
  std::array<Mask, kMaxCanonicalOrder> adj{};
};

SmallGraph to_small(const Graph& g) {
  SmallGraph s;
  s.n = g.order();
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (g.adjacent(u, v)) s.adj[u] |= Mask{1} << v;
  return s;
}

// Iterated degree refinement. Colours are ranks of (colour, neighbour colour
// histogram) signatures, so the final colouring is isomorphism invariant.
std::array<int, kMaxCanonicalOrder> refine(const SmallGraph& g) {
  const int n = g.n;
  using Signature = std::array<std::uint8_t, kMaxCanonicalOrder + 1>;
  std::array<int, kMaxCanonicalOrder> colour{};
  for (int v = 0; v < n; ++v) colour[v] = std::popcount(g.adj[v]);

  int classes = -1;
  while (true) {
    std::array<Signature, kMaxCanonicalOrder> sig{};
    for (int v = 0; v < n; ++v) {
      sig[v][0] = static_cast<std::uint8_t>(colour[v]);
      for (Mask m = g.adj[v]; m != 0; m &= m - 1) ++sig[v][1 + colour[std::countr_zero(m)]];
    }
    std::array<int, kMaxCanonicalOrder> idx{};
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) { return sig[a] < sig[b]; });
    std::array<int, kMaxCanonicalOrder> next{};
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    colour = next;
    if (rank + 1 == classes || rank + 1 == n) break;
    classes = rank + 1;
  }
  return colour;
}

struct PartialLabelling {
  std::array<std::int8_t, kMaxCanonicalOrder> placed{};
  Mask used = 0;
};

std::array<int, kMaxCanonicalOrder> canonical_order(const SmallGraph& g) {
  const int n = g.n;
  const auto colour = refine(g);
  std::array<int, kMaxCanonicalOrder> slot{};
  for (int v = 0; v < n; ++v) slot[v] = colour[v];
  std::sort(slot.begin(), slot.begin() + n);

  std::vector<PartialLabelling> frontier(1), next;
  for (int j = 0; j < n; ++j) {
    Mask cell = 0;
    for (int v = 0; v < n; ++v)
      if (colour[v] == slot[j]) cell |= Mask{1} << v;
    std::uint32_t best = UINT32_MAX;
    next.clear();
    for (const auto& state : frontier) {
      Mask tried = 0;
      for (Mask m = cell & ~state.used; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        bool twin = false;
        for (Mask t = tried; t != 0 && !twin; t &= t - 1) {
          const int u = std::countr_zero(t);
          twin = (g.adj[u] & ~(Mask{1} << v)) == (g.adj[v] & ~(Mask{1} << u));
        }
        tried |= Mask{1} << v;
        if (twin) continue;
        std::uint32_t column = 0;
        for (int i = 0; i < j; ++i) column = (column << 1) | ((g.adj[v] >> state.placed[i]) & 1u);
        if (column > best) continue;
        if (column < best) {
          best = column;
          next.clear();
        }
        PartialLabelling ext = state;
        ext.placed[j] = static_cast<std::int8_t>(v);
        ext.used |= Mask{1} << v;
        next.push_back(ext);
      }
    }
    std::swap(frontier, next);
  }
  std::array<int, kMaxCanonicalOrder> order{};
  for (int i = 0; i < n; ++i) order[i] = frontier.front().placed[i];
  return order;
}

Graph relabel(const SmallGraph& g, const std::array<int, kMaxCanonicalOrder>& order) {
  Graph out(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if ((g.adj[order[i]] >> order[j]) & 1u) out.add_edge(i, j);
  return out;
}


// AHU code of a small tree packed into bits ('(' = 1, ')' = 0), children
// ordered by (length, bits). Rooted at the centre; a bicentral tree takes the
// smaller rooting. Equal keys iff isomorphic trees.
struct TreeCode {
  std::uint64_t bits = 0;
  int length = 0;
  auto operator<=>(const TreeCode&) const = default;
};

using SmallAdjacency = std::array<std::vector<int>, kMaxTreeEnumerationOrder>;

TreeCode rooted_code(const SmallAdjacency& adj, int v, int parent) {
  std::array<TreeCode, kMaxTreeEnumerationOrder> children;
  int count = 0;
  for (int u : adj[v])
    if (u != parent) children[count++] = rooted_code(adj, u, v);
  std::sort(children.begin(), children.begin() + count);
  TreeCode code{1, 1};
  for (int i = 0; i < count; ++i) {
    code.bits = (code.bits << children[i].length) | children[i].bits;
    code.length += children[i].length;
  }
  return {code.bits << 1, code.length + 1};
}

TreeCode pruefer_tree_key(const std::vector<int>& seq, SmallAdjacency& adj) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::array<int, kMaxTreeEnumerationOrder> degree{};
  for (int v = 0; v < n; ++v) {
    adj[v].clear();
    degree[v] = 1;
  }
  for (int x : seq) ++degree[x];
  auto link = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  std::array<int, kMaxTreeEnumerationOrder> remaining = degree;
  for (int x : seq) {
    int leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    link(leaf, x);
    --remaining[leaf];
    --remaining[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (remaining[v] != 1) continue;
    if (u < 0) u = v;
    else { link(u, v); break; }
  }

  // peel leaves down to the centre
  std::array<int, kMaxTreeEnumerationOrder> layer{}, next{};
  int layer_size = 0;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) layer[layer_size++] = v;
  for (int left = n; left > 2;) {
    left -= layer_size;
    int next_size = 0;
    for (int i = 0; i < layer_size; ++i)
      for (int w : adj[layer[i]])
        if (--degree[w] == 1) next[next_size++] = w;
    layer = next;
    layer_size = next_size;
  }
  TreeCode best = rooted_code(adj, layer[0], -1);
  if (layer_size > 1) best = std::min(best, rooted_code(adj, layer[1], -1));
  return best;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw OrderTooLarge(g.order(), kMaxCanonicalOrder);
  const SmallGraph s = to_small(g);
  return relabel(s, canonical_order(s));
}

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_form(g)); }

// ---------------------------------------------------------------------------
// Enumeration

Graph tree_from_pruefer(const std::vector<int>& sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw InvalidArgument("Pruefer entry out of range");
    ++degree[x];
  }
  Graph t(n);
  for (int x : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    t.add_edge(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      t.add_edge(u, v);
      break;
    }
  }
  return t;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 2) throw InvalidArgument("tree enumeration needs n >= 2");
  if (n > kMaxTreeEnumerationOrder) throw OrderTooLarge(n, kMaxTreeEnumerationOrder);
  std::vector<Graph> out;
  std::unordered_set<std::uint64_t> seen;
  SmallAdjacency adj;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    const TreeCode key = pruefer_tree_key(seq, adj);
    if (seen.insert(key.bits).second) out.push_back(canonical_form(tree_from_pruefer(seq)));
    // odometer increment
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) throw InvalidArgument("graph enumeration needs n >= 1");
  if (n > kMaxGraphEnumerationOrder) throw OrderTooLarge(n, kMaxGraphEnumerationOrder);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  const std::uint32_t subsets = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1u) g.add_edge(pairs[e].first, pairs[e].second);
    if (!is_connected(g)) continue;
    Graph canon = canonical_form(g);
    if (seen.insert(encode_graph6(canon)).second) out.push_back(std::move(canon));
  }
  return out;
}

}  // namespace distspec
