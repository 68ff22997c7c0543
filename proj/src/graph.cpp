#include "distspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "distspec/errors.hpp"

namespace distspec {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("graph order must be at least 1");
  if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("loops are not allowed");
  if (adj_[u][v]) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

int DistanceMatrix::diameter() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

std::int64_t DistanceMatrix::wiener_index() const {
  std::int64_t total = std::accumulate(d_.begin(), d_.end(), std::int64_t{0});
  return total / 2;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr char kHeader[] = ">>graph6<<";

int decode_char(std::string_view s, std::size_t pos) {
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError(pos, "byte outside [63,126]");
  return c - 63;
}

std::size_t edge_bytes(std::int64_t n) {
  return static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  if (text.substr(0, sizeof(kHeader) - 1) == kHeader) pos = sizeof(kHeader) - 1;
  if (pos >= text.size()) throw ParseError(pos, "missing order byte");

  std::int64_t n = 0;
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = decode_char(text, pos);
    ++pos;
  } else {
    int width = 3;
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      width = 6;
      ++pos;
    }
    if (pos + width > text.size()) throw ParseError(text.size(), "truncated order header");
    for (int i = 0; i < width; ++i) n = (n << 6) | decode_char(text, pos + i);
    pos += width;
  }
  if (n == 0) throw ParseError(pos - 1, "graph has no vertices");
  if (n > kMaxOrder) throw ParseError(pos - 1, "order " + std::to_string(n) + " exceeds 512");

  const std::size_t body = text.size() - pos;
  const std::size_t expected = edge_bytes(n);
  if (body != expected) {
    throw ParseError(pos + std::min(body, expected),
                     "expected " + std::to_string(expected) + " edge bytes, found " +
                         std::to_string(body));
  }

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = decode_char(text, pos + bit / 6);
      if (byte & (1 << (5 - bit % 6))) g.add_edge(u, v);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + bit / 6;
    int byte = decode_char(text, last);
    int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (byte & pad_mask) throw ParseError(last, "nonzero padding bits");
  }
  // bytes between the ones touched above still need range validation
  for (std::size_t i = pos; i < text.size(); ++i) decode_char(text, i);
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// distances

namespace {

// Levels of a BFS from s; unreachable vertices get -1.
void bfs_levels(const Graph& g, int s, int* dist) {
  const int n = g.order();
  std::fill(dist, dist + n, -1);
  Graph::Row visited, frontier;
  visited.set(s);
  frontier.set(s);
  dist[s] = 0;
  for (int level = 1; frontier.any(); ++level) {
    Graph::Row next;
    for (auto u = frontier._Find_first(); u < frontier.size(); u = frontier._Find_next(u))
      next |= g.neighbors(static_cast<int>(u));
    next &= ~visited;
    visited |= next;
    for (auto v = next._Find_first(); v < next.size(); v = next._Find_next(v)) dist[v] = level;
    frontier = next;
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  bfs_levels(g, 0, dist.data());
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    bfs_levels(g, s, row);
    for (int t = 0; t < n; ++t)
      if (row[t] < 0) throw Disconnected(s, t);
  }
  return DistanceMatrix(n, std::move(d));
}

int diameter(const Graph& g) { return distance_matrix(g).diameter(); }

std::int64_t wiener_index(const Graph& g) { return distance_matrix(g).wiener_index(); }

// ---------------------------------------------------------------------------
// combinatorial invariants

std::int64_t triangle_count_at(const Graph& g, int u) {
  const auto& nu = g.neighbors(u);
  std::int64_t twice = 0;
  for (auto v = nu._Find_first(); v < nu.size(); v = nu._Find_next(v))
    twice += static_cast<std::int64_t>((nu & g.neighbors(static_cast<int>(v))).count());
  return twice / 2;
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) total += triangle_count_at(g, u);
  return total / 3;
}

namespace {

// Maximum clique in the complement graph `h`, with greedy colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> h) : h_(std::move(h)) {}

  int run(std::uint64_t all) {
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t candidates, int size) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    std::vector<std::pair<int, int>> order;  // (vertex, colour)
    std::uint64_t uncoloured = candidates;
    for (int colour = 1; uncoloured != 0; ++colour) {
      std::uint64_t q = uncoloured;
      while (q != 0) {
        int v = std::countr_zero(q);
        q &= ~h_[v] & ~(std::uint64_t{1} << v);
        uncoloured &= ~(std::uint64_t{1} << v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, colour] = *it;
      if (size + colour <= best_) return;
      expand(candidates & h_[v], size + 1);
      candidates &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> h_;
  int best_ = 0;
};

}  // namespace

int independence_number(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExactIndependenceOrder) throw OrderTooLarge(n, kMaxExactIndependenceOrder);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> h(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = 0;
    for (int v = 0; v < n; ++v)
      if (v != u && !g.adjacent(u, v)) row |= std::uint64_t{1} << v;
    h[u] = row;
  }
  return CliqueSearch(std::move(h)).run(all);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  bfs_levels(g, 0, dist.data());
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0) throw Disconnected(0, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) && dist[u] % 2 == dist[v] % 2) return std::nullopt;
  Bipartition b;
  for (int v = 0; v < n; ++v) (dist[v] % 2 == 0 ? b.part1 : b.part2).push_back(v);
  if (b.part1.size() > b.part2.size()) std::swap(b.part1, b.part2);
  return b;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidArgument("degree statistics need at least two vertices");
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  return DegreeStats{deg.back(), deg[0], deg[1], 2.0 * g.size() / n};
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

}  // namespace distspec
