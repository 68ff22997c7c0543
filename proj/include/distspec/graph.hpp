#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distspec {

inline constexpr int kMaxOrder = 512;

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitset rows.
class Graph {
 public:
  using Row = std::bitset<kMaxOrder>;

  /// Edgeless graph on n vertices; 1 <= n <= kMaxOrder.
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const { return adj_[u][v]; }
  const Row& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].count()); }

  /// Adds uv. Loops are rejected; adding an existing edge is a no-op.
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  int m_ = 0;
  std::vector<Row> adj_;
};

/// Shortest-path lengths of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {}

  int order() const noexcept { return n_; }
  int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<int>& entries() const noexcept { return d_; }

  int diameter() const;
  /// Sum of d_ij over unordered pairs.
  std::int64_t wiener_index() const;

 private:
  int n_;
  std::vector<int> d_;
};

/// Two-colouring of a bipartite graph; part1 is never larger than part2.
struct Bipartition {
  std::vector<int> part1;
  std::vector<int> part2;

  int r() const noexcept { return static_cast<int>(part1.size()); }
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  int second_min_degree = 0;
  double average_degree = 0.0;
};

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// BFS from every vertex. Throws Disconnected with an unreachable pair.
DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);
std::int64_t wiener_index(const Graph& g);

std::int64_t triangle_count(const Graph& g);
/// Number of triangles through u, i.e. the edge count of G[N(u)].
std::int64_t triangle_count_at(const Graph& g, int u);

inline constexpr int kMaxExactIndependenceOrder = 64;
/// Exact alpha(G) by bitset branch-and-bound; OrderTooLarge beyond 64 vertices.
int independence_number(const Graph& g);

/// BFS two-colouring, or nullopt when g has an odd cycle. Throws Disconnected.
std::optional<Bipartition> bipartition(const Graph& g);

/// Throws InvalidArgument when n < 2 (second minimum degree undefined).
DegreeStats degree_stats(const Graph& g);

Graph complement(const Graph& g);

}  // namespace distspec
