#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

/// Absolute tolerance for "inequality holds".
inline constexpr double kHoldTolerance = 1e-9;
/// Absolute tolerance for "inequality is attained".
inline constexpr double kEqualityTolerance = 1e-7;

/// One inequality evaluated on one graph.
///
/// `slack` is oriented so that slack >= 0 means the inequality holds. When the
/// preconditions of the bound are not met, `applicable` is false and
/// lhs/rhs/slack are empty. `strict` is set only for bounds stated as strict
/// inequalities and records whether the slack cleared the equality tolerance.
/// `report_only` marks bounds whose statement needs "n sufficiently large":
/// a failure there is a finding, not an error.
struct BoundReport {
  std::string bound_id;
  std::string graph6;
  int n = 0;
  std::optional<int> k;
  std::optional<int> s;
  bool applicable = true;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> slack;
  bool holds = true;
  bool equality = false;
  std::optional<bool> strict;
  bool report_only = false;
  std::vector<std::pair<std::string, double>> facts;
  std::string finding;

  std::optional<double> fact(std::string_view name) const;
  /// holds == false on a bound that is not in report mode.
  bool is_violation() const { return applicable && !holds && !report_only; }
};

/// Per-graph cache of the invariants the checks share. Not thread-safe;
/// use one instance per worker.
class GraphProfile {
 public:
  explicit GraphProfile(Graph g);

  const Graph& graph() const noexcept { return g_; }
  int order() const noexcept { return g_.order(); }
  const std::string& graph6();
  const DistanceMatrix& distances();
  int diameter() { return distances().diameter(); }
  std::int64_t wiener_index() { return distances().wiener_index(); }
  const Spectrum& distance_spectrum();
  const Spectrum& laplacian_spectrum();
  int independence_number();
  const DegreeStats& degree_stats();
  const std::optional<Bipartition>& bipartition();
  bool is_tree();
  bool is_complete() const;
  bool is_star() const;
  bool is_balanced_complete_bipartite();
  bool is_regular() const;

 private:
  Graph g_;
  std::optional<std::string> graph6_;
  std::optional<DistanceMatrix> distances_;
  std::optional<Spectrum> dspec_;
  std::optional<Spectrum> lspec_;
  std::optional<int> alpha_;
  std::optional<DegreeStats> degrees_;
  std::optional<std::optional<Bipartition>> bipartition_;
  std::optional<bool> tree_;
};

// ---------------------------------------------------------------------------
// Ramsey / Moore thresholds

struct RamseyValue {
  std::int64_t value = 0;
  bool exact = true;  // false: binomial upper bound C(2t-2, t-1)
};

/// Diagonal Ramsey number R(t,t): exact for t <= 4, upper bound beyond. 1 <= t <= 30.
RamseyValue diagonal_ramsey(int t);

/// 1 + l + l(l-1) + ... + l(l-1)^(d-1), as a decimal string.
std::string moore_sum(std::int64_t l, int d);

struct MooreThreshold {
  std::int64_t l = 0;   // R(k-1, k-1) - 1
  int d = 0;            // 2k
  std::string n0;       // exact decimal value of the Moore sum
  double n0_approx = 0.0;
  bool estimate = false;  // true when the Ramsey value is only an upper bound
};

/// Order beyond which every connected graph has lambda_k(D) >= -2. k >= 2.
MooreThreshold moore_threshold(int k);

// ---------------------------------------------------------------------------
// Checks. Every overload taking a Graph builds a fresh GraphProfile.

BoundReport check_sk_lower_general(GraphProfile& p, int k);
BoundReport check_sk_lower_tree(GraphProfile& p, int k);
BoundReport check_lambda2_diameter(GraphProfile& p);
std::vector<BoundReport> check_lambda2_triangles(GraphProfile& p, int s);
BoundReport check_turan_chain(GraphProfile& p, int s);
BoundReport check_path_dominance(GraphProfile& p, int k);
BoundReport check_lambda1_wiener(GraphProfile& p);
BoundReport check_bipartite_lambda1(GraphProfile& p);
BoundReport check_merris_interlacing(GraphProfile& p);
BoundReport check_merris_half_diameter(GraphProfile& p);
BoundReport check_zhou_ilic(GraphProfile& p);
BoundReport check_lambdak_floor(GraphProfile& p, int k);
BoundReport check_moore_bound(GraphProfile& p);

BoundReport check_sk_lower_general(const Graph& g, int k);
BoundReport check_sk_lower_tree(const Graph& g, int k);
BoundReport check_lambda2_diameter(const Graph& g);
std::vector<BoundReport> check_lambda2_triangles(const Graph& g, int s);
BoundReport check_turan_chain(const Graph& g, int s);
BoundReport check_path_dominance(const Graph& g, int k);
BoundReport check_lambda1_wiener(const Graph& g);
BoundReport check_bipartite_lambda1(const Graph& g);
BoundReport check_merris_interlacing(const Graph& g);
BoundReport check_merris_half_diameter(const Graph& g);
BoundReport check_zhou_ilic(const Graph& g);
BoundReport check_lambdak_floor(const Graph& g, int k);
BoundReport check_moore_bound(const Graph& g);

// ---------------------------------------------------------------------------
// Catalog

struct BoundParams {
  int k = 2;
  int s = 2;
};

/// Stable identifiers: thm1.2i thm1.2ii thm1.3 thm1.4i thm1.4ii prop1.5
/// lem2.3 thm2.6 thm2.7 lem-lk-2 lem3.1 lambda1-wiener turan-chain moore-threshold
const std::vector<std::string>& bound_catalog();
bool is_known_bound(std::string_view id);

/// Evaluates one catalog entry. Structural preconditions (not a tree, not
/// bipartite, k > n) yield applicable=false instead of an exception;
/// Disconnected still propagates. thm1.4i/thm1.4ii return one report each.
std::vector<BoundReport> evaluate_bound(std::string_view id, GraphProfile& p, const BoundParams& params);

}  // namespace distspec
