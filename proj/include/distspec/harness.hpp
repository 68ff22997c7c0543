#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distspec/bounds.hpp"
#include "distspec/graph.hpp"

namespace distspec {

struct Violation {
  std::string graph6;
  double lhs = 0.0;
  double rhs = 0.0;
  /// The violating comparison also holds when every eigenvalue involved is
  /// recomputed by inertia bisection instead of Jacobi.
  bool oracle_confirmed = false;
};

struct ScanSummary {
  std::string conjecture_id;
  int n = 0;
  std::optional<int> k;
  std::size_t corpus_size = 0;
  std::vector<Violation> violations;
  std::vector<std::string> equality_witnesses;
  /// Equality witnesses outside the class the statement predicts.
  std::vector<std::string> unexpected_witnesses;
  std::optional<std::pair<std::string, double>> extremal;
  /// For path-max: whether the maximiser is the path itself.
  std::optional<bool> extremal_is_expected;
};

/// Problem: S_k(D(G)) < S_k(D(P_n)) for connected G other than P_n.
ScanSummary scan_path_max(const std::vector<Graph>& corpus, int k);
/// Problem: S_k(D(G)) >= 2n - 2k for connected bipartite G, equality iff K_{r,n-r}.
ScanSummary scan_bipartite_sk(const std::vector<Graph>& corpus, int k);
/// Problem: lambda_2(D(G)) <= n/2 - 2, equality iff K_{n/2,n/2}.
ScanSummary scan_lambda2_half(const std::vector<Graph>& corpus);

struct BoundScan {
  /// Ordered by (graph6, bound_id); identical for every worker count.
  std::vector<BoundReport> reports;
  /// One summary per requested bound id, in request order.
  std::vector<ScanSummary> summaries;
};

/// Evaluates every requested catalog bound on every graph using `jobs`
/// worker threads. Unknown ids raise InvalidArgument before any work.
BoundScan scan_bounds(const std::vector<Graph>& corpus, const std::vector<std::string>& bound_ids,
                      const BoundParams& params, int jobs = 1);

// ---------------------------------------------------------------------------
// Corpus and artifact I/O

/// Reads one graph6 graph per line, skipping blank lines and bare
/// ">>graph6<<" header lines. Parse errors are reported with the line number.
std::vector<Graph> read_graph6_corpus(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// printf("%.17g"): 17 significant digits, re-parses to the identical double.
std::string format_double(double value);

/// One JSON object: {graph6, n, bound_id, k, s, lhs, rhs, slack, holds,
/// equality, applicable}; a "finding" field is appended when non-empty.
std::string report_to_json(const BoundReport& r);
void write_reports_jsonl(std::ostream& out, const std::vector<BoundReport>& reports);

std::string summary_csv_header();
std::string summary_to_csv(const ScanSummary& s);
void write_summaries_csv(std::ostream& out, const std::vector<ScanSummary>& summaries);

/// One JSON object per violation: {conjecture_id, n, k, graph6, lhs, rhs, oracle_confirmed}.
void write_violations_jsonl(std::ostream& out, const ScanSummary& s);

}  // namespace distspec
