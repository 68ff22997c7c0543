#include "distspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>
#include <type_traits>

#include "json.hpp"

#include "distspec/errors.hpp"
#include "distspec/families.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

namespace {

int common_order(const std::vector<Graph>& corpus) {
  if (corpus.empty()) throw InvalidArgument("empty corpus");
  const int n = corpus.front().order();
  for (const auto& g : corpus)
    if (g.order() != n) throw InvalidArgument("corpus mixes orders " + std::to_string(n) + " and " + std::to_string(g.order()));
  return n;
}

double sum_top_k_by_inertia(const SymMatrix& a, int k) {
  double total = 0.0;
  for (int i = 1; i <= k; ++i) total += kth_largest_by_inertia(a, i);
  return total;
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_complete_bipartite(const Graph& g) {
  const auto b = bipartition(g);
  return b && g.size() == b->r() * static_cast<int>(b->part2.size());
}

void track_extremal(ScanSummary& s, const std::string& g6, double value) {
  if (!s.extremal || value > s.extremal->second) s.extremal = std::make_pair(g6, value);
}

void check_k(int k, int n) {
  if (k < 1 || k > n) throw InvalidArgument("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
}

}  // namespace

ScanSummary scan_path_max(const std::vector<Graph>& corpus, int k) {
  ScanSummary s;
  s.conjecture_id = "path-max";
  s.n = common_order(corpus);
  s.k = k;
  check_k(k, s.n);
  const SymMatrix path_d = SymMatrix::from_distances(distance_matrix(build(FamilySpec::path(s.n))));
  const double path_sk = sum_top_k(eig_symmetric(path_d), k);

  for (const auto& g : corpus) {
    const std::string g6 = encode_graph6(g);
    const auto d = SymMatrix::from_distances(distance_matrix(g));
    const double sk = sum_top_k(eig_symmetric(d), k);
    ++s.corpus_size;
    track_extremal(s, g6, sk);
    if (is_path(g)) continue;
    if (std::abs(sk - path_sk) <= kEqualityTolerance) s.equality_witnesses.push_back(g6);
    if (sk >= path_sk - kHoldTolerance) {
      const bool confirmed = sum_top_k_by_inertia(d, k) >= sum_top_k_by_inertia(path_d, k) - kHoldTolerance;
      s.violations.push_back({g6, sk, path_sk, confirmed});
    }
  }
  s.unexpected_witnesses = s.equality_witnesses;
  s.extremal_is_expected = s.extremal && is_path(parse_graph6(s.extremal->first));
  return s;
}

ScanSummary scan_bipartite_sk(const std::vector<Graph>& corpus, int k) {
  ScanSummary s;
  s.conjecture_id = "bipartite-sk";
  s.n = common_order(corpus);
  s.k = k;
  if (k < 2) throw InvalidArgument("k must be at least 2");
  check_k(k, s.n);
  const double bound = 2.0 * s.n - 2.0 * k;
  for (const auto& g : corpus) {
    if (!bipartition(g)) throw NotBipartite();
    const std::string g6 = encode_graph6(g);
    const auto d = SymMatrix::from_distances(distance_matrix(g));
    const double sk = sum_top_k(eig_symmetric(d), k);
    ++s.corpus_size;
    track_extremal(s, g6, sk);
    if (std::abs(sk - bound) <= kEqualityTolerance) {
      s.equality_witnesses.push_back(g6);
      if (!is_complete_bipartite(g)) s.unexpected_witnesses.push_back(g6);
    }
    if (sk < bound - kHoldTolerance) {
      const bool confirmed = sum_top_k_by_inertia(d, k) < bound - kHoldTolerance;
      s.violations.push_back({g6, sk, bound, confirmed});
    }
  }
  return s;
}

ScanSummary scan_lambda2_half(const std::vector<Graph>& corpus) {
  ScanSummary s;
  s.conjecture_id = "lambda2-half";
  s.n = common_order(corpus);
  if (s.n < 2) throw InvalidArgument("second eigenvalue needs n >= 2");
  const double bound = s.n / 2.0 - 2.0;
  for (const auto& g : corpus) {
    const std::string g6 = encode_graph6(g);
    GraphProfile p(g);
    const auto d = SymMatrix::from_distances(p.distances());
    const double lambda2 = p.distance_spectrum().kth_largest(2);
    ++s.corpus_size;
    track_extremal(s, g6, lambda2);
    if (std::abs(lambda2 - bound) <= kEqualityTolerance) {
      s.equality_witnesses.push_back(g6);
      if (!p.is_balanced_complete_bipartite()) s.unexpected_witnesses.push_back(g6);
    }
    if (lambda2 > bound + kHoldTolerance) {
      const bool confirmed = kth_largest_by_inertia(d, 2) > bound + kHoldTolerance;
      s.violations.push_back({g6, lambda2, bound, confirmed});
    }
  }
  return s;
}

BoundScan scan_bounds(const std::vector<Graph>& corpus, const std::vector<std::string>& bound_ids,
                      const BoundParams& params, int jobs) {
  for (const auto& id : bound_ids)
    if (!is_known_bound(id)) throw InvalidArgument("unknown bound id '" + id + "'");
  jobs = std::max(1, jobs);

  std::vector<std::vector<BoundReport>> per_graph(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < corpus.size(); i = cursor++) {
      try {
        GraphProfile profile(corpus[i]);
        for (const auto& id : bound_ids) {
          auto reports = evaluate_bound(id, profile, params);
          for (auto& r : reports) per_graph[i].push_back(std::move(r));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  BoundScan out;
  for (auto& reports : per_graph)
    for (auto& r : reports) out.reports.push_back(std::move(r));
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const BoundReport& a, const BoundReport& b) {
    return std::tie(a.graph6, a.bound_id) < std::tie(b.graph6, b.bound_id);
  });

  int uniform_n = corpus.empty() ? 0 : corpus.front().order();
  for (const auto& g : corpus)
    if (g.order() != uniform_n) uniform_n = 0;
  for (const auto& id : bound_ids) {
    ScanSummary s;
    s.conjecture_id = id;
    s.n = uniform_n;
    if (id == "thm1.2i" || id == "thm1.2ii" || id == "prop1.5" || id == "lem-lk-2") s.k = params.k;
    for (const auto& r : out.reports) {
      if (r.bound_id != id) continue;
      ++s.corpus_size;
      if (!r.applicable) continue;
      if (!r.holds) s.violations.push_back({r.graph6, *r.lhs, *r.rhs, false});
      if (r.equality) s.equality_witnesses.push_back(r.graph6);
      track_extremal(s, r.graph6, *r.lhs);
    }
    out.summaries.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// I/O

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_graph6_corpus(in);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

template <typename T>
std::string json_optional(const std::optional<T>& v) {
  if (!v) return "null";
  if constexpr (std::is_same_v<T, double>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_to_json(const BoundReport& r) {
  std::string out = "{";
  out += "\"graph6\":" + json_string(r.graph6);
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"bound_id\":" + json_string(r.bound_id);
  out += ",\"k\":" + json_optional(r.k);
  out += ",\"s\":" + json_optional(r.s);
  out += ",\"lhs\":" + json_optional(r.lhs);
  out += ",\"rhs\":" + json_optional(r.rhs);
  out += ",\"slack\":" + json_optional(r.slack);
  out += std::string(",\"holds\":") + json_bool(r.holds);
  out += std::string(",\"equality\":") + json_bool(r.equality);
  out += std::string(",\"applicable\":") + json_bool(r.applicable);
  if (!r.finding.empty()) out += ",\"finding\":" + json_string(r.finding);
  out += "}";
  return out;
}

void write_reports_jsonl(std::ostream& out, const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) out << report_to_json(r) << '\n';
}

std::string summary_csv_header() {
  return "conjecture_id,n,k,corpus_size,violations,equalities,extremal_graph6,extremal_value";
}

std::string summary_to_csv(const ScanSummary& s) {
  std::string row = s.conjecture_id + "," + std::to_string(s.n) + ",";
  if (s.k) row += std::to_string(*s.k);
  row += "," + std::to_string(s.corpus_size) + "," + std::to_string(s.violations.size()) + "," +
         std::to_string(s.equality_witnesses.size()) + ",";
  if (s.extremal) row += s.extremal->first + "," + format_double(s.extremal->second);
  else row += ",";
  return row;
}

void write_summaries_csv(std::ostream& out, const std::vector<ScanSummary>& summaries) {
  out << summary_csv_header() << '\n';
  for (const auto& s : summaries) out << summary_to_csv(s) << '\n';
}

void write_violations_jsonl(std::ostream& out, const ScanSummary& s) {
  for (const auto& v : s.violations) {
    out << "{\"conjecture_id\":" << json_string(s.conjecture_id) << ",\"n\":" << s.n
        << ",\"k\":" << json_optional(s.k) << ",\"graph6\":" << json_string(v.graph6)
        << ",\"lhs\":" << format_double(v.lhs) << ",\"rhs\":" << format_double(v.rhs)
        << ",\"oracle_confirmed\":" << json_bool(v.oracle_confirmed) << "}\n";
  }
}

}  // namespace distspec
