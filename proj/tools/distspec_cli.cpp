// distspec: distance spectra, bound checks and conjecture scans from the command line.
//
// Exit codes: 0 success / no violations, 1 violations or data errors, 2 usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distspec/bounds.hpp"
#include "distspec/errors.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/harness.hpp"
#include "distspec/spectra.hpp"

namespace {

using namespace distspec;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6;
  std::string family;
  int n = 0;
  int r = 0;
  std::string input;

  void add_to(CLI::App* cmd, bool allow_file) {
    auto* g6 = cmd->add_option("--graph6", graph6, "graph given as a graph6 string");
    auto* fam = cmd->add_option("--family", family, "complete | complete_bipartite | star | path | cycle");
    cmd->add_option("--n", n, "order of the family member");
    cmd->add_option("--r", r, "smaller part size for complete_bipartite");
    g6->excludes(fam);
    if (allow_file) {
      auto* file = cmd->add_option("--input", input, "graph6 file, one graph per line");
      file->excludes(g6)->excludes(fam);
    }
  }

  std::vector<Graph> load() const {
    if (!graph6.empty()) return {parse_graph6(graph6)};
    if (!family.empty()) return {build(spec())};
    if (!input.empty()) return read_graph6_file(input);
    throw UsageError("one of --graph6, --family or --input is required");
  }

  FamilySpec spec() const {
    if (n < 1) throw UsageError("--family needs --n");
    FamilySpec s{family_from_name(family), n, r};
    if (s.kind == Family::star) s.r = 1;
    return s;
  }
};

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

std::vector<std::string> split_ids(const std::string& list) {
  if (list == "all") return bound_catalog();
  std::vector<std::string> ids;
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) ids.push_back(id);
  for (const auto& id : ids)
    if (!is_known_bound(id)) throw UsageError("unknown bound id '" + id + "'");
  if (ids.empty()) throw UsageError("--bounds is empty");
  return ids;
}

// --------------------------------------------------------------------------

int run_spectrum(const GraphSource& source, const std::vector<int>& ks, const std::string& format) {
  const auto graphs = source.load();
  nlohmann::json all = nlohmann::json::array();
  for (const auto& g : graphs) {
    GraphProfile p(g);
    const auto& dist = p.distance_spectrum();
    const auto& lap = p.laplacian_spectrum();
    std::vector<std::pair<int, double>> sums;
    for (int k : ks) sums.emplace_back(k, sum_top_k(dist, k));

    if (format == "json") {
      nlohmann::json j;
      j["graph6"] = p.graph6();
      j["n"] = g.order();
      j["m"] = g.size();
      j["diameter"] = p.diameter();
      j["wiener_index"] = p.wiener_index();
      j["distance_spectrum"] = dist.values;
      j["laplacian_spectrum"] = lap.values;
      j["solver_tol"] = dist.tol;
      nlohmann::json s = nlohmann::json::object();
      for (auto [k, v] : sums) s[std::to_string(k)] = v;
      j["S_k"] = s;
      all.push_back(j);
    } else {
      std::cout << "graph6: " << p.graph6() << "\n"
                << "n: " << g.order() << "  m: " << g.size() << "  diameter: " << p.diameter()
                << "  wiener: " << p.wiener_index() << "\n"
                << "distance spectrum: " << join(dist.values) << "\n"
                << "laplacian spectrum: " << join(lap.values) << "\n";
      for (auto [k, v] : sums) std::cout << "S_" << k << ": " << format_double(v) << "\n";
    }
  }
  if (format == "json") std::cout << (all.size() == 1 ? all[0].dump() : all.dump()) << "\n";
  return kExitOk;
}

int run_check(const GraphSource& source, const std::string& bounds, const BoundParams& params,
              const std::string& output, int jobs) {
  const auto ids = split_ids(bounds);
  const auto graphs = source.load();
  const BoundScan scan = scan_bounds(graphs, ids, params, jobs);

  if (output.empty()) {
    write_reports_jsonl(std::cout, scan.reports);
  } else {
    std::ofstream out(output);
    if (!out) throw Error("cannot write '" + output + "'");
    write_reports_jsonl(out, scan.reports);
  }
  std::size_t failures = 0, findings = 0;
  for (const auto& r : scan.reports) {
    if (r.is_violation()) ++failures;
    if (r.applicable && !r.holds && r.report_only) ++findings;
  }
  std::cerr << graphs.size() << " graphs, " << scan.reports.size() << " reports, " << failures << " violations";
  if (findings) std::cerr << ", " << findings << " report-mode findings";
  std::cerr << "\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

std::vector<Graph> scan_corpus(const std::string& mode, int n, const std::string& input) {
  if (mode == "file") {
    if (input.empty()) throw UsageError("--mode file needs --input");
    return read_graph6_file(input);
  }
  if (mode == "exhaustive") {
    if (n > kMaxGraphEnumerationOrder) throw UsageError("exhaustive mode is capped at n = 6; pass --mode file --input");
    if (n < 1) throw UsageError("--n is required");
    return enumerate_connected_graphs(n);
  }
  if (mode == "trees") {
    if (n > kMaxTreeEnumerationOrder) throw UsageError("trees mode is capped at n = 9; pass --mode file --input");
    if (n < 2) throw UsageError("--n must be at least 2");
    return enumerate_trees(n);
  }
  throw UsageError("unknown mode '" + mode + "'");
}

int run_scan(const std::string& conjecture, const std::string& mode, int n, int k, const std::string& input,
             const std::string& output, const std::string& violations_path) {
  auto corpus = scan_corpus(mode, n, input);
  ScanSummary summary;
  if (conjecture == "path-max") {
    summary = scan_path_max(corpus, k);
  } else if (conjecture == "bipartite-sk") {
    if (mode != "file") std::erase_if(corpus, [](const Graph& g) { return !bipartition(g).has_value(); });
    summary = scan_bipartite_sk(corpus, k);
  } else if (conjecture == "lambda2-half") {
    summary = scan_lambda2_half(corpus);
  } else {
    throw UsageError("unknown conjecture '" + conjecture + "'");
  }

  if (output.empty()) {
    write_summaries_csv(std::cout, {summary});
  } else {
    std::ofstream out(output);
    if (!out) throw Error("cannot write '" + output + "'");
    write_summaries_csv(out, {summary});
  }
  std::string vpath = violations_path;
  if (vpath.empty() && !output.empty()) vpath = output + ".violations.jsonl";
  if (!vpath.empty()) {
    std::ofstream out(vpath);
    if (!out) throw Error("cannot write '" + vpath + "'");
    write_violations_jsonl(out, summary);
  }

  std::cerr << summary.conjecture_id << " n=" << summary.n << ": " << summary.corpus_size << " graphs, "
            << summary.violations.size() << " violations, " << summary.equality_witnesses.size()
            << " equality witnesses\n";
  for (const auto& w : summary.equality_witnesses) std::cerr << "  witness " << w << "\n";
  for (const auto& w : summary.unexpected_witnesses) std::cerr << "  unexpected witness " << w << "\n";
  if (summary.extremal)
    std::cerr << "  extremal " << summary.extremal->first << " = " << format_double(summary.extremal->second)
              << "\n";
  for (const auto& v : summary.violations)
    std::cerr << "  VIOLATION " << v.graph6 << " lhs=" << format_double(v.lhs) << " rhs=" << format_double(v.rhs)
              << (v.oracle_confirmed ? " (confirmed by inertia oracle)" : " (not confirmed by inertia oracle)")
              << "\n";
  return summary.violations.empty() ? kExitOk : kExitFailure;
}

int run_threshold(int k) {
  const MooreThreshold t = moore_threshold(k);
  std::cout << "k: " << k << "\n"
            << "l = R(k-1,k-1) - 1: " << t.l << (t.estimate ? " (upper estimate)" : "") << "\n"
            << "d = 2k: " << t.d << "\n"
            << "n0: " << t.n0 << (t.estimate ? " (upper estimate)" : "") << "\n";
  return kExitOk;
}

int run_families(const std::string& kind, const GraphSource& source, bool closed_form) {
  if (!kind.empty()) {
    if (source.n < 1) throw UsageError("--kind needs --n");
    const auto graphs = kind == "trees"       ? enumerate_trees(source.n)
                        : kind == "connected" ? enumerate_connected_graphs(source.n)
                                              : throw UsageError("unknown --kind '" + kind + "'");
    for (const auto& g : graphs) std::cout << encode_graph6(g) << "\n";
    return kExitOk;
  }
  if (source.family.empty()) throw UsageError("families needs --kind or --family");
  const FamilySpec spec = source.spec();
  std::cout << encode_graph6(build(spec)) << "\n";
  if (closed_form) std::cout << join(closed_form_distance_spectrum(spec).values) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance spectra, bound checks and conjecture scans for connected graphs"};
  app.require_subcommand(1);

  GraphSource spectrum_src;
  std::vector<int> spectrum_k;
  std::string spectrum_format = "text";
  auto* spectrum = app.add_subcommand("spectrum", "distance and Laplacian spectra of one graph");
  spectrum_src.add_to(spectrum, false);
  spectrum->add_option("--k", spectrum_k, "report S_k (repeatable)")->check(CLI::PositiveNumber);
  spectrum->add_option("--format", spectrum_format)->check(CLI::IsMember({"text", "json"}));

  GraphSource check_src;
  std::string check_bounds = "all", check_output;
  BoundParams params;
  int jobs = 1;
  auto* check = app.add_subcommand("check", "evaluate catalog bounds on a corpus, writing JSON lines");
  check_src.add_to(check, true);
  check->add_option("--bounds", check_bounds, "comma-separated bound ids, or 'all'");
  check->add_option("--k", params.k, "k for S_k / lambda_k bounds")->check(CLI::Range(2, 512));
  check->add_option("--s", params.s, "independence bound s")->check(CLI::Range(1, 64));
  check->add_option("--output", check_output, "JSONL report path (default stdout)");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string conjecture, mode = "exhaustive", scan_input, scan_output, scan_violations;
  int scan_n = 0, scan_k = 2;
  auto* scan = app.add_subcommand("scan", "scan a corpus for counterexamples to an open problem");
  scan->add_option("--conjecture", conjecture)
      ->required()
      ->check(CLI::IsMember({"path-max", "bipartite-sk", "lambda2-half"}));
  scan->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "trees", "file"}));
  scan->add_option("--n", scan_n);
  scan->add_option("--k", scan_k)->check(CLI::Range(1, 512));
  scan->add_option("--input", scan_input, "graph6 corpus for --mode file");
  scan->add_option("--output", scan_output, "summary CSV path (default stdout)");
  scan->add_option("--violations", scan_violations, "violations JSONL path (default <output>.violations.jsonl)");
  scan->add_option("--jobs", jobs, "accepted for symmetry with check; scans run on one thread");

  int threshold_k = 2;
  auto* threshold = app.add_subcommand("threshold", "order threshold n0(k) guaranteeing lambda_k(D) >= -2");
  threshold->add_option("--k", threshold_k)->required()->check(CLI::Range(2, 31));

  GraphSource families_src;
  std::string families_kind;
  bool closed_form = false;
  auto* families = app.add_subcommand("families", "print named family members or enumerated corpora as graph6");
  families_src.add_to(families, false);
  families->add_option("--kind", families_kind, "trees | connected (enumerate all classes of order --n)");
  families->add_flag("--closed-form", closed_form, "also print the closed-form distance spectrum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(spectrum_src, spectrum_k, spectrum_format);
    if (*check) return run_check(check_src, check_bounds, params, check_output, jobs);
    if (*scan) return run_scan(conjecture, mode, scan_n, scan_k, scan_input, scan_output, scan_violations);
    if (*threshold) return run_threshold(threshold_k);
    if (*families) return run_families(families_kind, families_src, closed_form);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderTooLarge& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const distspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
