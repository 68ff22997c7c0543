#include "distspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "distspec/errors.hpp"
#include "distspec/families.hpp"

namespace distspec {

std::optional<double> BoundReport::fact(std::string_view name) const {
  for (const auto& [key, value] : facts)
    if (key == name) return value;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GraphProfile

GraphProfile::GraphProfile(Graph g) : g_(std::move(g)) {}

const std::string& GraphProfile::graph6() {
  if (!graph6_) graph6_ = encode_graph6(g_);
  return *graph6_;
}

const DistanceMatrix& GraphProfile::distances() {
  if (!distances_) distances_ = distance_matrix(g_);
  return *distances_;
}

const Spectrum& GraphProfile::distance_spectrum() {
  if (!dspec_) dspec_ = eig_symmetric(SymMatrix::from_distances(distances()));
  return *dspec_;
}

const Spectrum& GraphProfile::laplacian_spectrum() {
  if (!lspec_) lspec_ = distspec::laplacian_spectrum(g_);
  return *lspec_;
}

int GraphProfile::independence_number() {
  if (!alpha_) alpha_ = distspec::independence_number(g_);
  return *alpha_;
}

const DegreeStats& GraphProfile::degree_stats() {
  if (!degrees_) degrees_ = distspec::degree_stats(g_);
  return *degrees_;
}

const std::optional<Bipartition>& GraphProfile::bipartition() {
  if (!bipartition_) bipartition_ = distspec::bipartition(g_);
  return *bipartition_;
}

bool GraphProfile::is_tree() {
  if (!tree_) tree_ = distspec::is_tree(g_);
  return *tree_;
}

bool GraphProfile::is_complete() const {
  const std::int64_t n = g_.order();
  return g_.size() == n * (n - 1) / 2;
}

bool GraphProfile::is_star() const {
  const int n = g_.order();
  if (n < 2 || g_.size() != n - 1) return false;
  for (int v = 0; v < n; ++v)
    if (g_.degree(v) == n - 1) return true;
  return false;
}

bool GraphProfile::is_balanced_complete_bipartite() {
  const int n = g_.order();
  if (n % 2 != 0) return false;
  const auto& b = bipartition();
  return b && b->r() == n / 2 && g_.size() == (n / 2) * (n / 2);
}

bool GraphProfile::is_regular() const {
  for (int v = 1; v < g_.order(); ++v)
    if (g_.degree(v) != g_.degree(0)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ramsey / Moore

namespace {

using boost::multiprecision::cpp_int;

cpp_int moore_sum_exact(std::int64_t l, int d) {
  cpp_int total = 1;
  cpp_int term = l;
  for (int i = 0; i < d; ++i) {
    total += term;
    term *= (l - 1);
  }
  return total;
}

}  // namespace

RamseyValue diagonal_ramsey(int t) {
  static constexpr std::int64_t known[] = {0, 1, 2, 6, 18};
  if (t < 1 || t > 30) throw InvalidArgument("diagonal Ramsey lookup supports 1 <= t <= 30");
  if (t <= 4) return {known[t], true};
  // Erdos-Szekeres: R(t,t) <= C(2t-2, t-1)
  std::int64_t c = 1;
  for (int i = 1; i <= t - 1; ++i) c = c * (t - 1 + i) / i;
  return {c, false};
}

std::string moore_sum(std::int64_t l, int d) {
  if (l < 0 || d < 0) throw InvalidArgument("Moore sum needs l >= 0 and d >= 0");
  return moore_sum_exact(l, d).str();
}

MooreThreshold moore_threshold(int k) {
  if (k < 2) throw InvalidArgument("threshold needs k >= 2");
  const RamseyValue r = diagonal_ramsey(k - 1);
  MooreThreshold out;
  out.l = r.value - 1;
  out.d = 2 * k;
  const cpp_int n0 = moore_sum_exact(out.l, out.d);
  out.n0 = n0.str();
  out.n0_approx = n0.convert_to<double>();
  out.estimate = !r.exact;
  return out;
}

// ---------------------------------------------------------------------------
// Report helpers

namespace {

enum class Sense { at_least, at_most };  // lhs >= rhs, lhs <= rhs

BoundReport start(std::string_view id, GraphProfile& p) {
  BoundReport r;
  r.bound_id = std::string(id);
  r.graph6 = p.graph6();
  r.n = p.order();
  return r;
}

void settle(BoundReport& r, double lhs, double rhs, Sense sense) {
  r.applicable = true;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = sense == Sense::at_least ? lhs - rhs : rhs - lhs;
  r.holds = *r.slack >= -kHoldTolerance;
  r.equality = std::abs(*r.slack) <= kEqualityTolerance;
}

// Strict statements: holds is still slack >= -tol; strictness is tracked separately.
void settle_strict(BoundReport& r, double lhs, double rhs, Sense sense) {
  settle(r, lhs, rhs, sense);
  r.strict = *r.slack > kEqualityTolerance;
}

BoundReport inapplicable(BoundReport r, std::string why) {
  r.applicable = false;
  r.holds = true;
  r.equality = false;
  r.lhs.reset();
  r.rhs.reset();
  r.slack.reset();
  r.finding = std::move(why);
  return r;
}

void require_k(int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
}

double flag(bool b) { return b ? 1.0 : 0.0; }

}  // namespace

// ---------------------------------------------------------------------------
// Checks

BoundReport check_sk_lower_general(GraphProfile& p, int k) {
  require_k(k);
  BoundReport r = start("thm1.2i", p);
  r.k = k;
  const auto& spec = p.distance_spectrum();
  if (k > p.order()) return inapplicable(std::move(r), "k exceeds the order");
  const int n = p.order();
  settle(r, sum_top_k(spec, k), n - k, Sense::at_least);
  const bool complete = p.is_complete();
  r.facts.emplace_back("is_complete", flag(complete));
  if (r.equality && !complete)
    r.finding = "equality attained by a non-complete graph (order not large relative to k)";
  return r;
}

BoundReport check_sk_lower_tree(GraphProfile& p, int k) {
  require_k(k);
  if (!p.is_tree()) throw NotATree();
  BoundReport r = start("thm1.2ii", p);
  r.k = k;
  if (k > p.order()) return inapplicable(std::move(r), "k exceeds the order");
  const int n = p.order();
  settle(r, sum_top_k(p.distance_spectrum(), k), 2.0 * n - 2.0 * k, Sense::at_least);
  const bool star = p.is_star();
  r.facts.emplace_back("is_star", flag(star));
  if (r.equality && !star)
    r.finding = "equality attained by a tree that is not a star (order not large relative to k)";
  return r;
}

BoundReport check_lambda2_diameter(GraphProfile& p) {
  BoundReport r = start("thm1.3", p);
  const auto& spec = p.distance_spectrum();
  const int n = p.order();
  if (n < 2) return inapplicable(std::move(r), "second eigenvalue needs n >= 2");
  const int d = p.diameter();
  settle(r, spec.kth_largest(2), n * (d - 1) / 2.0 - d, Sense::at_most);
  const bool complete = p.is_complete();
  const bool balanced = p.is_balanced_complete_bipartite();
  r.facts.emplace_back("is_complete", flag(complete));
  r.facts.emplace_back("is_balanced_complete_bipartite", flag(balanced));
  if (r.equality && !complete && !balanced)
    r.finding = "equality attained outside the complete / balanced complete bipartite classes";
  return r;
}

std::vector<BoundReport> check_lambda2_triangles(GraphProfile& p, int s) {
  if (s < 2) throw InvalidArgument("s must be at least 2");
  p.distances();  // Disconnected surfaces here, like every other check
  const std::int64_t n = p.order();
  const std::int64_t threshold = std::int64_t{s} * s * s + std::int64_t{s} * s - 2 * s + 1;

  BoundReport main = start("thm1.4i", p);
  main.s = s;
  std::vector<BoundReport> out;
  if (n <= threshold) {
    out.push_back(inapplicable(std::move(main), "order does not exceed s^3+s^2-2s+1"));
  } else if (n > kMaxExactIndependenceOrder) {
    out.push_back(inapplicable(std::move(main), "independence number needs n <= 64"));
  } else if (p.independence_number() > s) {
    out.push_back(inapplicable(std::move(main), "independence number exceeds s"));
  } else {
    const double lambda2 = p.distance_spectrum().kth_largest(2);
    const double t = static_cast<double>(triangle_count(p.graph()));
    const double m = p.graph().size();
    settle_strict(main, lambda2, 3.0 * s * s * s * t / m, Sense::at_most);
    main.equality = false;
    main.facts.emplace_back("triangles", t);
    main.facts.emplace_back("alpha", p.independence_number());
    out.push_back(std::move(main));
  }

  BoundReport second = start("thm1.4ii", p);
  second.s = s;
  if (s != 2) {
    out.push_back(inapplicable(std::move(second), "part (ii) is stated for s = 2"));
  } else if (!out.front().applicable || n < 11) {
    out.push_back(inapplicable(std::move(second), "needs alpha <= 2 and n >= 11"));
  } else {
    const double t = static_cast<double>(triangle_count(p.graph()));
    settle_strict(second, p.distance_spectrum().kth_largest(2), t, Sense::at_most);
    second.equality = false;
    second.facts.emplace_back("triangles", t);
    out.push_back(std::move(second));
  }
  return out;
}

BoundReport check_turan_chain(GraphProfile& p, int s) {
  if (s < 1) throw InvalidArgument("s must be at least 1");
  p.distances();
  BoundReport r = start("turan-chain", p);
  r.s = s;
  const Graph& g = p.graph();
  const int n = g.order();
  if (n > kMaxExactIndependenceOrder)
    return inapplicable(std::move(r), "independence number needs n <= 64");
  const int alpha = p.independence_number();
  r.facts.emplace_back("alpha", alpha);

  struct Part {
    const char* name;
    double lhs;
    double rhs;
  };
  std::vector<Part> parts;
  // (a) alpha >= n / (1 + average degree)
  parts.push_back({"a", static_cast<double>(alpha), n / (1.0 + 2.0 * g.size() / n)});

  const std::int64_t threshold = std::int64_t{s} * s * s + std::int64_t{s} * s - 2 * s + 1;
  const bool gated = alpha <= s && n > threshold;
  r.facts.emplace_back("neighbourhood_parts_applicable", flag(gated));
  if (gated) {
    // (b) t(G,u) >= (d(u)^2 - s d(u)) / (2s), tightest vertex
    Part b{"b", 0.0, 0.0};
    double worst = std::numeric_limits<double>::infinity();
    double sum_sq = 0.0;
    for (int u = 0; u < n; ++u) {
      const double d = g.degree(u);
      sum_sq += d * d;
      const double lhs = static_cast<double>(triangle_count_at(g, u));
      const double rhs = (d * d - s * d) / (2.0 * s);
      if (lhs - rhs < worst) {
        worst = lhs - rhs;
        b = {"b", lhs, rhs};
      }
    }
    parts.push_back(b);
    // (c) 3 t(G) >= sum d(u)^2 / (2s) - m
    parts.push_back({"c", 3.0 * static_cast<double>(triangle_count(g)), sum_sq / (2.0 * s) - g.size()});
  }

  const Part* tightest = &parts.front();
  for (const auto& part : parts) {
    r.facts.emplace_back(std::string("slack_") + part.name, part.lhs - part.rhs);
    if (part.lhs - part.rhs < tightest->lhs - tightest->rhs) tightest = &part;
  }
  settle(r, tightest->lhs, tightest->rhs, Sense::at_least);
  return r;
}

BoundReport check_path_dominance(GraphProfile& p, int k) {
  require_k(k);
  BoundReport r = start("prop1.5", p);
  r.k = k;
  const int n = p.order();
  const int d = p.diameter();
  r.facts.emplace_back("diameter", d);
  if (k > n) return inapplicable(std::move(r), "k exceeds the order");
  if (!(3.0 * (k + 2) * d < 2.0 * n)) return inapplicable(std::move(r), "diameter not below 2n/(3(k+2))");
  const double path_sk = sum_top_k(distance_spectrum(build(FamilySpec::path(n))), k);
  settle_strict(r, sum_top_k(p.distance_spectrum(), k), path_sk, Sense::at_most);
  return r;
}

BoundReport check_lambda1_wiener(GraphProfile& p) {
  BoundReport r = start("lambda1-wiener", p);
  const double w = static_cast<double>(p.wiener_index());
  settle(r, p.distance_spectrum().kth_largest(1), 2.0 * w / p.order(), Sense::at_least);
  r.facts.emplace_back("wiener_index", w);
  return r;
}

BoundReport check_bipartite_lambda1(GraphProfile& p) {
  p.distances();
  const auto& b = p.bipartition();
  if (!b) throw NotBipartite();
  BoundReport r = start("lem3.1", p);
  const double n = p.order();
  const double parts = b->r();
  const double m = p.graph().size();
  const double rhs = 2.0 * (n * n + (parts - 1) * n - parts * parts - 2 * m) / n;
  settle(r, p.distance_spectrum().kth_largest(1), rhs, Sense::at_least);
  r.facts.emplace_back("r", parts);
  return r;
}

BoundReport check_merris_interlacing(GraphProfile& p) {
  if (!p.is_tree()) throw NotATree();
  BoundReport r = start("lem2.3", p);
  const int n = p.order();
  if (n < 2) return inapplicable(std::move(r), "needs n >= 2");
  const auto& lam = p.distance_spectrum();
  const auto& mu = p.laplacian_spectrum();

  // 0 > -2/mu_1 >= lambda_2 >= -2/mu_2 >= lambda_3 >= ... >= -2/mu_{n-1} >= lambda_n
  std::vector<double> chain;
  for (int i = 1; i <= n - 1; ++i) {
    chain.push_back(-2.0 / mu.kth_largest(i));
    chain.push_back(lam.kth_largest(i + 1));
  }
  const bool head_negative = chain.front() < 0.0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] - chain[i + 1] < chain[worst] - chain[worst + 1]) worst = i;
  settle(r, chain[worst], chain[worst + 1], Sense::at_least);
  r.holds = r.holds && head_negative;

  const double head_slack = chain[0] - chain[1];
  r.strict = head_slack > kEqualityTolerance;
  r.facts.emplace_back("neg2_over_mu1", chain[0]);
  r.facts.emplace_back("lambda2", chain[1]);
  r.facts.emplace_back("head_slack", head_slack);
  if (!*r.strict) r.finding = "-2/mu_1 > lambda_2 holds only with equality";
  return r;
}

BoundReport check_merris_half_diameter(GraphProfile& p) {
  if (!p.is_tree()) throw NotATree();
  BoundReport r = start("thm2.6", p);
  const int d = p.diameter();
  r.facts.emplace_back("diameter", d);
  if (d < 2) return inapplicable(std::move(r), "needs diameter >= 2");
  settle_strict(r, p.distance_spectrum().kth_largest(d / 2), -1.0, Sense::at_least);
  return r;
}

BoundReport check_zhou_ilic(GraphProfile& p) {
  BoundReport r = start("thm2.7", p);
  const int n = p.order();
  if (n < 2) return inapplicable(std::move(r), "needs n >= 2");
  const double d = p.diameter();
  const auto& deg = p.degree_stats();
  const double base = d * n - d * (d - 1) / 2.0 - 1.0;
  const double rhs = std::sqrt((base - deg.min_degree * (d - 1)) * (base - deg.second_min_degree * (d - 1)));
  settle(r, p.distance_spectrum().kth_largest(1), rhs, Sense::at_most);
  const bool characterized = p.is_regular() && d <= 2;
  r.facts.emplace_back("regular_diameter_le_2", flag(characterized));
  if (r.equality != characterized)
    r.finding = r.equality ? "equality on a graph outside the regular, diameter <= 2 class"
                           : "regular graph with diameter <= 2 without equality";
  return r;
}

BoundReport check_lambdak_floor(GraphProfile& p, int k) {
  require_k(k);
  BoundReport r = start("lem-lk-2", p);
  r.k = k;
  r.report_only = true;
  const auto& spec = p.distance_spectrum();
  if (k > p.order()) return inapplicable(std::move(r), "k exceeds the order");
  settle(r, spec.kth_largest(k), -2.0, Sense::at_least);
  if (k - 1 <= 30) {
    const MooreThreshold t = moore_threshold(k);
    r.facts.emplace_back("n0", t.n0_approx);
    r.facts.emplace_back("n0_is_estimate", flag(t.estimate));
    if (!r.holds)
      r.finding = "lambda_k < -2 at n = " + std::to_string(p.order()) + " below the sufficiency threshold n0 = " +
                  t.n0 + (t.estimate ? " (upper estimate)" : "");
  }
  return r;
}

BoundReport check_moore_bound(GraphProfile& p) {
  BoundReport r = start("moore-threshold", p);
  const int d = p.diameter();
  const int delta = p.order() >= 2 ? p.degree_stats().max_degree : 0;
  const double bound = std::min(moore_sum_exact(delta, d).convert_to<double>(), std::numeric_limits<double>::max());
  settle(r, p.order(), bound, Sense::at_most);
  r.facts.emplace_back("max_degree", delta);
  r.facts.emplace_back("diameter", d);
  return r;
}

#define DISTSPEC_GRAPH_OVERLOAD(name)                          \
  BoundReport name(const Graph& g) {                           \
    GraphProfile p(g);                                         \
    return name(p);                                            \
  }
#define DISTSPEC_GRAPH_OVERLOAD_INT(name, Ret)                 \
  Ret name(const Graph& g, int param) {                        \
    GraphProfile p(g);                                         \
    return name(p, param);                                     \
  }

DISTSPEC_GRAPH_OVERLOAD_INT(check_sk_lower_general, BoundReport)
DISTSPEC_GRAPH_OVERLOAD_INT(check_sk_lower_tree, BoundReport)
DISTSPEC_GRAPH_OVERLOAD(check_lambda2_diameter)
DISTSPEC_GRAPH_OVERLOAD_INT(check_lambda2_triangles, std::vector<BoundReport>)
DISTSPEC_GRAPH_OVERLOAD_INT(check_turan_chain, BoundReport)
DISTSPEC_GRAPH_OVERLOAD_INT(check_path_dominance, BoundReport)
DISTSPEC_GRAPH_OVERLOAD(check_lambda1_wiener)
DISTSPEC_GRAPH_OVERLOAD(check_bipartite_lambda1)
DISTSPEC_GRAPH_OVERLOAD(check_merris_interlacing)
DISTSPEC_GRAPH_OVERLOAD(check_merris_half_diameter)
DISTSPEC_GRAPH_OVERLOAD(check_zhou_ilic)
DISTSPEC_GRAPH_OVERLOAD_INT(check_lambdak_floor, BoundReport)
DISTSPEC_GRAPH_OVERLOAD(check_moore_bound)

#undef DISTSPEC_GRAPH_OVERLOAD
#undef DISTSPEC_GRAPH_OVERLOAD_INT

// ---------------------------------------------------------------------------
// Catalog

const std::vector<std::string>& bound_catalog() {
  static const std::vector<std::string> ids = {
      "thm1.2i", "thm1.2ii", "thm1.3",  "thm1.4i",  "thm1.4ii",       "prop1.5",     "lem2.3",
      "thm2.6",  "thm2.7",   "lem-lk-2", "lem3.1", "lambda1-wiener", "turan-chain", "moore-threshold"};
  return ids;
}

bool is_known_bound(std::string_view id) {
  const auto& ids = bound_catalog();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<BoundReport> evaluate_bound(std::string_view id, GraphProfile& p, const BoundParams& params) {
  if (!is_known_bound(id)) throw InvalidArgument("unknown bound id '" + std::string(id) + "'");
  p.distances();
  auto structural = [&](auto&& check) -> BoundReport {
    try {
      return check();
    } catch (const NotATree&) {
      BoundReport r = start(id, p);
      return inapplicable(std::move(r), "not a tree");
    } catch (const NotBipartite&) {
      BoundReport r = start(id, p);
      return inapplicable(std::move(r), "not bipartite");
    }
  };

  if (id == "thm1.2i") return {check_sk_lower_general(p, params.k)};
  if (id == "thm1.2ii") {
    BoundReport r = structural([&] { return check_sk_lower_tree(p, params.k); });
    r.k = params.k;
    return {r};
  }
  if (id == "thm1.3") return {check_lambda2_diameter(p)};
  if (id == "thm1.4i" || id == "thm1.4ii") {
    auto both = check_lambda2_triangles(p, params.s);
    return {id == "thm1.4i" ? both[0] : both[1]};
  }
  if (id == "prop1.5") return {check_path_dominance(p, params.k)};
  if (id == "lem2.3") return {structural([&] { return check_merris_interlacing(p); })};
  if (id == "thm2.6") return {structural([&] { return check_merris_half_diameter(p); })};
  if (id == "thm2.7") return {check_zhou_ilic(p)};
  if (id == "lem-lk-2") return {check_lambdak_floor(p, params.k)};
  if (id == "lem3.1") return {structural([&] { return check_bipartite_lambda1(p); })};
  if (id == "lambda1-wiener") return {check_lambda1_wiener(p)};
  if (id == "turan-chain") return {check_turan_chain(p, params.s)};
  if (id == "moore-threshold") return {check_moore_bound(p)};
  throw InvalidArgument("unknown bound id '" + std::string(id) + "'");
}

}  // namespace distspec
