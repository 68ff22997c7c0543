#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "distspec/errors.hpp"
#include "distspec/families.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

double max_abs_diff(const Spectrum& a, const Spectrum& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

}  // namespace

TEST_CASE("build examples") {
  const Graph k4 = build(FamilySpec::complete(4));
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  const Graph k23 = build(FamilySpec::complete_bipartite(2, 3));
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);
  CHECK(k23.adjacent(0, 2));
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK_FALSE(k23.adjacent(2, 3));
  CHECK(encode_graph6(build(FamilySpec::path(4))) == "Ch");
  CHECK(build(FamilySpec::cycle(5)).adjacent(4, 0));
  CHECK(build(FamilySpec::star(6)).degree(0) == 5);
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(build(FamilySpec::cycle(2)), InvalidArgument);
  CHECK_THROWS_AS(build(FamilySpec::star(1)), InvalidArgument);
  CHECK_THROWS_AS(build(FamilySpec::complete(0)), InvalidArgument);
  CHECK_THROWS_AS(build(FamilySpec::complete_bipartite(0, 3)), InvalidArgument);
  CHECK_THROWS_AS(build(FamilySpec::complete_bipartite(4, 3)), InvalidArgument);
  CHECK_THROWS_AS(build(FamilySpec::complete(513)), OrderTooLarge);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::complete, Family::complete_bipartite, Family::star, Family::path, Family::cycle})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK(family_from_name("bipartite") == Family::complete_bipartite);
  CHECK_THROWS_AS(family_from_name("wheel"), InvalidArgument);
}

TEST_CASE("closed-form spectra examples") {
  const Spectrum k33 = closed_form_distance_spectrum(FamilySpec::complete_bipartite(3, 3));
  CHECK(k33.kth_largest(2) == doctest::Approx(1.0));
  CHECK(sum_top_k(closed_form_distance_spectrum(FamilySpec::star(6)), 2) == doctest::Approx(8.0));
  const Spectrum c4 = closed_form_distance_spectrum(FamilySpec::cycle(4));
  const std::vector<double> expected = {4, 0, -2, -2};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c4.values[i] - expected[i]) < 1e-12);
  CHECK_THROWS_AS(closed_form_distance_spectrum(FamilySpec::path(5)), UnsupportedFamily);
}

TEST_CASE("closed forms match the eigensolver for small orders") {
  for (int n = 1; n <= 60; ++n) {
    CHECK(max_abs_diff(closed_form_distance_spectrum(FamilySpec::complete(n)),
                       distance_spectrum(build(FamilySpec::complete(n)))) <= 1e-8);
    if (n >= 3) {
      const Spectrum closed = closed_form_distance_spectrum(FamilySpec::cycle(n));
      CHECK(max_abs_diff(closed, distance_spectrum(build(FamilySpec::cycle(n)))) <= 1e-8);
      const auto circulant = oracle::cycle_distance_eigenvalues(n);
      for (int i = 0; i < n; ++i) CHECK(std::abs(closed.values[i] - circulant[i]) <= 1e-9);
    }
    for (int r = 1; 2 * r <= n; ++r) {
      const auto spec = FamilySpec::complete_bipartite(r, n - r);
      CHECK(max_abs_diff(closed_form_distance_spectrum(spec), distance_spectrum(build(spec))) <= 1e-8);
    }
  }
}

TEST_CASE("S_k of complete bipartite graphs is 2n - 2k") {
  for (int n = 2; n <= 30; ++n)
    for (int r = 1; 2 * r <= n; ++r) {
      const Spectrum s = distance_spectrum(build(FamilySpec::complete_bipartite(r, n - r)));
      for (int k = 2; k <= n - 1; ++k) CHECK(std::abs(sum_top_k(s, k) - (2.0 * n - 2.0 * k)) <= 1e-8);
    }
}

TEST_CASE("balanced complete bipartite lambda_2 is n/2 - 2") {
  for (int n = 2; n <= 200; n += 2) {
    const auto spec = FamilySpec::complete_bipartite(n / 2, n / 2);
    CHECK(closed_form_distance_spectrum(spec).kth_largest(2) == n / 2.0 - 2.0);
  }
  for (int n = 2; n <= 80; n += 6)
    CHECK(std::abs(distance_spectrum(build(FamilySpec::complete_bipartite(n / 2, n / 2))).kth_largest(2) -
                   (n / 2.0 - 2.0)) <= 1e-8);
}

TEST_CASE("tanh root") {
  auto f = [](double a) { return a * std::tanh(a) - 1.0; };
  CHECK(f(1.0) < 0.0);
  CHECK(f(1.5) > 0.0);
  const TanhRoot root = solve_tanh_root();
  CHECK(root.residual <= 1e-12);
  CHECK(std::abs(f(root.a)) == root.residual);
  CHECK(root.a > 1.19);
  CHECK(root.a < 1.21);
  CHECK(std::abs(root.a - 1.199679) <= 5e-7);
}

TEST_CASE("path asymptotic") {
  const double a = solve_tanh_root().a;
  CHECK(std::abs(path_lambda1_approx(100) - 3473.68) < 0.005);  // quoted to two decimals
  CHECK(path_lambda1_approx(100) == doctest::Approx(1e4 / (2 * a * a) - (2 + a * a) / (6 * a * a)));
  CHECK(std::abs(path_lambda1_approx(4) - (2.0 + std::sqrt(10.0))) < 0.25);
  double previous = 1e300;
  for (int n : {25, 50, 100}) {
    const double err = std::abs(path_lambda1_approx(n) - distance_spectrum(build(FamilySpec::path(n))).kth_largest(1));
    CHECK(err < previous);
    previous = err;
  }
  CHECK_THROWS_AS(path_lambda1_approx(1), InvalidArgument);
}

TEST_CASE("tree enumeration counts") {
  const std::vector<std::size_t> known = {1, 1, 2, 3, 6, 11, 23};  // n = 2..8
  for (int n = 2; n <= 8; ++n) CHECK(enumerate_trees(n).size() == known[n - 2]);
  CHECK_THROWS_AS(enumerate_trees(1), InvalidArgument);
  CHECK_THROWS_AS(enumerate_trees(10), OrderTooLarge);
}

TEST_CASE("tree enumeration at n = 9 matches an independent enumeration") {
  const auto trees = enumerate_trees(9);
  REQUIRE(trees.size() == 47);
  const auto grown = oracle::trees_by_leaf_extension(9);
  CHECK(grown.size() == 47);
  oracle::ClassSet classes;
  for (const auto& t : trees) {
    CHECK(is_tree(t));
    CHECK(classes.insert(t));  // pairwise non-isomorphic
  }
  for (const auto& t : grown) CHECK(classes.contains(t));
}

TEST_CASE("tree enumeration is deterministic and canonical") {
  const auto a = enumerate_trees(7);
  const auto b = enumerate_trees(7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(canonical_form(a[i]) == a[i]);
  }
}

TEST_CASE("connected graph enumeration counts") {
  const std::vector<std::size_t> known = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_connected_graphs(n).size() == known[n - 1]);
  CHECK_THROWS_AS(enumerate_connected_graphs(7), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_connected_graphs(0), InvalidArgument);
}

TEST_CASE("connected graphs at n = 5 and 6 are pairwise non-isomorphic and complete") {
  for (int n : {5, 6}) {
    const auto graphs = enumerate_connected_graphs(n);
    oracle::ClassSet classes;
    for (const auto& g : graphs) {
      CHECK(is_connected(g));
      CHECK(classes.insert(g));
    }
    // every connected labelled graph on n vertices falls into one of the classes
    std::mt19937_64 rng(41 + n);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = oracle::random_connected(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);
      CHECK(classes.contains(g));
    }
  }
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const Graph g = oracle::random_connected(n, std::uniform_real_distribution<double>(0.0, 0.7)(rng), rng);
    const Graph h = oracle::relabel(g, oracle::random_permutation(n, rng));
    const Graph cg = canonical_form(g);
    CHECK(cg == canonical_form(h));
    CHECK(oracle::isomorphic(cg, g));
    CHECK(canonical_graph6(g) == encode_graph6(cg));
  }
  // highly symmetric graphs exercise the tie-breaking search
  for (const Graph& g : {build(FamilySpec::cycle(16)), build(FamilySpec::complete_bipartite(8, 8)), oracle::petersen()}) {
    std::mt19937_64 local(47);
    const Graph h = oracle::relabel(g, oracle::random_permutation(g.order(), local));
    CHECK(canonical_form(g) == canonical_form(h));
  }
  CHECK_THROWS_AS(canonical_form(Graph(17)), OrderTooLarge);
}

TEST_CASE("non-isomorphic graphs get different canonical forms") {
  const auto graphs = enumerate_connected_graphs(6);
  std::set<std::string> forms;
  for (const auto& g : graphs) forms.insert(canonical_graph6(g));
  CHECK(forms.size() == graphs.size());
}

TEST_CASE("Pruefer decoding") {
  CHECK(tree_from_pruefer({}) == Graph(2, {{0, 1}}));
  const Graph star = tree_from_pruefer({0, 0, 0});
  CHECK(star.degree(0) == 4);
  CHECK(is_tree(star));
  const Graph path = tree_from_pruefer({1, 2});
  CHECK(path == build(FamilySpec::path(4)));
  CHECK_THROWS_AS(tree_from_pruefer({5}), InvalidArgument);
}
