#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

enum class Family { complete, complete_bipartite, star, path, cycle };

/// A named extremal family member. For complete_bipartite, `r` is the
/// smaller part and n - r the larger; other kinds ignore `r`.
struct FamilySpec {
  Family kind = Family::complete;
  int n = 1;
  int r = 0;

  static FamilySpec complete(int n) { return {Family::complete, n, 0}; }
  static FamilySpec complete_bipartite(int r, int s) { return {Family::complete_bipartite, r + s, r}; }
  static FamilySpec star(int n) { return {Family::star, n, 1}; }
  static FamilySpec path(int n) { return {Family::path, n, 0}; }
  static FamilySpec cycle(int n) { return {Family::cycle, n, 0}; }

  /// Throws InvalidArgument when the parameters are out of range.
  void validate() const;
};

std::string_view family_name(Family kind);
/// Accepts complete, complete_bipartite (or bipartite), star, path, cycle.
Family family_from_name(std::string_view name);

/// Canonical labelling: paths and cycles in vertex order, bipartite part1 = {0..r-1}.
Graph build(const FamilySpec& spec);

/// Exact spectra for complete, complete bipartite, star and cycle graphs.
/// Paths have no closed form here and raise UnsupportedFamily.
Spectrum closed_form_distance_spectrum(const FamilySpec& spec);

struct TanhRoot {
  double a = 0.0;
  double residual = 0.0;  // |a tanh a - 1|
};

/// Positive root of a*tanh(a) = 1, by bisection on [1, 1.5] then Newton.
TanhRoot solve_tanh_root();

/// Asymptotic spectral radius of D(P_n): n^2/(2a^2) - (2+a^2)/(6a^2).
double path_lambda1_approx(int n);

inline constexpr int kMaxCanonicalOrder = 16;
inline constexpr int kMaxTreeEnumerationOrder = 9;
inline constexpr int kMaxGraphEnumerationOrder = 6;

/// Relabels g so that its graph6 string is the lexicographically least one
/// among all labellings that list vertices by increasing degree-refinement
/// colour. Isomorphic graphs map to identical results.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// One canonical representative per isomorphism class of trees on n vertices,
/// 2 <= n <= 9, in order of first appearance among Pruefer sequences.
std::vector<Graph> enumerate_trees(int n);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, 1 <= n <= 6, in order of first appearance by edge subset.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Labelled tree encoded by a Pruefer sequence over {0..n-1}, n = size + 2.
Graph tree_from_pruefer(const std::vector<int>& sequence);

}  // namespace distspec
