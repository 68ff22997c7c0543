#pragma once

#include <span>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Dense real symmetric matrix. Every write goes to both (i,j) and (j,i).
class SymMatrix {
 public:
  explicit SymMatrix(int n);

  static SymMatrix from_distances(const DistanceMatrix& d);
  static SymMatrix laplacian(const Graph& g);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, double value) {
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
  }

  /// Principal submatrix on the given rows/columns, in the given order.
  SymMatrix principal_submatrix(std::span<const int> indices) const;

  double frobenius_norm() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> a_;
};

/// Eigenvalues sorted descending, with the error bound the solver achieved.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  int size() const noexcept { return static_cast<int>(values.size()); }
  /// 1-based: kth_largest(1) is the spectral radius for nonnegative matrices.
  double kth_largest(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

inline constexpr double kJacobiRelativeTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi (row-major p<q sweep order) until the off-diagonal Frobenius
/// norm drops below 1e-12 times the initial Frobenius norm. Entries smaller
/// than that target divided by n are not rotated, and entries negligible
/// against both diagonal entries are zeroed. `tol` of the
/// result is the final off-diagonal norm plus a rounding term n*eps*||A||_F,
/// which bounds every eigenvalue error.
Spectrum eig_symmetric(const SymMatrix& a);

/// Number of eigenvalues strictly below x, from the signs of the pivots of a
/// Bunch-Kaufman LDL^T factorization of a - xI (Sylvester's law of inertia).
/// Throws ZeroPivot when x is numerically an eigenvalue.
int inertia_below(const SymMatrix& a, double x);

/// k-th largest eigenvalue (1-based) found by bisection on inertia counts.
/// Independent of the Jacobi path; used to re-verify reported violations.
double kth_largest_by_inertia(const SymMatrix& a, int k, double tol = 1e-10);

Spectrum distance_spectrum(const Graph& g);
Spectrum laplacian_spectrum(const Graph& g);

/// Sum of the k largest eigenvalues; InvalidArgument unless 1 <= k <= n.
double sum_top_k(const Spectrum& s, int k);

}  // namespace distspec
