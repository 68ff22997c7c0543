#include "distspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "distspec/errors.hpp"

namespace distspec {

SymMatrix::SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 1) throw InvalidArgument("matrix order must be at least 1");
}

SymMatrix SymMatrix::from_distances(const DistanceMatrix& d) {
  SymMatrix m(d.order());
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j) m.set(i, j, d(i, j));
  return m;
}

SymMatrix SymMatrix::laplacian(const Graph& g) {
  SymMatrix m(g.order());
  for (int u = 0; u < g.order(); ++u) {
    m.set(u, u, g.degree(u));
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) m.set(u, v, -1.0);
  }
  return m;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> indices) const {
  SymMatrix b(static_cast<int>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i; j < indices.size(); ++j)
      b.set(static_cast<int>(i), static_cast<int>(j), (*this)(indices[i], indices[j]));
  return b;
}

double SymMatrix::frobenius_norm() const {
  return std::sqrt(std::inner_product(a_.begin(), a_.end(), a_.begin(), 0.0));
}

// ---------------------------------------------------------------------------
// Jacobi

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) sum += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * sum);
}

}  // namespace

Spectrum eig_symmetric(const SymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  const double norm0 = m.frobenius_norm();
  const double target = kJacobiRelativeTolerance * norm0;
  double off = off_diagonal_norm(a, n);
  const double skip_below = target / n;
  int sweep = 0;
  while (off > target) {
    if (sweep == kJacobiMaxSweeps) throw NonConvergence(sweep, off);
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      double* rp = a.data() + static_cast<std::size_t>(p) * n;
      for (int q = p + 1; q < n; ++q) {
        const double apq = rp[q];
        // entries below target/n cannot keep the off-diagonal norm above target
        if (std::abs(apq) < skip_below) continue;
        double* rq = a.data() + static_cast<std::size_t>(q) * n;
        const double app = rp[p];
        const double aqq = rq[q];
        // a rotation this small would not change either diagonal entry
        const double scaled = 100.0 * std::abs(apq);
        if (std::abs(app) + scaled == std::abs(app) && std::abs(aqq) + scaled == std::abs(aqq)) {
          rp[q] = rq[p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        for (int r = 0; r < n; ++r) {
          const double g = rp[r];
          const double h = rq[r];
          rp[r] = g - s * (h + g * tau);
          rq[r] = h + s * (g - h * tau);
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = rq[p] = 0.0;
        // column q is read back through other rows later in this sweep;
        // column p is only read through row p until the loop over q ends
        for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r) * n + q] = rq[r];
      }
      for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r) * n + p] = rp[r];
    }
    off = off_diagonal_norm(a, n);
  }

  Spectrum out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.tol = off + n * std::numeric_limits<double>::epsilon() * norm0;
  return out;
}

// ---------------------------------------------------------------------------
// Inertia via Bunch-Kaufman LDL^T

int inertia_below(const SymMatrix& m, double x) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j) - (i == j ? x : 0.0);
      scale = std::max(scale, std::abs(a[i * n + j]));
    }
  }
  const double zero_tol = 16.0 * n * std::numeric_limits<double>::epsilon() * scale;
  const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;

  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto swap_sym = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    for (int r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
  };

  int negatives = 0;
  int k = 0;
  while (k < n) {
    const double akk = std::abs(at(k, k));
    int r = k;
    double colmax = 0.0;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(at(i, k)) > colmax) {
        colmax = std::abs(at(i, k));
        r = i;
      }
    }
    if (std::max(akk, colmax) <= zero_tol) throw ZeroPivot(k, x);

    int block = 1;
    if (akk < alpha * colmax) {
      double rowmax = 0.0;
      for (int j = k; j < n; ++j)
        if (j != r) rowmax = std::max(rowmax, std::abs(at(r, j)));
      if (akk * rowmax >= alpha * colmax * colmax) {
        block = 1;
      } else if (std::abs(at(r, r)) >= alpha * rowmax) {
        swap_sym(k, r);
      } else {
        swap_sym(k + 1, r);
        block = 2;
      }
    }

    if (block == 1) {
      const double d = at(k, k);
      if (std::abs(d) <= zero_tol) throw ZeroPivot(k, x);
      if (d < 0.0) ++negatives;
      for (int i = k + 1; i < n; ++i) {
        const double li = at(i, k) / d;
        if (li == 0.0) continue;
        for (int j = k + 1; j < n; ++j) at(i, j) -= li * at(k, j);
      }
      k += 1;
    } else {
      const double e11 = at(k, k), e12 = at(k, k + 1), e22 = at(k + 1, k + 1);
      const double det = e11 * e22 - e12 * e12;
      if (std::abs(det) <= zero_tol * zero_tol) throw ZeroPivot(k, x);
      if (det < 0.0)
        negatives += 1;
      else if (e11 + e22 < 0.0)
        negatives += 2;
      for (int i = k + 2; i < n; ++i) {
        // row i of L times E: (a_ik, a_i,k+1) E^{-1}
        const double w1 = (at(i, k) * e22 - at(i, k + 1) * e12) / det;
        const double w2 = (at(i, k + 1) * e11 - at(i, k) * e12) / det;
        for (int j = k + 2; j < n; ++j) at(i, j) -= w1 * at(k, j) + w2 * at(k + 1, j);
      }
      k += 2;
    }
  }
  return negatives;
}

double kth_largest_by_inertia(const SymMatrix& a, int k, double tol) {
  const int n = a.order();
  if (k < 1 || k > n) throw InvalidArgument("eigenvalue index out of range");
  // Gershgorin enclosure
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a(i, j));
    lo = std::min(lo, a(i, i) - radius);
    hi = std::max(hi, a(i, i) + radius);
  }
  lo -= 1.0;
  hi += 1.0;
  auto count_at_least = [&](double y) {
    for (double shift : {0.0, 1e-9, -1e-9, 2e-9, -2e-9}) {
      try {
        return n - inertia_below(a, y + shift);
      } catch (const ZeroPivot&) {
      }
    }
    throw ZeroPivot(-1, y);
  };
  // invariant: count_at_least(lo) >= k, count_at_least(hi) < k
  while (hi - lo > tol * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_at_least(mid) >= k)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Spectrum distance_spectrum(const Graph& g) {
  return eig_symmetric(SymMatrix::from_distances(distance_matrix(g)));
}

Spectrum laplacian_spectrum(const Graph& g) { return eig_symmetric(SymMatrix::laplacian(g)); }

double sum_top_k(const Spectrum& s, int k) {
  if (k < 1 || k > s.size())
    throw InvalidArgument("k = " + std::to_string(k) + " outside [1, " + std::to_string(s.size()) + "]");
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += s.values[i];
  return total;
}

}  // namespace distspec
