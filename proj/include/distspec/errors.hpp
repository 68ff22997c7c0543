#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input. `offset` is the byte position that failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("graph6 parse error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a distance is requested on a disconnected graph.
class Disconnected : public Error {
 public:
  Disconnected(int u, int v)
      : Error("graph is disconnected: no path between " + std::to_string(u) + " and " +
              std::to_string(v)),
        u_(u),
        v_(v) {}
  int source() const noexcept { return u_; }
  int target() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

class OrderTooLarge : public Error {
 public:
  OrderTooLarge(int n, int cap)
      : Error("order " + std::to_string(n) + " exceeds the supported maximum " +
              std::to_string(cap)) {}
};

class NonConvergence : public Error {
 public:
  NonConvergence(int sweeps, double residual)
      : Error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
              " sweeps (off-diagonal norm " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// The LDL^T factorization met a (numerically) zero pivot; the shift is an eigenvalue.
class ZeroPivot : public Error {
 public:
  ZeroPivot(int step, double shift)
      : Error("zero pivot at step " + std::to_string(step) + " for shift " +
              std::to_string(shift)) {}
};

class NotATree : public Error {
 public:
  NotATree() : Error("graph is not a tree") {}
};

class NotBipartite : public Error {
 public:
  NotBipartite() : Error("graph is not bipartite") {}
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace distspec
