#ifndef SOSUB_LINALG_HPP
#define SOSUB_LINALG_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "sosub/bigreal.hpp"

namespace sosub {

// First Cholesky pivot that is not strictly positive (0-based index).
struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(int pivot_index_);
  int pivot_index;
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what_);
};

struct BracketInvalid : std::runtime_error {
  explicit BracketInvalid(const std::string& what_);
};

// Dense symmetric matrix of BigReal. Only the lower triangle is stored;
// set(i, j, v) and at(i, j) address the same slot as (j, i), so the
// matrix cannot become unsymmetric.
class SymMatrix {
 public:
  explicit SymMatrix(int dim, mpfr_prec_t prec = kMinPrecisionBits);
  int dim() const { return dim_; }
  const BigReal& at(int i, int j) const { return tri_[idx(i, j)]; }
  void set(int i, int j, BigReal v) { tri_[idx(i, j)] = std::move(v); }
  BigReal max_abs() const;

 private:
  size_t idx(int i, int j) const;
  int dim_;
  std::vector<BigReal> tri_;
};

// Small dense rectangular matrix, row-major.
class Matrix {
 public:
  Matrix(int rows, int cols, mpfr_prec_t prec = kMinPrecisionBits);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigReal& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const BigReal& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<BigReal> a_;
};

// Lower-triangular L with L L^T = M. Throws NotPositiveDefinite at the
// first pivot whose square would be <= 0, which signals either a
// genuinely degenerate matrix or insufficient working precision.
Matrix cholesky(const SymMatrix& m);

// Solves L x = b (forward) and L^T x = b (backward) for lower-triangular L.
std::vector<BigReal> solve_lower(const Matrix& lower, const std::vector<BigReal>& b);
std::vector<BigReal> solve_lower_transposed(const Matrix& lower, const std::vector<BigReal>& b);

// L^{-1} A L^{-T} for the Cholesky factor L; the congruence that turns
// the pencil (A, M) into an ordinary symmetric eigenproblem.
SymMatrix whiten(const Matrix& lower, const SymMatrix& a);

struct MinEig {
  BigReal value;
  std::vector<BigReal> vec;  // unit eigenvector
  BigReal residual;          // ||M v - value v||_inf, floored at rounding level
};

// Smallest eigenvalue and eigenvector by cyclic Jacobi sweeps. Runs at
// the precision of the entries; throws NoConvergence if the off-diagonal
// mass has not reached ~2^(-prec+16) * ||M|| within max_sweeps.
MinEig sym_eig_min(const SymMatrix& m, int max_sweeps = 64);

// Root of a continuous strictly monotone h on [lo, hi] by bisection.
// Stops when |h(mid)| <= tol or the interval width drops below tol.
// Throws BracketInvalid unless h(lo) and h(hi) have opposite signs
// (an endpoint root is accepted).
BigReal bisect_root(const std::function<BigReal(const BigReal&)>& h, BigReal lo, BigReal hi,
                    const BigReal& tol);

}  // namespace sosub

#endif  // SOSUB_LINALG_HPP
