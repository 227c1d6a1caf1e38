#include "sosub/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sosub {

NotPositiveDefinite::NotPositiveDefinite(int pivot_index_)
    : std::runtime_error("matrix not positive definite at pivot " + std::to_string(pivot_index_)),
      pivot_index(pivot_index_) {}

NoConvergence::NoConvergence(const std::string& what_) : std::runtime_error(what_) {}

BracketInvalid::BracketInvalid(const std::string& what_) : std::runtime_error(what_) {}

SymMatrix::SymMatrix(int dim, mpfr_prec_t prec)
    : dim_(dim), tri_(static_cast<size_t>(dim) * (dim + 1) / 2, BigReal(0L, prec)) {}

size_t SymMatrix::idx(int i, int j) const {
  if (i < j) std::swap(i, j);
  return static_cast<size_t>(i) * (i + 1) / 2 + j;
}

BigReal SymMatrix::max_abs() const {
  BigReal m(0L);
  for (const BigReal& v : tri_) {
    BigReal a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

Matrix::Matrix(int rows, int cols, mpfr_prec_t prec)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, BigReal(0L, prec)) {}

namespace {

mpfr_prec_t entries_prec(const SymMatrix& m) {
  mpfr_prec_t p = kMinPrecisionBits;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j <= i; ++j) p = std::max(p, m.at(i, j).precision_bits());
  return p;
}

}  // namespace

Matrix cholesky(const SymMatrix& m) {
  const int n = m.dim();
  const mpfr_prec_t prec = entries_prec(m);
  Matrix l(n, n, prec);
  for (int j = 0; j < n; ++j) {
    BigReal d = m.at(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d.sign() <= 0) throw NotPositiveDefinite(j);
    l(j, j) = sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      BigReal s = m.at(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

std::vector<BigReal> solve_lower(const Matrix& lower, const std::vector<BigReal>& b) {
  const int n = lower.rows();
  std::vector<BigReal> x(b);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) x[i] -= lower(i, k) * x[k];
    x[i] /= lower(i, i);
  }
  return x;
}

std::vector<BigReal> solve_lower_transposed(const Matrix& lower, const std::vector<BigReal>& b) {
  const int n = lower.rows();
  std::vector<BigReal> x(b);
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= lower(k, i) * x[k];
    x[i] /= lower(i, i);
  }
  return x;
}

SymMatrix whiten(const Matrix& lower, const SymMatrix& a) {
  const int n = lower.rows();
  // C = L^{-1} A (column by column), then B = L^{-1} C^T; B is symmetric
  // up to rounding and we read back only its lower triangle.
  Matrix c(n, n, kMinPrecisionBits);
  std::vector<BigReal> col(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = a.at(i, j);
    std::vector<BigReal> y = solve_lower(lower, col);
    for (int i = 0; i < n; ++i) c(i, j) = std::move(y[static_cast<size_t>(i)]);
  }
  SymMatrix b(n, entries_prec(a));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = c(j, i);
    std::vector<BigReal> y = solve_lower(lower, col);
    for (int i = j; i < n; ++i) b.set(i, j, std::move(y[static_cast<size_t>(i)]));
  }
  return b;
}

MinEig sym_eig_min(const SymMatrix& m, int max_sweeps) {
  const int n = m.dim();
  const mpfr_prec_t prec = entries_prec(m);
  const BigReal scale = m.max_abs();
  const BigReal zero(0L, prec);
  const BigReal one(1L, prec);

  // Working copy (full square) and accumulated rotations.
  Matrix w(n, n, prec);
  Matrix v(n, n, prec);
  for (int i = 0; i < n; ++i) {
    v(i, i) = one;
    for (int j = 0; j < n; ++j) w(i, j) = m.at(i, j);
  }

  const BigReal stop = scale.is_zero() ? BigReal::pow2(-prec, prec)
                                       : scale * BigReal::pow2(-prec + 16, prec);
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    BigReal off(0L, prec);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        BigReal a = abs(w(p, q));
        if (a > off) off = a;
      }
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (abs(w(p, q)) <= stop / BigReal(n * n, prec)) continue;
        // Classic 2x2 rotation annihilating w(p,q).
        BigReal theta = (w(q, q) - w(p, p)) / (BigReal(2L, prec) * w(p, q));
        BigReal t = one / (abs(theta) + sqrt(one + theta * theta));
        if (theta.sign() < 0) t = -t;
        BigReal cth = one / sqrt(one + t * t);
        BigReal sth = t * cth;
        BigReal tau = sth / (one + cth);
        BigReal h = t * w(p, q);

        w(p, p) -= h;
        w(q, q) += h;
        w(p, q) = zero;
        w(q, p) = zero;
        for (int i = 0; i < n; ++i) {
          if (i != p && i != q) {
            BigReal wip = w(i, p);
            BigReal wiq = w(i, q);
            w(i, p) = wip - sth * (wiq + tau * wip);
            w(i, q) = wiq + sth * (wip - tau * wiq);
            w(p, i) = w(i, p);
            w(q, i) = w(i, q);
          }
          BigReal vip = v(i, p);
          BigReal viq = v(i, q);
          v(i, p) = vip - sth * (viq + tau * vip);
          v(i, q) = viq + sth * (vip - tau * viq);
        }
      }
    }
  }
  if (sweep == max_sweeps) {
    throw NoConvergence("jacobi eigensolver: no convergence after " + std::to_string(max_sweeps) +
                        " sweeps (dim " + std::to_string(n) + ")");
  }

  int best = 0;
  for (int i = 1; i < n; ++i)
    if (w(i, i) < w(best, best)) best = i;

  MinEig out{w(best, best), {}, BigReal(0L, prec)};
  out.vec.reserve(static_cast<size_t>(n));
  // Normalize the eigenvector; Jacobi keeps columns orthonormal up to
  // rounding but the certificate math downstream wants it exact-ish.
  BigReal norm2(0L, prec);
  for (int i = 0; i < n; ++i) norm2 += v(i, best) * v(i, best);
  BigReal norm = sqrt(norm2);
  for (int i = 0; i < n; ++i) out.vec.push_back(v(i, best) / norm);

  // Honest residual against the original matrix, floored at the rounding
  // noise level so downstream "within 10 * residual" checks stay meaningful
  // even when the residual is exactly zero (e.g. diagonal input).
  BigReal resid(0L, prec);
  for (int i = 0; i < n; ++i) {
    BigReal row(0L, prec);
    for (int j = 0; j < n; ++j) row += m.at(i, j) * out.vec[static_cast<size_t>(j)];
    row -= out.value * out.vec[static_cast<size_t>(i)];
    BigReal a = abs(row);
    if (a > resid) resid = a;
  }
  BigReal floor_resid = max(scale, one) * BigReal(n, prec) * BigReal::pow2(-prec + 4, prec);
  out.residual = max(resid, floor_resid);
  return out;
}

BigReal bisect_root(const std::function<BigReal(const BigReal&)>& h, BigReal lo, BigReal hi,
                    const BigReal& tol) {
  if (hi < lo) std::swap(lo, hi);
  BigReal flo = h(lo);
  BigReal fhi = h(hi);
  if (flo.is_zero()) return lo;
  if (fhi.is_zero()) return hi;
  if (flo.sign() == fhi.sign()) {
    throw BracketInvalid("bisect_root: h(lo) and h(hi) have the same sign");
  }
  const BigReal two(2L, tol.precision_bits());
  // Width halves every step; cap guards against a tolerance below the
  // resolution of the endpoints' precision.
  long max_iter = 8 * static_cast<long>(std::max({lo.precision_bits(), hi.precision_bits(),
                                                  tol.precision_bits()})) +
                  64;
  for (long it = 0; it < max_iter; ++it) {
    if (hi - lo <= tol) break;
    BigReal mid = (lo + hi) / two;
    BigReal fmid = h(mid);
    if (abs(fmid) <= tol) return mid;
    if (fmid.sign() == flo.sign()) {
      lo = std::move(mid);
      flo = std::move(fmid);
    } else {
      hi = std::move(mid);
    }
  }
  return (lo + hi) / two;
}

}  // namespace sosub
