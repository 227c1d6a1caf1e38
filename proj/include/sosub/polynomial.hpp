#ifndef SOSUB_POLYNOMIAL_HPP
#define SOSUB_POLYNOMIAL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sosub/bigreal.hpp"

namespace sosub {

struct VarMismatch : std::invalid_argument {
  explicit VarMismatch(const std::string& what_) : std::invalid_argument(what_) {}
};
struct DimMismatch : std::invalid_argument {
  explicit DimMismatch(const std::string& what_) : std::invalid_argument(what_) {}
};
struct ZeroScale : std::invalid_argument {
  explicit ZeroScale(const std::string& what_) : std::invalid_argument(what_) {}
};
struct PolyParseError : std::invalid_argument {
  explicit PolyParseError(const std::string& what_) : std::invalid_argument(what_) {}
};

// Exponent vector of a monomial; one entry per variable.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
  static MultiIndex zero(int n_vars) { return MultiIndex(std::vector<unsigned>(n_vars, 0u)); }

  int n_vars() const { return static_cast<int>(e_.size()); }
  unsigned operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<unsigned>& exponents() const { return e_; }
  int total_degree() const;

  MultiIndex operator+(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

 private:
  std::vector<unsigned> e_;
};

// Graded-lexicographic order: total degree first, then lexicographic on
// the exponent vector. This is the canonical monomial order everywhere
// (moment-matrix bases, term iteration, printing).
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Sparse multivariate polynomial with BigReal coefficients. Zero
// coefficients are never stored; term iteration follows graded-lex order.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, BigReal, GrlexLess>;

  // Degree of the zero polynomial (stands in for minus infinity).
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(int n_vars = 1);
  static Polynomial constant(int n_vars, BigReal c);
  static Polynomial monomial(int n_vars, const MultiIndex& idx, BigReal c);
  // Hx^k in a single variable ring (helper for the univariate paths).
  static Polynomial univariate_power(unsigned k, BigReal c);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  // Accumulates c onto the coefficient of idx, dropping the term if the
  // result is zero.
  void add_term(const MultiIndex& idx, const BigReal& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;  // exact convolution
  Polynomial operator*(const BigReal& c) const;
  Polynomial operator/(const BigReal& c) const;

  // p^k by repeated squaring, k >= 0.
  Polynomial pow(unsigned k) const;
  BigReal eval(const std::vector<BigReal>& point) const;
  // q(x) = p(c x): coefficient of each monomial scaled by c^degree.
  Polynomial scale_variables(const BigReal& c) const;
  Polynomial derivative(int var) const;

  // Text form "x1^2 + 3.5*x1^4*x2" (whitespace-insensitive, '^' powers,
  // variables x1..xn). n_vars == 0 infers the variable count from the
  // highest index mentioned (at least 1).
  static Polynomial parse(const std::string& text, mpfr_prec_t prec, int n_vars = 0);
  std::string to_string(int digits = 17) const;

  // Coefficients rounded to a common working precision.
  Polynomial round_to(mpfr_prec_t prec) const;

 private:
  void check_same_ring(const Polynomial& o) const;
  int n_vars_;
  TermMap terms_;
};

// s(f) for univariate s: substitute f for the variable of s.
Polynomial compose_univariate(const Polynomial& s, const Polynomial& f);

}  // namespace sosub

#endif  // SOSUB_POLYNOMIAL_HPP
