#ifndef SOSUB_BIGREAL_HPP
#define SOSUB_BIGREAL_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace sosub {

// Values never carry less precision than this.
inline constexpr mpfr_prec_t kMinPrecisionBits = 64;

// Arbitrary-precision real number backed by MPFR.
//
// Every value carries its own working precision. Binary operations are
// evaluated as if in infinite precision and rounded to nearest at the
// larger of the two operand precisions, so identical inputs always give
// bit-identical results. Values are immutable in spirit: all operations
// return new values, and a constructed BigReal is safe to read from any
// number of threads.
class BigReal {
 public:
  BigReal();  // zero at kMinPrecisionBits
  explicit BigReal(double v, mpfr_prec_t prec = kMinPrecisionBits);
  explicit BigReal(long v, mpfr_prec_t prec = kMinPrecisionBits);
  explicit BigReal(int v, mpfr_prec_t prec = kMinPrecisionBits);
  static BigReal from_string(const std::string& s, mpfr_prec_t prec);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
  // Same value rounded (to nearest) at a different precision.
  BigReal round_to(mpfr_prec_t prec) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Scientific-notation decimal string. digits == 0 picks the full
  // precision-derived digit count (floor(prec * log10 2)).
  std::string to_string(int digits = 0) const;

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  static BigReal pi(mpfr_prec_t prec);
  // 2^e, exact; convenient for precision-derived tolerances.
  static BigReal pow2(long e, mpfr_prec_t prec = kMinPrecisionBits);

  // Raw handle for interop (e.g. calling extra mpfr functions in tests).
  const __mpfr_struct* raw() const { return v_; }

 private:
  mpfr_t v_;

  friend BigReal sqrt(const BigReal& a);
  friend BigReal exp(const BigReal& a);
  friend BigReal log(const BigReal& a);
  friend BigReal pow(const BigReal& base, const BigReal& e);
  friend BigReal pow_int(const BigReal& base, long e);
  friend BigReal abs(const BigReal& a);
};

BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal pow(const BigReal& base, const BigReal& e);
BigReal pow_int(const BigReal& base, long e);
BigReal abs(const BigReal& a);
const BigReal& max(const BigReal& a, const BigReal& b);
const BigReal& min(const BigReal& a, const BigReal& b);

std::ostream& operator<<(std::ostream& os, const BigReal& v);

}  // namespace sosub

#endif  // SOSUB_BIGREAL_HPP
