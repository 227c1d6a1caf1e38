#include "sosub/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sosub {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t p) { return std::max(p, kMinPrecisionBits); }

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

BigReal::BigReal() {
  mpfr_init2(v_, kMinPrecisionBits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(int v, mpfr_prec_t prec) : BigReal(static_cast<long>(v), prec) {}

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t prec) {
  BigReal r(0L, prec);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("BigReal: cannot parse \"" + s + "\" as a decimal number");
  }
  return r;
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, o.precision_bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, kMinPrecisionBits);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision_bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::round_to(mpfr_prec_t prec) const {
  BigReal r(0L, prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(static_cast<double>(precision_bits()) * 0.30102999566398119);
    digits = std::max(digits, 5);
  }
  // %.*Re prints `digits` places after the leading digit.
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

BigReal BigReal::operator-() const {
  BigReal r(0L, precision_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(0L, max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(0L, max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(0L, max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(0L, max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal BigReal::pi(mpfr_prec_t prec) {
  BigReal r(0L, clamp_prec(prec));
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e, mpfr_prec_t prec) {
  BigReal r(1L, clamp_prec(prec));
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& a) {
  BigReal r(0L, a.precision_bits());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& a) {
  BigReal r(0L, a.precision_bits());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& a) {
  BigReal r(0L, a.precision_bits());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, const BigReal& e) {
  BigReal r(0L, max_prec(base, e));
  mpfr_pow(r.v_, base.v_, e.v_, MPFR_RNDN);
  return r;
}

BigReal pow_int(const BigReal& base, long e) {
  BigReal r(0L, base.precision_bits());
  mpfr_pow_si(r.v_, base.v_, e, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& a) {
  BigReal r(0L, a.precision_bits());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
const BigReal& min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const BigReal& v) {
  return os << v.to_string(20);
}

}  // namespace sosub
