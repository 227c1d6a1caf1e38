#include "sosub/gammafn.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sosub {

namespace {

struct SpougeTable {
  long a = 0;                   // term count
  mpfr_prec_t work_bits = 0;    // internal precision
  std::vector<BigReal> coeff;   // c_0 .. c_{a-1}
};

// Spouge: Gamma(z+1) = (z+a)^(z+1/2) e^(-(z+a)) [c_0 + sum_k c_k/(z+k) + eps],
// |eps| <= a^(-1/2) (2pi)^(-(a+1/2)), valid for z >= 0.
//   c_0 = sqrt(2 pi),  c_k = (-1)^(k-1) (a-k)^(k-1/2) e^(a-k) / (k-1)!
SpougeTable build_table(mpfr_prec_t target_bits) {
  SpougeTable t;
  // Truncation below 2^-(target+16): a * log2(2pi) >= target + 16.
  t.a = static_cast<long>(std::ceil((static_cast<double>(target_bits) + 16.0) / 2.651496129));
  // The alternating sum cancels down from ~2^(1.9a); keep that many guard bits.
  t.work_bits = target_bits + static_cast<mpfr_prec_t>(2 * t.a) + 64;

  const mpfr_prec_t w = t.work_bits;
  t.coeff.reserve(static_cast<size_t>(t.a));
  t.coeff.push_back(sqrt(BigReal(2L, w) * BigReal::pi(w)));
  BigReal factorial(1L, w);
  for (long k = 1; k < t.a; ++k) {
    if (k > 1) factorial *= BigReal(k - 1, w);
    BigReal ak(t.a - k, w);
    BigReal half(0.5, w);
    BigReal c = exp((BigReal(k, w) - half) * log(ak) + ak) / factorial;
    if (k % 2 == 0) c = -c;
    t.coeff.push_back(std::move(c));
  }
  return t;
}

const SpougeTable& table_for(mpfr_prec_t target_bits) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, SpougeTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(target_bits);
  if (it == cache.end()) it = cache.emplace(target_bits, build_table(target_bits)).first;
  return it->second;
}

}  // namespace

BigReal gamma_fn(const BigReal& x) {
  if (x.sign() <= 0) {
    throw std::domain_error("gamma_fn: argument must be positive, got " + x.to_string(10));
  }
  const mpfr_prec_t target = x.precision_bits();
  const SpougeTable& t = table_for(target);
  const mpfr_prec_t w = t.work_bits;

  BigReal xw = x.round_to(w);
  BigReal one(1L, w);
  // The series needs z >= 0 and evaluates Gamma(z+1). For x < 1 take
  // z = x and divide by x at the end (Gamma(x) = Gamma(x+1)/x).
  const bool shifted = xw < one;
  BigReal z = shifted ? xw : xw - one;

  BigReal sum = t.coeff[0];
  for (long k = 1; k < t.a; ++k) {
    sum += t.coeff[static_cast<size_t>(k)] / (z + BigReal(k, w));
  }
  BigReal za = z + BigReal(t.a, w);
  BigReal half(0.5, w);
  BigReal result = exp((z + half) * log(za) - za) * sum;
  if (shifted) result /= xw;
  return result.round_to(target);
}

}  // namespace sosub
