#ifndef SOSUB_GAMMAFN_HPP
#define SOSUB_GAMMAFN_HPP

#include "sosub/bigreal.hpp"

namespace sosub {

// Euler gamma function for x > 0, accurate to relative error
// 2^(-precision_bits + 8) at the precision carried by x.
//
// Uses Spouge's series with the term count derived from the target
// precision. The series terms alternate in sign and grow to roughly
// 2^(1.9a) before cancelling, so the evaluation runs at an elevated
// internal precision and rounds back down at the end. Coefficient
// tables are cached per target precision; the cache is thread-safe.
//
// Throws std::domain_error for x <= 0.
BigReal gamma_fn(const BigReal& x);

}  // namespace sosub

#endif  // SOSUB_GAMMAFN_HPP
