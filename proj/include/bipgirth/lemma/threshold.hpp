#pragma once

// Integer arithmetic for the large-k argument. The hypothesis
//   k^2 + 2(r+r^2)^2 + 2r^2 > k(r^3/2 + 4r^2 + 4r)
// is doubled to clear the half-integer coefficient.

#include <cstdint>

#include <boost/multiprecision/integer.hpp>

#include "bipgirth/error.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

namespace detail {

/// 2k^2 + 4(r+r^2)^2 + 4r^2 - k(r^3 + 8r^2 + 8r)
inline Integer doubled_gap(const Integer& k, const Integer& r) {
  const Integer rr = r + r * r;
  return 2 * k * k + 4 * rr * rr + 4 * r * r - k * (r * r * r + 8 * r * r + 8 * r);
}

}  // namespace detail

/// Least k with k >= r(r+2) satisfying the doubled hypothesis.
inline std::int64_t threshold_k(std::int64_t r) {
  if (r < 0) throw Error(ErrorCode::PreconditionViolated, "r must be >= 0");
  const Integer R(r);
  Integer k = R * (R + 2);
  if (k < 1) k = 1;  // k is a positive integer
  if (detail::doubled_gap(k, R) > 0) return k.convert_to<std::int64_t>();
  // k lies between the roots of 2k^2 - Bk + C; the answer is the least integer
  // above the larger root (B + sqrt(B^2 - 8C)) / 4. Start just below it.
  const Integer b_coef = R * R * R + 8 * R * R + 8 * R;
  const Integer rr = R + R * R;
  const Integer c_coef = 4 * rr * rr + 4 * R * R;
  const Integer disc = b_coef * b_coef - 8 * c_coef;
  Integer start = (b_coef + boost::multiprecision::sqrt(disc)) / 4 - 2;
  if (start > k) k = start;
  while (detail::doubled_gap(k, R) <= 0) ++k;
  return k.convert_to<std::int64_t>();
}

struct BigkReport {
  bool identity_holds = false;   ///< k^4(beta - E) equals the claimed polynomial
  bool conclusion_holds = false;  ///< E <= beta (what the argument would need)
  Rational expression;           ///< E, the left side of the conclusion
  Rational beta;
  Integer polynomial;            ///< k(r^3/2 + 4r^2 + 4r) - k^2 - 2(r+r^2)^2 - 2r^2, doubled
};

/// Substitutes lambda = (k-r-1)/(2k), beta = 1/k, gamma = r/(2k), mu = (k-r)/k^2,
/// x = 2r/k, y = 1/2 into the conclusion E <= beta and checks that
/// 2k^4(beta - E) = 2k(r^3/2 + 4r^2 + 4r) - 2k^2 - 4(r+r^2)^2 - 4r^2 exactly.
inline BigkReport bigk_simplify_check(std::int64_t k, std::int64_t r) {
  if (r < 0 || k <= r) throw Error(ErrorCode::PreconditionViolated, "need k > r >= 0");
  const Integer K(k), R(r);
  const Rational kq(K), rq(R);
  const Rational lambda = (kq - rq - 1) / (2 * kq);
  const Rational beta = 1 / kq;
  const Rational gamma = rq / (2 * kq);
  const Rational mu = (kq - rq) / (kq * kq);
  const Rational x = 2 * rq / kq;
  const Rational y = make_rational(1, 2);
  const Rational u = mu - x * gamma, v = beta - mu;
  const Rational e = u * u / y + v * v / (1 - y) + 2 * beta * (lambda + gamma) - x * gamma * gamma;

  BigkReport report;
  report.expression = e;
  report.beta = beta;
  report.conclusion_holds = e <= beta;
  report.polynomial = -detail::doubled_gap(K, R);
  const Rational lhs = 2 * kq * kq * kq * kq * (beta - e);
  report.identity_holds = lhs == Rational(report.polynomial);
  return report;
}

}  // namespace bipgirth::lemma
