#pragma once

// Lower bounds for f(p,q,r) = x(p-gamma)^2 + (y-x)q^2 + (1-y)r^2 over
//   p,q,r >= 0,  px + q(y-x) + r(1-y) = beta,  px + q(y-x) >= mu,
// and an independent numeric minimiser to test them against.
//
// Any term whose denominator is zero is taken to be zero, literally.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "bipgirth/error.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

enum class NewineqCase { a, b, c };

using bipgirth::to_string;

inline const char* to_string(NewineqCase c) { return c == NewineqCase::a ? "a" : c == NewineqCase::b ? "b" : "c"; }

template <class T>
struct NewineqInstance {
  T x{}, y{}, beta{}, gamma{}, mu{};

  bool valid() const { return x >= 0 && y >= x && y <= 1 && beta >= 0 && gamma >= 0 && mu >= 0; }
  bool eligible(NewineqCase c) const {
    switch (c) {
      case NewineqCase::a: return beta <= x * gamma;
      case NewineqCase::b: return beta >= x * gamma;
      case NewineqCase::c: return beta >= x * gamma && y * beta + x * (1 - y) * gamma <= mu;
    }
    return false;
  }
};

template <class T>
struct FeasibleTriple {
  T p{}, q{}, r{};
};

inline NewineqInstance<double> to_double(const NewineqInstance<Rational>& in) {
  return {bipgirth::to_double(in.x), bipgirth::to_double(in.y), bipgirth::to_double(in.beta),
          bipgirth::to_double(in.gamma), bipgirth::to_double(in.mu)};
}

namespace detail {

template <class T>
bool near_equal(const T& lhs, const T& rhs) {
  if constexpr (std::is_floating_point_v<T>)
    return std::abs(lhs - rhs) <= 1e-12;
  else
    return lhs == rhs;
}

template <class T>
bool at_least(const T& lhs, const T& rhs) {
  if constexpr (std::is_floating_point_v<T>)
    return lhs >= rhs - 1e-12;
  else
    return lhs >= rhs;
}

/// num/den, or zero when den is zero.
template <class T>
T ratio_or_zero(const T& num, const T& den) {
  if (den == 0) return T(0);
  return T(num / den);
}

}  // namespace detail

template <class T>
T f_value(const NewineqInstance<T>& in, const FeasibleTriple<T>& t) {
  const T w1 = in.x, w2 = in.y - in.x, w3 = 1 - in.y;
  if (t.p < 0 || t.q < 0 || t.r < 0) throw Error(ErrorCode::InfeasibleTriple, "negative coordinate");
  const T head = T(w1 * t.p + w2 * t.q);
  if (!detail::near_equal(T(head + w3 * t.r), in.beta))
    throw Error(ErrorCode::InfeasibleTriple, "px + q(y-x) + r(1-y) != beta");
  if (!detail::at_least(head, in.mu)) throw Error(ErrorCode::InfeasibleTriple, "px + q(y-x) < mu");
  const T dp = T(t.p - in.gamma);
  return T(w1 * dp * dp + w2 * t.q * t.q + w3 * t.r * t.r);
}

template <class T>
T newineq_bound(const NewineqInstance<T>& in, NewineqCase c) {
  if (!in.eligible(c))
    throw Error(ErrorCode::CaseNotApplicable, std::string("case (") + to_string(c) + ") hypothesis fails");
  const T excess = T(in.beta - in.x * in.gamma);
  switch (c) {
    case NewineqCase::a: return detail::ratio_or_zero(T(excess * excess), in.x);
    case NewineqCase::b: return T(excess * excess);
    case NewineqCase::c: {
      const T u = T(in.mu - in.x * in.gamma), v = T(in.beta - in.mu);
      return T(detail::ratio_or_zero(T(u * u), in.y) + detail::ratio_or_zero(T(v * v), T(1 - in.y)));
    }
  }
  return T(0);
}

namespace detail {

/// min over (q,r) of w2 q^2 + w3 r^2 with w2 q + w3 r = c, w2 q >= m, q,r >= 0.
inline std::optional<double> inner_min(double w2, double w3, double c, double m) {
  constexpr double eps = 1e-12;
  if (c < -eps) return std::nullopt;
  c = std::max(c, 0.0);
  if (w2 <= 0 && w3 <= 0) {
    if (c > eps || m > eps) return std::nullopt;
    return 0.0;
  }
  if (w2 <= 0) {  // q carries no weight
    if (m > eps) return std::nullopt;
    double r = c / w3;
    return w3 * r * r;
  }
  if (w3 <= 0) {  // r carries no weight: w2 q = c
    if (c < m - eps) return std::nullopt;
    double q = c / w2;
    return w2 * q * q;
  }
  double lo = std::max(0.0, m / w2), hi = c / w2;
  if (lo > hi + eps) return std::nullopt;
  double q = std::clamp(c / (w2 + w3), lo, std::max(lo, hi));
  double r = std::max(0.0, (c - w2 * q) / w3);
  return w2 * q * q + w3 * r * r;
}

}  // namespace detail

/// Numeric minimum of f over the feasible set, or +infinity if it is empty.
/// p is gridded on [0, P_max] with P_max = 4(beta+gamma+1), the best cell is
/// refined by golden-section search, and for each p the remaining (q,r)
/// problem is solved exactly: it is a one-dimensional convex quadratic.
inline double newineq_min_oracle(const NewineqInstance<double>& in, std::size_t grid_n) {
  if (grid_n < 10) throw Error(ErrorCode::PreconditionViolated, "grid_n must be >= 10");
  const double w1 = in.x, w2 = in.y - in.x, w3 = 1 - in.y;
  const double inf = std::numeric_limits<double>::infinity();
  auto phi = [&](double p) -> double {
    auto inner = detail::inner_min(w2, w3, in.beta - w1 * p, in.mu - w1 * p);
    if (!inner) return inf;
    return w1 * (p - in.gamma) * (p - in.gamma) + *inner;
  };
  if (w1 <= 0) return phi(0.0);  // p has no weight anywhere
  if (w2 <= 0 && w3 <= 0) return phi(in.beta / w1);  // x = y = 1 pins p

  // Feasible p form an interval: p <= beta/x always, and p >= mu/x when q
  // carries no weight. Grid that interval rather than all of [0, P_max].
  const double p_lo = w2 <= 0 ? std::max(0.0, in.mu / w1) : 0.0;
  const double p_max = std::min(4.0 * (in.beta + in.gamma + 1.0), in.beta / w1);
  if (p_lo > p_max) return inf;
  const double step = (p_max - p_lo) / static_cast<double>(grid_n);
  double best = inf;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i <= grid_n; ++i) {
    double v = phi(p_lo + step * static_cast<double>(i));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  if (best == inf) return inf;
  // phi is convex on its (interval) domain; refine around the best grid point.
  double lo = p_lo + step * static_cast<double>(best_i == 0 ? 0 : best_i - 1);
  double hi = std::min(p_max, p_lo + step * static_cast<double>(best_i + 1));
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - golden * (hi - lo), d = lo + golden * (hi - lo);
  double fc = phi(c), fd = phi(d);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - golden * (hi - lo);
      fc = phi(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + golden * (hi - lo);
      fd = phi(d);
    }
    best = std::min({best, fc, fd});
  }
  return std::min({best, phi(lo), phi(hi)});
}

/// Plain two-dimensional grid over (p,q) with r solved from the equality.
/// Much slower and coarser than newineq_min_oracle; an independent check on it.
inline double newineq_grid2d(const NewineqInstance<double>& in, std::size_t grid_n) {
  const std::array<double, 3> w{in.x, in.y - in.x, 1 - in.y};
  const double p_max = 4.0 * (in.beta + in.gamma + 1.0);
  // Grid two coordinates and solve the linear constraint for the heaviest
  // one; dividing by a small weight would amplify the grid spacing.
  const std::size_t e = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  const std::size_t u = (e + 1) % 3, v = (e + 2) % 3;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= grid_n; ++i)
    for (std::size_t j = 0; j <= grid_n; ++j) {
      std::array<double, 3> z{};
      z[u] = p_max * static_cast<double>(i) / static_cast<double>(grid_n);
      z[v] = p_max * static_cast<double>(j) / static_cast<double>(grid_n);
      z[e] = (in.beta - w[u] * z[u] - w[v] * z[v]) / w[e];
      if (z[e] < 0) continue;
      if (w[0] * z[0] + w[1] * z[1] < in.mu - 1e-12) continue;
      best = std::min(best, w[0] * (z[0] - in.gamma) * (z[0] - in.gamma) + w[1] * z[1] * z[1] + w[2] * z[2] * z[2]);
    }
  return best;
}

struct NewineqCaseCheck {
  NewineqCase which;
  double bound = 0;
  double minimum = 0;
  bool holds = false;
};

inline std::vector<NewineqCaseCheck> newineq_case_checks(const NewineqInstance<double>& in,
                                                        std::size_t grid_n = 400) {
  std::vector<NewineqCaseCheck> out;
  double minimum = newineq_min_oracle(in, grid_n);
  for (NewineqCase c : {NewineqCase::a, NewineqCase::b, NewineqCase::c}) {
    if (!in.eligible(c)) continue;
    double bound = newineq_bound(in, c);
    out.push_back({c, bound, minimum, minimum >= bound - 1e-9});
  }
  return out;
}

/// True iff the oracle minimum clears every applicable bound to within 1e-9.
inline bool check_newineq(const NewineqInstance<double>& in) {
  auto checks = newineq_case_checks(in, 400);
  return std::all_of(checks.begin(), checks.end(), [](const NewineqCaseCheck& c) { return c.holds; });
}

}  // namespace bipgirth::lemma
