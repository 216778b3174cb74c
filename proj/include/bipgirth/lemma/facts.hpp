#pragma once

// Catalog of one-variable numeric facts, each checked at every point of an
// exact-rational grid. A pass is evidence at the grid resolution, not a proof.
//
// Implications "P => Q" are scanned over the points where P holds; the margin
// there is the slack of Q. Plain inequalities report their slack directly.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipgirth/error.hpp"
#include "bipgirth/lemma/expr.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

struct FactReport {
  std::string fact_id;
  std::string description;
  bool holds_everywhere = false;
  std::optional<Rational> first_violation;  ///< grid point of the first failure
  std::optional<Rational> margin_min;       ///< least slack over non-vacuous points
  Rational grid_step;                       ///< 0 for facts made only of single comparisons
  std::size_t points_checked = 0;
  std::size_t vacuous_points = 0;  ///< premise false
  std::chrono::milliseconds wall_time{0};
};

inline const Rational& delta3() {
  static const Rational v = make_rational(2886, 1000);
  return v;
}
inline const Rational& delta4() {
  static const Rational v = make_rational(34814, 10000);
  return v;
}
inline const Rational& delta_girth_six() {
  static const Rational v = make_rational(5219, 1000);
  return v;
}

inline Rational default_fact_step() { return make_rational(1, 100000); }

inline const std::vector<std::string>& fact_ids() {
  static const std::vector<std::string> ids{"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11"};
  return ids;
}

namespace detail {

struct Interval {
  Rational lo, hi;
  bool lo_open = true, hi_open = false;
};

/// Slack at one point: nullopt when the premise fails (vacuous point).
using PointCheck = std::function<std::optional<Rational>(const Rational&)>;

class Scanner {
 public:
  Scanner(FactReport& report, bool strict) : report_(report), strict_(strict) {}

  void point(const Rational& at, const std::optional<Rational>& slack) {
    ++report_.points_checked;
    if (!slack) {
      ++report_.vacuous_points;
      return;
    }
    if (!report_.margin_min || *slack < *report_.margin_min) report_.margin_min = *slack;
    bool ok = strict_ ? *slack > 0 : *slack >= 0;
    if (!ok && !report_.first_violation) report_.first_violation = at;
  }

  void scan(const Interval& iv, const Rational& step, const PointCheck& check) {
    // grid points lo + i*step inside the interval
    Integer last = floor_int((iv.hi - iv.lo) / step);
    for (Integer i = iv.lo_open ? 1 : 0; i <= last; ++i) {
      Rational at = iv.lo + step * i;
      if (iv.hi_open && at >= iv.hi) break;
      point(at, check(at));
    }
  }

 private:
  FactReport& report_;
  bool strict_;
};

inline Rational q(std::int64_t n, std::int64_t d) { return make_rational(n, d); }

}  // namespace detail

/// Root of (3b - 1/2)(1 - b) = (1 - 2b)b in [1/5, 1/4], bracketed by bisection
/// to the given width.
inline std::pair<Rational, Rational> f1_root_bracket(const Rational& width = detail::q(1, 1000000000)) {
  auto h = [](const Rational& b) { return Rational((3 * b - detail::q(1, 2)) * (1 - b) - (1 - 2 * b) * b); };
  Rational lo = detail::q(1, 5), hi = detail::q(1, 4);
  // h(1/5) < 0 < h(1/4)
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (h(mid) < 0) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

inline FactReport fact_scan(const std::string& id, const Rational& step = default_fact_step()) {
  using detail::q;
  auto start = std::chrono::steady_clock::now();
  FactReport r;
  r.fact_id = id;
  r.grid_step = step;
  if (step <= 0) throw Error(ErrorCode::PreconditionViolated, "grid step must be positive");
  const Rational& d3 = delta3();
  const Rational& d4 = delta4();

  if (id == "F1") {
    r.description = "(3b-1/2)(1-b) >= (1-2b)b implies b > 0.219, b in (0,1/2]";
    detail::Scanner s(r, true);
    s.scan({0, q(1, 2), true, false}, step, [](const Rational& b) -> std::optional<Rational> {
      if ((3 * b - q(1, 2)) * (1 - b) < (1 - 2 * b) * b) return std::nullopt;
      return Rational(b - q(219, 1000));
    });
  } else if (id == "F2") {
    r.description = "b*d3 <= (1-b*d3)/(1-2b) implies b < 0.223, b in (0,1/2)";
    detail::Scanner s(r, true);
    s.scan({0, q(1, 2), true, true}, step, [&](const Rational& b) -> std::optional<Rational> {
      if (b * d3 > (1 - b * d3) / (1 - 2 * b)) return std::nullopt;
      return Rational(q(223, 1000) - b);
    });
  } else if (id == "F3") {
    r.description = "(1-2b)b/(3b-1/2) >= (1-b*d3)/(1-2b) for b in (0.219,0.223)";
    detail::Scanner s(r, false);
    s.scan({q(219, 1000), q(223, 1000), true, true}, step, [&](const Rational& b) -> std::optional<Rational> {
      return Rational((1 - 2 * b) * b / (3 * b - q(1, 2)) - (1 - b * d3) / (1 - 2 * b));
    });
  } else if (id == "F4") {
    r.description =
        "1/(1+d3) < 0.258; 1/2-0.258 = 0.242; a*b >= 0.0624 when 1/4 <= a < 0.258, b >= max(1/2-a,0.242); "
        "2*0.0624*d3 >= 0.36";
    detail::Scanner strict(r, true), loose(r, false);
    strict.point(0, Rational(q(258, 1000) - 1 / (1 + d3)));
    loose.point(0, Rational(q(242, 1000) - (q(1, 2) - q(258, 1000))));
    loose.point(0, Rational((q(1, 2) - q(258, 1000)) - q(242, 1000)));
    // least product over the feasible region is a*max(1/2-a, 0.242)
    loose.scan({q(1, 4), q(258, 1000), false, true}, step, [](const Rational& a) -> std::optional<Rational> {
      Rational b = std::max(Rational(q(1, 2) - a), q(242, 1000));
      return Rational(a * b - q(624, 10000));
    });
    loose.point(0, Rational(2 * q(624, 10000) * d3 - q(36, 100)));
  } else if (id == "F5") {
    r.description = "1 - b*d4 > b/5 + 9/(3+5b) - 2 for b in (0,1/5]";
    detail::Scanner s(r, true);
    s.scan({0, q(1, 5), true, false}, step, [&](const Rational& b) -> std::optional<Rational> {
      return Rational((1 - b * d4) - (b / 5 + 9 / (3 + 5 * b) - 2));
    });
  } else if (id == "F6") {
    r.description =
        "(4/5-2b)b <= (1-b)(1/d4-b) implies b < 0.19, and (2/5-b)(3/5+1/(1-b)) <= (1-b)/2 implies b > 0.17, "
        "b in (0,1/5]";
    detail::Scanner s(r, true);
    const detail::Interval iv{0, q(1, 5), true, false};
    s.scan(iv, step, [&](const Rational& b) -> std::optional<Rational> {
      if ((q(4, 5) - 2 * b) * b > (1 - b) * (1 / d4 - b)) return std::nullopt;
      return Rational(q(19, 100) - b);
    });
    s.scan(iv, step, [&](const Rational& b) -> std::optional<Rational> {
      if ((q(2, 5) - b) * (q(3, 5) + 1 / (1 - b)) > (1 - b) / 2) return std::nullopt;
      return Rational(b - q(17, 100));
    });
  } else if (id == "F7") {
    r.description = "5b/(3+5b) + 3b/5 >= 0.32 and (2/5-b)(3/5+1/(1-b)) >= 0.38 for b in (0.17,0.19)";
    detail::Scanner s(r, false);
    s.scan({q(17, 100), q(19, 100), true, true}, step, [](const Rational& b) -> std::optional<Rational> {
      Rational y = 5 * b / (3 + 5 * b) + 3 * b / 5;
      Rational z = (q(2, 5) - b) * (q(3, 5) + 1 / (1 - b));
      return std::min(Rational(y - q(32, 100)), Rational(z - q(38, 100)));
    });
  } else if (id == "F8") {
    r.description =
        "g*x'(2 - g(1-x')/b) + 2(0.38) + b > 1 with g = 2a-0.38, x' = (b(d4+1)-1/2)/(b(d4+1)-0.32), "
        "for b in (0.17,0.19) and 2/5-b <= a <= 1/2";
    static const Expr xp = Expr::parse("(b*(d4+1) - 1/2) / (b*(d4+1) - 0.32)");
    static const Expr lhs = Expr::parse("g*xp*(2 - g*(1-xp)/b) + 2*0.38 + b");
    detail::Scanner s(r, true);
    // The left side is concave in a (a quadratic in g with a nonpositive
    // leading coefficient), so its minimum over the a-interval sits at an
    // endpoint. A coarse interior grid is scanned as well.
    constexpr int interior = 16;
    s.scan({q(17, 100), q(19, 100), true, true}, step, [&](const Rational& b) -> std::optional<Rational> {
      Expr::Bindings env{{"b", b}, {"d4", d4}};
      env["xp"] = xp.eval(env);
      const Rational a_lo = q(2, 5) - b, a_hi = q(1, 2);
      std::optional<Rational> worst;
      for (int i = 0; i <= interior; ++i) {
        Rational a = a_lo + (a_hi - a_lo) * i / interior;
        env["g"] = 2 * a - q(38, 100);
        Rational slack = lhs.eval(env) - 1;
        if (!worst || slack < *worst) worst = slack;
      }
      return worst;
    });
  } else if (id == "F9") {
    r.description = "(delta/49)/0.3993 >= 0.2667 and 0.2667 > 1 - delta/7 with delta = 5.219";
    static const Expr indeg = Expr::parse("(delta/7)*(1/7)/0.3993 - 0.2667");
    static const Expr gap = Expr::parse("0.2667 - (1 - delta/7)");
    const Expr::Bindings env{{"delta", delta_girth_six()}};
    detail::Scanner loose(r, false), strict(r, true);
    loose.point(0, indeg.eval(env));
    strict.point(0, gap.eval(env));
  } else if (id == "F10") {
    r.description = "p*c <= p^2/2 + p(1-p) implies p <= 2(1-c), p in (0,1], c = (k-r)/k for sample (k,r)";
    detail::Scanner s(r, false);
    const std::vector<std::pair<std::int64_t, std::int64_t>> samples{{10, 1}, {100, 3}, {1000, 10}, {224539, 74}, {4, 2}};
    for (auto [k, rr] : samples) {
      const Rational c = q(k - rr, k);
      s.scan({0, 1, true, false}, step, [&](const Rational& p) -> std::optional<Rational> {
        if (p * c > p * p / 2 + p * (1 - p)) return std::nullopt;
        return Rational(2 * (1 - c) - p);
      });
    }
  } else if (id == "F11") {
    r.description =
        "0.36 + 2b + (6b-0.64)/5 <= 1 iff b <= 0.24 on (0,1/2]; (b-y)/(0.64-y) <= 1/6 iff 5y >= 6b-0.64 on y in (0,0.64)";
    // Equivalences: slack is 0 where both sides agree, -1 where they differ.
    detail::Scanner s(r, false);
    s.scan({0, q(1, 2), true, false}, step, [](const Rational& b) -> std::optional<Rational> {
      bool lhs = q(36, 100) + 2 * b + (6 * b - q(64, 100)) / 5 <= 1;
      bool rhs = b <= q(24, 100);
      return Rational(lhs == rhs ? 0 : -1);
    });
    for (const Rational& b : {q(17, 100), q(1, 5), q(242, 1000), q(1, 4)})
      s.scan({0, q(64, 100), true, true}, step, [&](const Rational& y) -> std::optional<Rational> {
        bool lhs = (b - y) / (q(64, 100) - y) <= q(1, 6);
        bool rhs = 5 * y >= 6 * b - q(64, 100);
        return Rational(lhs == rhs ? 0 : -1);
      });
  } else {
    throw Error(ErrorCode::UnknownFact, "unknown fact '" + id + "'");
  }
  if (id == "F9") r.grid_step = 0;
  r.holds_everywhere = !r.first_violation && r.margin_min.has_value();
  r.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace bipgirth::lemma
