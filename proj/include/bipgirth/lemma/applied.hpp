#pragma once

// The summation inequality built on newineq, and its on-graph form with edge
// sets R and S. Hypotheses are checked on the data, never assumed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bipgirth/digraph.hpp"
#include "bipgirth/error.hpp"
#include "bipgirth/girth.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

template <class T>
struct InequalityParams {
  T x{}, y{}, beta{}, gamma{}, lambda{}, mu{};
};

template <class T>
struct CheckReport {
  bool hypotheses_held = false;
  int failed_bullet = 0;  ///< 1-based; 0 when all hypotheses hold
  std::string failure;
  bool conclusion_held = false;
  T lhs{};
  T rhs{};

  /// A held hypothesis set with a failed conclusion contradicts a proved result.
  bool contradiction() const { return hypotheses_held && !conclusion_held; }
};

namespace detail {

template <class T>
T zero_if_no_denominator(const T& num, const T& den) {
  if (den == 0) return T(0);
  return T(num / den);
}

/// (mu-x*gamma)^2/y + (beta-mu)^2/(1-y) + 2*beta*(lambda+gamma) - x*gamma^2
template <class T>
T applied_bound(const InequalityParams<T>& p) {
  const T u = T(p.mu - p.x * p.gamma), v = T(p.beta - p.mu);
  return T(zero_if_no_denominator(T(u * u), p.y) + zero_if_no_denominator(T(v * v), T(1 - p.y)) +
           2 * p.beta * (p.lambda + p.gamma) - p.x * p.gamma * p.gamma);
}

template <class T>
bool params_in_range(const InequalityParams<T>& p) {
  return p.x >= 0 && p.y >= p.x && p.y <= 1 && p.beta >= 0 && p.gamma >= 0 && p.lambda >= 0 && p.mu >= 0;
}

template <class T>
bool parameter_bullet(const InequalityParams<T>& p, const T& tol) {
  return p.beta >= p.x * p.gamma - tol && p.y * p.beta + p.x * (1 - p.y) * p.gamma <= p.mu + tol;
}

inline std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& members, const char* name) {
  std::vector<bool> in(n, false);
  for (std::size_t v : members) {
    if (v >= n) throw Error(ErrorCode::IndexOutOfRange, std::string(name) + " member " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

}  // namespace detail

struct Sample {
  double a = 0;
  double b = 0;
};

/// Checks sum b^2 + sum 2ab >= bound * |B| (to 1e-9) over samples indexed by B.
/// Throws HypothesisViolated naming the first failing hypothesis:
///   1: sum b = beta|B|;  2: a >= lambda;  3: |X| = x|B| and a >= gamma+lambda off X;
///   4: |Y| = y|B| and sum over Y of b >= mu|B|;  5: beta >= x*gamma and y*beta + x(1-y)gamma <= mu.
inline CheckReport<double> appliedineq_check(const std::vector<Sample>& samples, const InequalityParams<double>& p,
                                             const std::vector<std::size_t>& x_set,
                                             const std::vector<std::size_t>& y_set) {
  constexpr double tol = 1e-9;
  const std::size_t n = samples.size();
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "B must be nonempty");
  if (!detail::params_in_range(p)) throw Error(ErrorCode::HypothesisViolated, "parameters: need 0 <= x <= y <= 1 and all parameters nonnegative");
  for (const auto& s : samples)
    if (s.a < 0 || s.b < 0) throw Error(ErrorCode::HypothesisViolated, "parameters: a(v), b(v) must be nonnegative");
  const auto in_x = detail::membership(n, x_set, "X");
  const auto in_y = detail::membership(n, y_set, "Y");
  const double size = static_cast<double>(n);
  auto fail = [](int bullet, const std::string& why) {
    throw Error(ErrorCode::HypothesisViolated, "bullet " + std::to_string(bullet) + ": " + why);
  };

  double sum_b = 0, sum_y = 0;
  for (std::size_t v = 0; v < n; ++v) {
    sum_b += samples[v].b;
    if (in_y[v]) sum_y += samples[v].b;
  }
  if (std::abs(sum_b - p.beta * size) > tol * std::max(1.0, size)) fail(1, "sum of b(v) != beta|B|");
  for (const auto& s : samples)
    if (s.a < p.lambda - tol) fail(2, "some a(v) < lambda");
  const auto count = [](const std::vector<bool>& in) { return static_cast<double>(std::count(in.begin(), in.end(), true)); };
  if (std::abs(count(in_x) - p.x * size) > tol * std::max(1.0, size)) fail(3, "|X| != x|B|");
  for (std::size_t v = 0; v < n; ++v)
    if (!in_x[v] && samples[v].a < p.gamma + p.lambda - tol) fail(3, "some a(v) < gamma+lambda outside X");
  if (std::abs(count(in_y) - p.y * size) > tol * std::max(1.0, size)) fail(4, "|Y| != y|B|");
  if (sum_y < p.mu * size - tol * std::max(1.0, size)) fail(4, "sum of b(v) over Y < mu|B|");
  if (!detail::parameter_bullet(p, tol)) fail(5, "beta < x*gamma or y*beta + x(1-y)*gamma > mu");

  CheckReport<double> report;
  report.hypotheses_held = true;
  for (const auto& s : samples) report.lhs += s.b * s.b + 2 * s.a * s.b;
  report.rhs = detail::applied_bound(p) * size;
  report.conclusion_held = report.lhs >= report.rhs - tol * std::max(1.0, report.rhs);
  return report;
}

/// Bipartite G with B->A edge sets R and S; a(v) = (a_R(v) + a_S(v)) / (2|A|).
/// Hypotheses, in order:
///   1: beta >= x*gamma and y*beta + x(1-y)gamma <= mu
///   2: every A-vertex has at least beta|B| out-neighbours
///   3: girth >= 4, and no 4-cycle has an edge in R and a different edge in S
///   4: a(v) >= lambda for all v in B
///   5: |X| <= x|B| and a(v) >= gamma + lambda for v in B \ X
///   6: |Y| <= y|B| and at least mu|A||B| edges have head in Y
/// Conclusion: (mu-x*gamma)^2/y + (beta-mu)^2/(1-y) + 2beta(lambda+gamma) - x*gamma^2 <= beta.
/// X and Y hold indices into B.
inline CheckReport<Rational> bellsandwhistles_check(const BipartiteDigraph& g, const std::vector<Edge>& r_edges,
                                                    const std::vector<Edge>& s_edges, const InequalityParams<Rational>& p,
                                                    const std::vector<std::size_t>& x_set,
                                                    const std::vector<std::size_t>& y_set) {
  auto check_set = [&](const std::vector<Edge>& set, const char* name) {
    std::set<Edge> out;
    for (const auto& e : set) {
      if (e.first.side != Side::B || e.second.side != Side::A)
        throw Error(ErrorCode::BadEdgeSets, std::string(name) + " contains " + to_string(e.first) + "->" + to_string(e.second) + ", not a B->A edge");
      if (!g.has_edge(e.first, e.second))
        throw Error(ErrorCode::BadEdgeSets, std::string(name) + " contains " + to_string(e.first) + "->" + to_string(e.second) + ", not an edge of G");
      out.insert(e);
    }
    return out;
  };
  const std::set<Edge> r_set = check_set(r_edges, "R"), s_set = check_set(s_edges, "S");
  if (g.is_null()) throw Error(ErrorCode::NullDigraph, "digraph has no vertices");
  if (!detail::params_in_range(p)) throw Error(ErrorCode::HypothesisViolated, "parameters: need 0 <= x <= y <= 1 and all parameters nonnegative");

  const std::size_t na = g.a_size(), nb = g.b_size();
  const Integer a_size(na), b_size(nb);
  const auto in_x = detail::membership(nb, x_set, "X");
  const auto in_y = detail::membership(nb, y_set, "Y");

  CheckReport<Rational> report;
  report.lhs = detail::applied_bound(p);
  report.rhs = p.beta;
  report.conclusion_held = report.lhs <= report.rhs;
  auto fail = [&](int bullet, std::string why) {
    report.failed_bullet = bullet;
    report.failure = "bullet " + std::to_string(bullet) + ": " + std::move(why);
    return report;
  };

  if (!detail::parameter_bullet(p, Rational(0))) return fail(1, "beta < x*gamma or y*beta + x(1-y)*gamma > mu");
  for (std::size_t i = 0; i < na; ++i)
    if (Rational(Integer(g.out_degree(a(i)))) < p.beta * b_size)
      return fail(2, to_string(a(i)) + " has fewer than beta|B| out-neighbours");
  if (auto len = girth_length(g); len && *len < 4) return fail(3, "girth " + std::to_string(*len) + " < 4");
  // 4-cycles a -> b -> a2 -> b2 -> a; its B->A edges are (b,a2) and (b2,a).
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t bj : g.out(a(i)).indices())
      for (std::size_t i2 : g.out(b(bj)).indices()) {
        if (i2 == i) continue;
        for (std::size_t bj2 : g.out(a(i2)).indices()) {
          if (bj2 == bj || !g.has_edge(b(bj2), a(i))) continue;
          const Edge e1{b(bj), a(i2)}, e2{b(bj2), a(i)};
          if ((r_set.count(e1) && s_set.count(e2)) || (r_set.count(e2) && s_set.count(e1)))
            return fail(3, "4-cycle " + to_string(a(i)) + "," + to_string(b(bj)) + "," + to_string(a(i2)) + "," +
                               to_string(b(bj2)) + " has an R-edge and a different S-edge");
        }
      }

  std::vector<Rational> av(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    std::size_t ar = 0, as = 0;
    for (std::size_t i : g.out(b(j)).indices()) {
      ar += r_set.count(Edge{b(j), a(i)});
      as += s_set.count(Edge{b(j), a(i)});
    }
    av[j] = Rational(Integer(ar + as)) / (2 * a_size);
  }
  for (std::size_t j = 0; j < nb; ++j)
    if (av[j] < p.lambda) return fail(4, "a(" + to_string(b(j)) + ") = " + to_string(av[j]) + " < lambda");
  std::size_t x_count = static_cast<std::size_t>(std::count(in_x.begin(), in_x.end(), true));
  if (Rational(Integer(x_count)) > p.x * b_size) return fail(5, "|X| > x|B|");
  for (std::size_t j = 0; j < nb; ++j)
    if (!in_x[j] && av[j] < p.gamma + p.lambda)
      return fail(5, "a(" + to_string(b(j)) + ") < gamma+lambda outside X");
  std::size_t y_count = static_cast<std::size_t>(std::count(in_y.begin(), in_y.end(), true));
  if (Rational(Integer(y_count)) > p.y * b_size) return fail(6, "|Y| > y|B|");
  std::size_t into_y = 0;
  for (std::size_t j = 0; j < nb; ++j)
    if (in_y[j]) into_y += g.in_degree(b(j));
  if (Rational(Integer(into_y)) < p.mu * a_size * b_size) return fail(6, "fewer than mu|A||B| edges have head in Y");

  report.hypotheses_held = true;
  return report;
}

/// Every B->A edge of g, for use as R or S.
inline std::vector<Edge> b_to_a_edges(const BipartiteDigraph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (e.first.side == Side::B) out.push_back(e);
  return out;
}

struct BellsInput {
  InequalityParams<Rational> params;
  std::vector<std::size_t> x_set, y_set;
};

/// Parameters read off g with x = 0, y = 1, X empty, Y = B, gamma = 0,
/// beta = mu = least A-out-degree over |B|, lambda = least a(v).
inline BellsInput measure_bells_params(const BipartiteDigraph& g, const std::vector<Edge>& r_edges,
                                       const std::vector<Edge>& s_edges) {
  const std::size_t na = g.a_size(), nb = g.b_size();
  if (na == 0 || nb == 0) throw Error(ErrorCode::NullDigraph, "both sides must be nonempty");
  std::set<Edge> r_set(r_edges.begin(), r_edges.end()), s_set(s_edges.begin(), s_edges.end());
  BellsInput in;
  std::size_t min_out = na ? g.out_degree(a(0)) : 0;
  for (std::size_t i = 1; i < na; ++i) min_out = std::min(min_out, g.out_degree(a(i)));
  in.params.beta = Rational(Integer(min_out)) / Integer(nb);
  in.params.mu = in.params.beta;
  in.params.x = 0;
  in.params.y = 1;
  in.params.gamma = 0;
  for (std::size_t j = 0; j < nb; ++j) {
    std::size_t count = 0;
    for (std::size_t i : g.out(b(j)).indices())
      count += r_set.count(Edge{b(j), a(i)}) + s_set.count(Edge{b(j), a(i)});
    Rational av = Rational(Integer(count)) / Integer(2 * na);
    if (j == 0 || av < in.params.lambda) in.params.lambda = av;
    in.y_set.push_back(j);
  }
  return in;
}

}  // namespace bipgirth::lemma
