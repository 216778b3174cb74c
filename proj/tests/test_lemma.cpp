#include <gtest/gtest.h>

#include <cmath>

#include "bipgirth/constructions.hpp"
#include "bipgirth/auxiliary.hpp"
#include "bipgirth/lemma/applied.hpp"
#include "bipgirth/lemma/delta.hpp"
#include "bipgirth/lemma/expr.hpp"
#include "bipgirth/lemma/facts.hpp"
#include "bipgirth/lemma/newineq.hpp"
#include "bipgirth/lemma/stress.hpp"
#include "bipgirth/lemma/threshold.hpp"

using namespace bipgirth;
using namespace bipgirth::lemma;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return make_rational(n, d); }

template <class F>
void expect_error(ErrorCode code, F&& f, const std::string& fragment = "") {
  try {
    f();
    ADD_FAILURE() << "expected " << bipgirth::to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    if (!fragment.empty()) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  }
}

bool has_entry(const std::vector<DeltaEntry>& t, const Rational& delta, std::size_t girth) {
  for (const auto& e : t)
    if (e.delta == delta && e.girth_bound == girth) return true;
  return false;
}

// Plain 128-bit scan for the least k >= max(r(r+2), 1) with
// 2k^2 + 4(r+r^2)^2 + 4r^2 > k(r^3 + 8r^2 + 8r).
std::int64_t threshold_scan(std::int64_t r) {
  using i128 = __int128;
  i128 R = r;
  i128 k = std::max<i128>(R * (R + 2), 1);
  for (;; ++k) {
    i128 lhs = 2 * k * k + 4 * (R + R * R) * (R + R * R) + 4 * R * R;
    i128 rhs = k * (R * R * R + 8 * R * R + 8 * R);
    if (lhs > rhs) return static_cast<std::int64_t>(k);
  }
}

}  // namespace

TEST(DeltaTable, Examples) {
  auto t3 = delta_table(3);
  EXPECT_TRUE(has_entry(t3, q(2886, 1000), 3));
  EXPECT_TRUE(has_entry(t3, q(9, 4), 3));
  EXPECT_TRUE(has_entry(delta_table(100), Rational(26), 99));
  auto t1 = delta_table(1);
  ASSERT_EQ(t1.size(), 1u);
  EXPECT_EQ(t1[0].delta, q(3, 4));
  EXPECT_EQ(t1[0].girth_bound, 1u);
  auto t4 = delta_table(4);
  EXPECT_TRUE(has_entry(t4, q(34814, 10000), 4));
  auto t6 = delta_table(6);
  bool claimed = false;
  for (const auto& e : t6)
    if (e.delta == q(5219, 1000)) claimed = e.claimed_only && e.girth_bound == 6;
  EXPECT_TRUE(claimed);
  EXPECT_EQ(delta_table(74).size(), 1u);
  EXPECT_EQ(delta_table(75).size(), 2u);
}

TEST(DeltaTable, ForcingGirthAtMost) {
  auto d = deltas_forcing_girth_at_most(4);
  EXPECT_TRUE(has_entry(d, q(2886, 1000), 3));
  EXPECT_TRUE(has_entry(d, q(34814, 10000), 4));
  for (const auto& e : d) EXPECT_LE(e.girth_bound, 4u);
}

TEST(Newineq, FValue) {
  NewineqInstance<Rational> one{1, 1, q(1, 5), 0, 0};
  EXPECT_EQ(f_value(one, {q(1, 5), 0, 0}), q(1, 25));
  NewineqInstance<Rational> zero{0, 1, q(3, 10), q(1, 2), 0};
  EXPECT_EQ(f_value(zero, {7, q(3, 10), 11}), q(9, 100));
  expect_error(ErrorCode::InfeasibleTriple, [&] { f_value(one, {q(1, 4), 0, 0}); });
  expect_error(ErrorCode::InfeasibleTriple, [&] { f_value(one, {q(-1, 4), 0, 0}); });
  // sums to beta but px + q(y-x) = 0 < mu
  NewineqInstance<Rational> needs_mu{q(1, 2), q(1, 2), q(1, 4), 0, q(1, 5)};
  expect_error(ErrorCode::InfeasibleTriple, [&] { f_value(needs_mu, {0, 0, q(1, 2)}); });
}

TEST(Newineq, FValueAtBigkInstance) {
  // k = 8, r = 1: x = 1/4, y = 1/2, beta = 1/8, gamma = 1/16, mu = 7/64.
  NewineqInstance<Rational> in{q(1, 4), q(1, 2), q(1, 8), q(1, 16), q(7, 64)};
  // p/4 + q/4 + r/2 = 1/8 and p/4 + q/4 = 7/64 = mu
  FeasibleTriple<Rational> t{q(1, 4), q(3, 16), q(1, 32)};
  // hand expansion: (1/4)(3/16)^2 + (1/4)(3/16)^2 + (1/2)(1/32)^2
  Rational want = q(1, 4) * q(9, 256) + q(1, 4) * q(9, 256) + q(1, 2) * q(1, 1024);
  EXPECT_EQ(f_value(in, t), want);
  EXPECT_EQ(want, q(37, 2048));
  // this triple attains the case (c) bound exactly
  EXPECT_EQ(f_value(in, t), newineq_bound(in, NewineqCase::c));
}

TEST(Newineq, BoundExamples) {
  NewineqInstance<Rational> a{1, 1, q(1, 5), q(1, 2), 0};
  EXPECT_EQ(newineq_bound(a, NewineqCase::a), q(9, 100));
  NewineqInstance<Rational> b{0, q(1, 2), q(3, 10), q(17, 3), 0};
  EXPECT_EQ(newineq_bound(b, NewineqCase::b), q(9, 100));
  NewineqInstance<Rational> c{q(1, 4), q(1, 2), q(1, 8), q(1, 16), q(7, 64)};
  EXPECT_EQ(newineq_bound(c, NewineqCase::c), q(74, 4096));
  expect_error(ErrorCode::CaseNotApplicable, [&] { newineq_bound(a, NewineqCase::b); });
  // zero denominators: x = 0 in case a needs beta <= 0
  NewineqInstance<Rational> degenerate{0, 0, 0, q(1, 3), 0};
  EXPECT_EQ(newineq_bound(degenerate, NewineqCase::a), 0);
  NewineqInstance<Rational> y_one{0, 1, q(1, 3), 0, q(1, 3)};
  EXPECT_EQ(newineq_bound(y_one, NewineqCase::c), q(1, 9));
}

TEST(Newineq, OracleExamples) {
  NewineqInstance<double> b{0, 0.5, 0.3, 0.2, 0};
  EXPECT_NEAR(newineq_min_oracle(b, 400), 0.09, 1e-6);
  NewineqInstance<double> a{1, 1, 0.2, 0.5, 0};
  EXPECT_NEAR(newineq_min_oracle(a, 400), 0.09, 1e-6);
  for (double x : {0.0, 0.2, 0.5})
    for (double y : {0.5, 0.7, 1.0}) {
      NewineqInstance<double> m{x, y, 0.37, 0, 0};
      EXPECT_GE(newineq_min_oracle(m, 400), 0.37 * 0.37 - 1e-6);
    }
  expect_error(ErrorCode::PreconditionViolated, [&] { newineq_min_oracle(b, 9); });
  for (auto inst : {b, a, to_double(NewineqInstance<Rational>{q(1, 4), q(1, 2), q(1, 8), q(1, 16), q(7, 64)})})
    EXPECT_TRUE(check_newineq(inst));
}

TEST(Newineq, OracleAgreesWithTwoDimensionalGrid) {
  std::size_t compared = 0;
  for (auto c : {NewineqCase::a, NewineqCase::b, NewineqCase::c})
    for (std::size_t i = 0; i < 40; ++i) {
      auto rng = lemma::detail::instance_rng(31, i);
      auto inst = random_newineq_instance(c, rng);
      double fine = newineq_min_oracle(inst, 400);
      double coarse = newineq_grid2d(inst, 300);
      if (!std::isfinite(fine) || !std::isfinite(coarse)) continue;
      ++compared;
      // the grid only samples feasible points, so it can never undercut the true minimum
      EXPECT_LE(fine, coarse + 1e-9);
      EXPECT_NEAR(fine, coarse, 5e-2 * (1 + coarse));
    }
  EXPECT_GT(compared, 60u);
}

TEST(Newineq, ExactCaseCRecoversEquality) {
  // With x = y the q-term drops out and the minimiser sits on px = mu, where
  // f equals the case (c) bound.
  NewineqInstance<double> in{0.5, 0.5, 0.3, 0.1, 0.25};
  ASSERT_TRUE(in.eligible(NewineqCase::c));
  double bound = newineq_bound(in, NewineqCase::c);
  EXPECT_NEAR(newineq_min_oracle(in, 400), bound, 1e-6);
}

TEST(Newineq, SmallStress) {
  for (auto c : {NewineqCase::a, NewineqCase::b, NewineqCase::c}) {
    auto r = run_newineq_stress(c, 2000, 7, default_thread_count());
    EXPECT_EQ(r.violations, 0u) << to_string(c);
    EXPECT_EQ(r.x_zero_mismatch, 0u);
  }
}

TEST(Applied, Examples) {
  InequalityParams<double> eq{0, 1, 0.25, 0, 0.25, 0.25};
  std::vector<Sample> four(4, Sample{0.25, 0.25});
  auto r = appliedineq_check(four, eq, {}, {0, 1, 2, 3});
  EXPECT_TRUE(r.hypotheses_held);
  EXPECT_TRUE(r.conclusion_held);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
  EXPECT_NEAR(r.lhs, 0.75, 1e-12);

  std::vector<Sample> two{{0.25, 0.5}, {0.25, 0}};
  auto s = appliedineq_check(two, eq, {}, {0, 1});
  EXPECT_TRUE(s.conclusion_held);
  EXPECT_NEAR(s.lhs, 0.5, 1e-12);
  EXPECT_NEAR(s.rhs, 0.375, 1e-12);
  EXPECT_GT(s.lhs, s.rhs);

  std::vector<Sample> off{{0.25, 0.5}, {0.25, 0.5}};
  expect_error(ErrorCode::HypothesisViolated, [&] { appliedineq_check(off, eq, {}, {0, 1}); }, "bullet 1");
  std::vector<Sample> low_a{{0.1, 0.25}, {0.25, 0.25}};
  expect_error(ErrorCode::HypothesisViolated, [&] { appliedineq_check(low_a, eq, {}, {0, 1}); }, "bullet 2");
}

TEST(Applied, Stress) {
  auto r = run_appliedineq_stress(10000, 3, default_thread_count());
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GT(r.equality_count, 900u);
  EXPECT_LT(r.equality_max_slack, 1e-9);
  EXPECT_LT(r.rejected, 100u);
}

TEST(Bells, Examples) {
  // distance_power of the n = 5 member of the family, d = 3
  auto h = distance_power(circulant(4, 1, 1), 3);
  auto edges = b_to_a_edges(h);
  auto in = measure_bells_params(h, edges, edges);
  auto r = bellsandwhistles_check(h, edges, edges, in.params, in.x_set, in.y_set);
  EXPECT_TRUE(r.hypotheses_held) << r.failure;
  EXPECT_TRUE(r.conclusion_held);

  auto six = circulant(2, 1, 1);
  auto e6 = b_to_a_edges(six);
  auto in6 = measure_bells_params(six, e6, e6);
  EXPECT_EQ(in6.params.beta, q(1, 3));
  EXPECT_EQ(in6.params.mu, q(1, 3));
  auto r6 = bellsandwhistles_check(six, e6, e6, in6.params, in6.x_set, in6.y_set);
  EXPECT_TRUE(r6.hypotheses_held) << r6.failure;
  EXPECT_TRUE(r6.conclusion_held);
  EXPECT_LE(r6.lhs, r6.rhs);
}

TEST(Bells, MixedFourCycleFailsBulletThree) {
  // a0 -> b0 -> a1 -> b1 -> a0 with b0->a1 in R and b1->a0 in S only
  auto g = from_edges(2, 2, {{a(0), b(0)}, {b(0), a(1)}, {a(1), b(1)}, {b(1), a(0)}});
  std::vector<Edge> r{{b(0), a(1)}}, s{{b(1), a(0)}};
  InequalityParams<Rational> p{0, 1, q(1, 2), 0, 0, q(1, 2)};
  auto rep = bellsandwhistles_check(g, r, s, p, {}, {0, 1});
  EXPECT_FALSE(rep.hypotheses_held);
  EXPECT_EQ(rep.failed_bullet, 3);
  EXPECT_FALSE(rep.contradiction());
}

TEST(Bells, BadEdgeSets) {
  auto g = circulant(2, 1, 1);
  InequalityParams<Rational> p{0, 1, q(1, 3), 0, 0, q(1, 3)};
  expect_error(ErrorCode::BadEdgeSets, [&] { bellsandwhistles_check(g, {{a(0), b(0)}}, {}, p, {}, {0}); });
  expect_error(ErrorCode::BadEdgeSets, [&] { bellsandwhistles_check(g, {{b(0), a(0)}}, {}, p, {}, {0}); });
}

TEST(Bells, Corpus) {
  auto r = run_bells_corpus(construction_corpus(), default_thread_count());
  EXPECT_EQ(r.contradictions, 0u);
  EXPECT_GT(r.hypotheses_held, 100u);
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold_k(0), 1);
  EXPECT_EQ(threshold_k(1), 8);
  EXPECT_EQ(threshold_k(1), threshold_scan(1));
}

TEST(Threshold, MatchesIntegerScan) {
  for (std::int64_t r = 0; r <= 100; ++r) EXPECT_EQ(threshold_k(r), threshold_scan(r)) << r;
  EXPECT_EQ(threshold_scan(74), 224538);
}

TEST(Threshold, MonotoneOverTwoToHundred) {
  for (std::int64_t r = 2; r < 100; ++r) EXPECT_LE(threshold_k(r), threshold_k(r + 1)) << r;
}

TEST(Threshold, EveryKFrom224539Works) {
  // The stated requirement k > 224538 is sufficient: the doubled gap stays
  // positive from there on (it is an upward parabola past its larger root).
  const Integer r(74);
  for (std::int64_t k = 224539; k < 224539 + 1000; ++k) EXPECT_GT(lemma::detail::doubled_gap(Integer(k), r), 0);
  EXPECT_GT(lemma::detail::doubled_gap(Integer(224538), r), 0);
  EXPECT_LE(lemma::detail::doubled_gap(Integer(224537), r), 0);
}

TEST(Bigk, Examples) {
  auto big = bigk_simplify_check(224539, 74);
  EXPECT_TRUE(big.identity_holds);
  EXPECT_FALSE(big.conclusion_holds);
  auto ten = bigk_simplify_check(10, 1);
  EXPECT_TRUE(ten.identity_holds);
  auto two = bigk_simplify_check(2, 0);
  EXPECT_TRUE(two.identity_holds);
  EXPECT_EQ(two.polynomial, -8);
  expect_error(ErrorCode::PreconditionViolated, [] { bigk_simplify_check(3, 3); });
}

TEST(Bigk, IdentityOnAGrid) {
  for (std::int64_t r = 0; r <= 12; ++r)
    for (std::int64_t k = r + 1; k <= r + 300; k += 7) {
      auto rep = bigk_simplify_check(k, r);
      EXPECT_TRUE(rep.identity_holds) << k << "," << r;
      EXPECT_EQ(rep.conclusion_holds, rep.polynomial >= 0) << k << "," << r;
    }
}

TEST(Bigk, MatchesNewineqInstanceAtEight) {
  // the case (c) example instance is the substitution at (k, r) = (8, 1)
  auto rep = bigk_simplify_check(8, 1);
  Rational lambda = q(6, 16), beta = q(1, 8), gamma = q(1, 16), x = q(1, 4);
  Rational e = q(74, 4096) + 2 * beta * (lambda + gamma) - x * gamma * gamma;
  EXPECT_EQ(rep.expression, e);
}

TEST(Expr, Parse) {
  EXPECT_EQ(Expr::parse("1 + 2 * 3").eval({}), 7);
  EXPECT_EQ(Expr::parse("(1 + 2) * 3").eval({}), 9);
  EXPECT_EQ(Expr::parse("-2 - -3").eval({}), 1);
  EXPECT_EQ(Expr::parse("0.38").eval({}), q(38, 100));
  EXPECT_EQ(Expr::parse("1/3 + 1/6").eval({}), q(1, 2));
  EXPECT_EQ(Expr::parse("8 / 2 / 2").eval({}), 2);
  EXPECT_EQ(Expr::parse("10 - 4 - 3").eval({}), 3);
  EXPECT_EQ(Expr::parse("2*(b - 0.5)").eval({{"b", q(3, 4)}}), q(1, 2));
  expect_error(ErrorCode::ParseError, [] { Expr::parse("1 +"); });
  expect_error(ErrorCode::ParseError, [] { Expr::parse("(1"); });
  expect_error(ErrorCode::ParseError, [] { Expr::parse("1 2"); });
  expect_error(ErrorCode::PreconditionViolated, [] { Expr::parse("x").eval({}); });
  expect_error(ErrorCode::PreconditionViolated, [] { Expr::parse("1/(2-2)").eval({}); });
}

TEST(Facts, F1RootBracket) {
  auto [lo, hi] = f1_root_bracket();
  EXPECT_LE(hi - lo, q(1, 1000000000));
  // closed form: b^2 - (5/2) b + 1/2 = 0
  double root = (2.5 - std::sqrt(2.5 * 2.5 - 2.0)) / 2.0;
  EXPECT_LE(to_double(lo), root + 1e-12);
  EXPECT_GE(to_double(hi), root - 1e-12);
  EXPECT_GT(lo, q(2191, 10000));
  EXPECT_LT(hi, q(2193, 10000));
  EXPECT_GT(lo, q(219, 1000));
}

TEST(Facts, F4SingleComparison) {
  EXPECT_LT(Rational(1000), 258 * (1000 + Rational(2886)));
  auto r = fact_scan("F4");
  EXPECT_TRUE(r.holds_everywhere);
}

TEST(Facts, CoarseScanOfEveryFact) {
  for (const auto& id : fact_ids()) {
    auto r = fact_scan(id, q(1, 1000));
    EXPECT_TRUE(r.holds_everywhere) << id;
    EXPECT_FALSE(r.first_violation) << id;
    if (r.margin_min) {
      EXPECT_GE(*r.margin_min, 0) << id;
    }
  }
  expect_error(ErrorCode::UnknownFact, [] { fact_scan("F12"); });
}

TEST(Facts, ScanDetectsAFalseClaim) {
  // Evaluating F5's two sides independently: at beta = 1/5 the margin is positive.
  Rational b = q(1, 5);
  Rational lhs = 1 - b * q(34814, 10000);
  Rational rhs = b / 5 + 9 / (3 + 5 * b) - 2;
  EXPECT_GT(lhs, rhs);
  // and F5 fails if delta4 were 4: 1 - 4/5 = 1/5 < 1/25 + 9/4 - 2 = 29/100
  EXPECT_LT(1 - b * 4, rhs);
}

TEST(Facts, F5MarginIsPositive) {
  auto r = fact_scan("F5");
  ASSERT_TRUE(r.margin_min);
  EXPECT_GT(*r.margin_min, 0);
  EXPECT_TRUE(r.holds_everywhere);
}
