#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "bipgirth/canonical.hpp"
#include "bipgirth/compliance.hpp"
#include "bipgirth/constructions.hpp"
#include "bipgirth/girth.hpp"
#include "bipgirth/json.hpp"
#include "bipgirth/search.hpp"
#include "oracles.hpp"

using namespace bipgirth;

namespace {

SearchConfig config(std::size_t na, std::size_t nb, std::size_t k, Rational alpha, Rational beta) {
  SearchConfig c;
  c.n_a = na;
  c.n_b = nb;
  c.k = k;
  c.alpha = std::move(alpha);
  c.beta = std::move(beta);
  c.thread_hint = 1;
  return c;
}

/// Number of distinct digraphs obtained from g by permuting each side.
std::size_t orbit_size(const BipartiteDigraph& g) {
  std::vector<std::size_t> pa(g.a_size()), pb(g.b_size());
  std::iota(pa.begin(), pa.end(), 0);
  std::set<std::string> seen;
  do {
    std::iota(pb.begin(), pb.end(), 0);
    do {
      std::vector<Edge> e;
      for (auto [u, v] : g.edges()) {
        auto map = [&](VertexRef w) { return VertexRef{w.side, w.side == Side::A ? pa[w.index] : pb[w.index]}; };
        e.push_back({map(u), map(v)});
      }
      seen.insert(to_edge_list(from_edges(g.a_size(), g.b_size(), e)));
    } while (std::next_permutation(pb.begin(), pb.end()));
  } while (std::next_permutation(pa.begin(), pa.end()));
  return seen.size();
}

/// Every digraph on na x nb with exact out-degrees da (A) and db (B) and
/// girth > 2k, by plain enumeration of all 2^(2*na*nb) edge sets.
std::vector<BipartiteDigraph> brute_force_witnesses(std::size_t na, std::size_t nb, std::size_t da, std::size_t db,
                                                    std::size_t k, bool eulerian = false) {
  std::vector<BipartiteDigraph> out;
  const std::size_t bits = 2 * na * nb;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    auto g = oracle::from_mask(na, nb, m);
    bool ok = true;
    for (std::size_t i = 0; i < na && ok; ++i) ok = g.out_degree(a(i)) == da && (!eulerian || g.in_degree(a(i)) == da);
    for (std::size_t j = 0; j < nb && ok; ++j) ok = g.out_degree(b(j)) == db && (!eulerian || g.in_degree(b(j)) == db);
    if (!ok) continue;
    auto len = oracle::shortest_cycle(g);
    if (len && *len <= 2 * k) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Canonical, Examples) {
  auto six = circulant(2, 1, 1);
  auto relabelled = from_edges(3, 3, {{a(2), b(1)}, {b(1), a(0)}, {a(0), b(2)}, {b(2), a(1)}, {a(1), b(0)}, {b(0), a(2)}});
  EXPECT_EQ(canonical_code(six), canonical_code(relabelled));
  auto chord = from_edges(3, 3, {{a(0), b(0)}, {b(0), a(1)}, {a(1), b(1)}, {b(1), a(2)}, {a(2), b(2)}, {b(2), a(0)}, {a(0), b(1)}});
  EXPECT_NE(canonical_code(six), canonical_code(chord));
  EXPECT_NE(canonical_code(from_edges(2, 3, {})), canonical_code(from_edges(3, 2, {})));
}

TEST(Canonical, MatchesPermutationOracleAtThreeByThree) {
  std::mt19937_64 rng(606);
  std::vector<BipartiteDigraph> sample;
  for (int i = 0; i < 160; ++i) sample.push_back(oracle::from_mask(3, 3, rng() & ((1u << 18) - 1)));
  // Near-duplicates: relabel some members so that equal classes actually occur.
  for (int i = 0; i < 80; ++i) {
    const auto& g = sample[static_cast<std::size_t>(i)];
    std::vector<std::size_t> pa{0, 1, 2}, pb{0, 1, 2};
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
      auto map = [&](VertexRef w) { return VertexRef{w.side, w.side == Side::A ? pa[w.index] : pb[w.index]}; };
      e.push_back({map(u), map(v)});
    }
    sample.push_back(from_edges(3, 3, e));
  }
  std::vector<std::string> codes;
  for (const auto& g : sample) codes.push_back(canonical_code(g));
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      bool same = codes[i] == codes[j];
      equal_pairs += same;
      ASSERT_EQ(same, oracle::isomorphic(sample[i], sample[j])) << to_edge_list(sample[i]) << to_edge_list(sample[j]);
    }
  EXPECT_GE(equal_pairs, 80u);
}

TEST(Canonical, OrbitSumAtTwoByTwo) {
  std::map<std::string, std::size_t> class_count;
  std::map<std::string, std::size_t> class_orbit;
  for (std::uint64_t m = 0; m < 256; ++m) {
    auto g = oracle::from_mask(2, 2, m);
    auto code = canonical_code(g);
    ++class_count[code];
    class_orbit[code] = orbit_size(g);
  }
  std::size_t total = 0;
  for (const auto& [code, n] : class_count) {
    EXPECT_EQ(n, class_orbit[code]);
    total += class_orbit[code];
  }
  EXPECT_EQ(total, 256u);
}

TEST(Search, Examples) {
  auto r = find_counterexample(config(3, 3, 2, make_rational(1, 3), make_rational(1, 3)));
  ASSERT_EQ(r.status, SearchStatus::FoundCounterexample);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(canonical_code(*r.witness), canonical_code(circulant(2, 1, 1)));

  auto eps = make_rational(1, 3) + make_rational(1, 100);
  auto e = find_counterexample(config(3, 3, 2, eps, eps));
  EXPECT_EQ(e.status, SearchStatus::Exhausted);
  EXPECT_FALSE(e.witness);

  auto full = find_counterexample(config(2, 2, 1, 1, 1));
  EXPECT_EQ(full.status, SearchStatus::Exhausted);
}

TEST(Search, InfeasibleConfig) {
  auto expect_infeasible = [](SearchConfig c) {
    try {
      find_counterexample(c);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InfeasibleConfig);
    }
  };
  expect_infeasible(config(0, 3, 2, 0, 0));
  expect_infeasible(config(3, 3, 0, 0, 0));
  expect_infeasible(config(3, 3, 2, make_rational(4, 3), 0));
  auto eu = config(3, 4, 2, make_rational(1, 3), make_rational(1, 4));
  eu.eulerian = true;
  expect_infeasible(eu);
}

TEST(Search, WitnessClassesMatchBruteForce) {
  struct Case {
    std::size_t na, nb, da, db, k;
  };
  for (Case c : {Case{2, 2, 1, 1, 1}, Case{2, 2, 1, 0, 1}, Case{2, 2, 0, 2, 2}, Case{3, 3, 1, 1, 1}, Case{3, 3, 1, 1, 2},
                 Case{3, 3, 2, 1, 1}, Case{3, 3, 1, 2, 2}, Case{2, 3, 2, 1, 1}, Case{3, 2, 1, 1, 2}, Case{3, 3, 2, 2, 1}}) {
    auto cfg = config(c.na, c.nb, c.k, Rational(Integer(c.db)) / Integer(c.na), Rational(Integer(c.da)) / Integer(c.nb));
    cfg.stop_at_first = false;
    auto report = find_counterexample(cfg);
    auto brute = brute_force_witnesses(c.na, c.nb, c.da, c.db, c.k);
    std::set<std::string> want;
    for (const auto& g : brute) want.insert(canonical_code(g));
    EXPECT_EQ(std::set<std::string>(report.witness_codes.begin(), report.witness_codes.end()), want)
        << c.na << "x" << c.nb << " d=" << c.da << "," << c.db << " k=" << c.k;
    EXPECT_EQ(report.canonical_classes_seen, want.size());
    EXPECT_EQ(report.status, want.empty() ? SearchStatus::Exhausted : SearchStatus::FoundCounterexample);

    // coverage certificate: orbit sizes of the classes found add up to the raw count
    std::map<std::string, std::size_t> orbit;
    for (const auto& g : brute) orbit[canonical_code(g)] = orbit_size(g);
    std::size_t covered = 0;
    for (const auto& code : report.witness_codes) covered += orbit[code];
    EXPECT_EQ(covered, brute.size());
  }
}

TEST(Search, EulerianClassesMatchBruteForce) {
  for (std::size_t d = 1; d <= 2; ++d)
    for (std::size_t k = 1; k <= 2; ++k) {
      auto cfg = config(3, 3, k, Rational(Integer(d)) / 3, Rational(Integer(d)) / 3);
      cfg.eulerian = true;
      cfg.stop_at_first = false;
      auto report = find_counterexample(cfg);
      std::set<std::string> want;
      for (const auto& g : brute_force_witnesses(3, 3, d, d, k, true)) want.insert(canonical_code(g));
      EXPECT_EQ(std::set<std::string>(report.witness_codes.begin(), report.witness_codes.end()), want) << d << k;
    }
}

TEST(Search, WitnessesAreSound) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 2}, {5, 2}, {4, 3}, {4, 1}}) {
    auto cfg = config(n, n, k, Rational(1) / Integer(n), Rational(1) / Integer(n));
    cfg.stop_at_first = false;
    auto r = find_counterexample(cfg);
    ASSERT_EQ(r.status, SearchStatus::FoundCounterexample);
    EXPECT_TRUE(is_compliant(*r.witness, cfg.alpha, cfg.beta));
    EXPECT_GT(oracle::shortest_cycle(*r.witness).value_or(1000), 2 * k);
  }
}

TEST(Search, DeterministicAcrossThreadCounts) {
  std::vector<SearchConfig> configs{config(4, 4, 2, make_rational(1, 4), make_rational(1, 2)),
                                    config(5, 5, 2, make_rational(1, 5), make_rational(2, 5)),
                                    config(4, 4, 2, make_rational(1, 2), make_rational(1, 2))};
  auto all = configs[0];
  all.stop_at_first = false;
  configs.push_back(all);
  for (const auto& base : configs) {
    std::string first;
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
      auto c = base;
      c.thread_hint = threads;
      auto r = find_counterexample(c);
      auto j = to_json(r, false).dump();
      if (first.empty()) first = j;
      EXPECT_EQ(j, first) << threads;
    }
  }
}

TEST(Search, ConstructionPointsAreFound) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t t = 1; t <= 2; ++t) {
      CirculantParams p{k, 1, t};
      const std::size_t n = p.n();
      if (n > 7) continue;
      auto c = config(n, n, k, Rational(Integer(t)) / Integer(n), Rational(1) / Integer(n));
      auto r = find_counterexample(c);
      EXPECT_EQ(r.status, SearchStatus::FoundCounterexample) << k << " " << t;
    }
}

TEST(Search, ProvedGoodPointsAreExhausted) {
  // k = 2, n <= 4: every Good grid point realisable at n
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t da = 0; da <= n; ++da)
      for (std::size_t db = 0; db <= n; ++db) {
        AlphaBeta p{Rational(Integer(db)) / Integer(n), Rational(Integer(da)) / Integer(n)};
        bool good = 2 * p.alpha + p.beta > 1 || p.alpha + 2 * p.beta > 1;
        if (!good || p.alpha == 0 || p.beta == 0) continue;
        auto r = find_counterexample(config(n, n, 2, p.alpha, p.beta));
        EXPECT_EQ(r.status, SearchStatus::Exhausted) << n << " " << to_string(p);
      }
}

TEST(Search, SmallVerifications) {
  EXPECT_TRUE(all_exhausted(verify_conjecture_small(2, 3, 1)));
  EXPECT_TRUE(all_exhausted(verify_conjecture_small(1, 3, 1)));
  EXPECT_TRUE(all_exhausted(verify_conjecture_small(3, 4, 1)));
  auto c = config(3, 3, 2, make_rational(2, 3), make_rational(2, 3));
  c.eulerian = true;
  EXPECT_EQ(find_counterexample(c).status, SearchStatus::Exhausted);
  auto c5 = config(5, 5, 2, make_rational(2, 5), make_rational(2, 5));
  c5.eulerian = true;
  EXPECT_EQ(find_counterexample(c5).status, SearchStatus::Exhausted);
  auto c1 = config(2, 2, 1, 1, 1);
  c1.eulerian = true;
  EXPECT_EQ(find_counterexample(c1).status, SearchStatus::Exhausted);
  EXPECT_EQ(forced_degree(3, 2), 2u);
  EXPECT_EQ(forced_degree(4, 2), 2u);
  EXPECT_EQ(forced_degree(6, 2), 3u);
}

TEST(Search, NodeLimit) {
  auto c = config(5, 5, 2, make_rational(2, 5), make_rational(2, 5));
  c.node_limit = 3;
  auto r = find_counterexample(c);
  EXPECT_EQ(r.status, SearchStatus::LimitReached);
  EXPECT_FALSE(r.witness);
}

TEST(Search, RandomizedModeIsSeeded) {
  auto c = config(5, 5, 2, make_rational(1, 5), make_rational(2, 5));
  c.mode = SearchMode::randomized;
  c.seed = 5;
  auto x = find_counterexample(c), y = find_counterexample(c);
  ASSERT_EQ(x.status, SearchStatus::FoundCounterexample);
  EXPECT_EQ(to_json(x, false), to_json(y, false));
  EXPECT_TRUE(is_compliant(*x.witness, c.alpha, c.beta));
  EXPECT_GT(*girth_length(*x.witness), 4u);
}

TEST(Search, JsonReport) {
  auto r = find_counterexample(config(3, 3, 2, make_rational(1, 3), make_rational(1, 3)));
  auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["status"], "FoundCounterexample");
  EXPECT_TRUE(j.contains("nodes_explored"));
  EXPECT_TRUE(j.contains("canonical_classes_seen"));
  EXPECT_TRUE(j.contains("wall_time_ms"));
  EXPECT_EQ(j["config"]["alpha"], "1/3");
  auto back = parse_edge_list(j["witness"].get<std::string>());
  EXPECT_EQ(std::get<BipartiteDigraph>(back), *r.witness);
  auto none = to_json(find_counterexample(config(2, 2, 1, 1, 1)));
  EXPECT_TRUE(none["witness"].is_null());
}
