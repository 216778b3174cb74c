#include <gtest/gtest.h>

#include <random>

#include "bipgirth/canonical.hpp"
#include "bipgirth/compliance.hpp"
#include "bipgirth/constructions.hpp"
#include "bipgirth/girth.hpp"
#include "oracles.hpp"

using namespace bipgirth;

TEST(Layered, Examples) {
  EXPECT_EQ(girth_length(layered_cycle(1, 1)), std::optional<std::size_t>(4));
  auto six = layered_cycle(2, 1);
  EXPECT_EQ(canonical_code(six), canonical_code(circulant(2, 1, 1)));
  EXPECT_EQ(compliance_profile(six), (AlphaBeta{make_rational(1, 3), make_rational(1, 3)}));
  auto g = layered_cycle(3, 2);
  EXPECT_EQ(g.vertex_count(), 16u);
  EXPECT_EQ(girth_length(g), std::optional<std::size_t>(8));
  EXPECT_EQ(oracle::shortest_cycle(g), std::optional<std::size_t>(8));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(g.out_degree(a(i)), 2u);
    EXPECT_EQ(g.out_degree(b(i)), 2u);
  }
}

TEST(Layered, GirthAndDegreeTable) {
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t t = 1; t <= 3; ++t) {
      auto g = layered_cycle(k, t);
      EXPECT_EQ(girth_length(g), std::optional<std::size_t>(2 * k + 2));
      const Rational want = Rational(1) / Integer(k + 1);
      EXPECT_EQ(compliance_profile(g), (AlphaBeta{want, want}));
    }
}

TEST(Circulant, Examples) {
  auto six = circulant(2, 1, 1);
  EXPECT_EQ(six, from_edges(3, 3, {{a(0), b(0)}, {a(1), b(1)}, {a(2), b(2)}, {b(0), a(1)}, {b(1), a(2)}, {b(2), a(0)}}));
  auto five = circulant(2, 2, 1);
  EXPECT_EQ(five.a_size(), 5u);
  EXPECT_EQ(compliance_profile(five), (AlphaBeta{make_rational(1, 5), make_rational(2, 5)}));
  EXPECT_GE(*girth_length(five), 6u);
  auto big = circulant(4, 2, 3);
  EXPECT_EQ(big.a_size(), 17u);
  EXPECT_EQ(compliance_profile(big), (AlphaBeta{make_rational(3, 17), make_rational(2, 17)}));
  EXPECT_GT(*girth_length(big), 8u);
}

TEST(Circulant, GirthTableAgainstBruteForce) {
  // Small members only: the enumeration oracle is exponential.
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t t = 1; t <= 2; ++t) {
        auto g = circulant(k, s, t);
        EXPECT_EQ(girth_length(g), oracle::shortest_cycle(g)) << k << s << t;
      }
}

TEST(Circulant, GirthLowerBound) {
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t s = 1; s <= 4; ++s)
      for (std::size_t t = 1; t <= 4; ++t) {
        CirculantParams p{k, s, t};
        auto len = girth_length(circulant(p));
        ASSERT_TRUE(len);
        std::size_t w = s + t - 1;
        EXPECT_GE(*len, 2 * ((p.n() + w - 1) / w));
      }
}

TEST(Offset, Examples) {
  EXPECT_EQ(offset_circulant({3, {0}, {1}}), circulant(2, 1, 1));
  auto g = offset_circulant({5, {0, 1}, {1, 2}});
  for (std::size_t i = 0; i < 5; ++i)
    for (auto v : {a(i), b(i)}) {
      EXPECT_EQ(g.out_degree(v), 2u);
      EXPECT_EQ(g.in_degree(v), 2u);
    }
  auto full = offset_circulant({4, {0, 1, 2, 3}, {0, 1, 2, 3}});
  EXPECT_EQ(full.edges().size(), 32u);
  EXPECT_EQ(girth_length(full), std::optional<std::size_t>(2));
}

TEST(ChReduce, Examples) {
  GeneralDigraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  EXPECT_EQ(canonical_code(ch_reduce(tri)), canonical_code(circulant(2, 1, 1)));

  auto single = ch_reduce(GeneralDigraph(1));
  EXPECT_EQ(single.edges().size(), 1u);
  EXPECT_FALSE(girth_length(single));

  GeneralDigraph k3(3);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v)
      if (u != v) k3.add_edge(u, v);
  EXPECT_EQ(girth_length(k3), std::optional<std::size_t>(2));
  EXPECT_EQ(girth_length(ch_reduce(k3)), std::optional<std::size_t>(4));
  EXPECT_EQ(oracle::shortest_cycle(ch_reduce(k3)), std::optional<std::size_t>(4));

  try {
    ch_reduce(GeneralDigraph{});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NullDigraph);
  }
}

TEST(ChReduce, DoublesGirth) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    auto h = oracle::random_general(1 + rng() % 6, 0.3, rng);
    auto gh = oracle::shortest_cycle(h);
    auto gg = oracle::shortest_cycle(ch_reduce(h));
    ASSERT_EQ(gh.has_value(), gg.has_value());
    if (gh) {
      EXPECT_EQ(*gg, 2 * *gh);
    }
  }
}

TEST(RandomCompliant, Examples) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto g = random_compliant(3, 3, make_rational(1, 3), make_rational(1, 3), seed);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(g.out_degree(a(i)), 1u);
      EXPECT_EQ(g.out_degree(b(i)), 1u);
    }
    auto h = random_compliant(5, 5, make_rational(2, 5), make_rational(1, 5), seed);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(h.out_degree(b(i)), 2u);
      EXPECT_EQ(h.out_degree(a(i)), 1u);
    }
  }
  EXPECT_EQ(random_compliant(9, 7, make_rational(2, 7), make_rational(3, 5), 42),
            random_compliant(9, 7, make_rational(2, 7), make_rational(3, 5), 42));
  try {
    random_compliant(3, 3, make_rational(4, 3), 0, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleDegree);
  }
}

TEST(RandomCompliant, AlwaysCompliant) {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 300; ++it) {
    std::size_t na = 1 + rng() % 12, nb = 1 + rng() % 12;
    Rational al = make_rational(static_cast<std::int64_t>(rng() % 8), 7);
    Rational be = make_rational(static_cast<std::int64_t>(rng() % 8), 7);
    auto g = random_compliant(na, nb, al, be, rng());
    EXPECT_TRUE(is_compliant(g, al, be));
  }
}
