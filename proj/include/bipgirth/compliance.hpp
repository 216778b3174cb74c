#pragma once

// (alpha, beta)-compliance: every A-vertex has at least beta|B| out-neighbours
// and every B-vertex at least alpha|A|. All comparisons are exact.

#include <algorithm>
#include <cstddef>
#include <limits>

#include "bipgirth/digraph.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth {

struct AlphaBeta {
  Rational alpha;
  Rational beta;

  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

inline std::string to_string(const AlphaBeta& p) {
  return "(" + to_string(p.alpha) + "," + to_string(p.beta) + ")";
}

inline std::size_t min_out_degree(const BipartiteDigraph& g, Side s) {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < g.side_size(s); ++i) m = std::min(m, g.out_degree({s, i}));
  return m;
}

inline bool is_compliant(const BipartiteDigraph& g, const Rational& alpha, const Rational& beta) {
  if (g.is_null()) throw Error(ErrorCode::NullDigraph, "compliance needs both sides nonempty");
  // deg >= beta*|B| with deg an integer is equivalent to deg >= ceil(beta*|B|).
  auto need_a = ceil_int(beta * g.b_size());
  auto need_b = ceil_int(alpha * g.a_size());
  return Integer(min_out_degree(g, Side::A)) >= need_a && Integer(min_out_degree(g, Side::B)) >= need_b;
}

inline bool is_compliant(const BipartiteDigraph& g, const AlphaBeta& p) { return is_compliant(g, p.alpha, p.beta); }

/// The largest (alpha, beta) g complies with, coordinate-wise.
inline AlphaBeta compliance_profile(const BipartiteDigraph& g) {
  if (g.is_null()) throw Error(ErrorCode::NullDigraph, "compliance needs both sides nonempty");
  return {Rational(Integer(min_out_degree(g, Side::B))) / Integer(g.a_size()),
          Rational(Integer(min_out_degree(g, Side::A))) / Integer(g.b_size())};
}

/// Replaces each A-vertex by n_a copies and each B-vertex by n_b copies; copy c
/// of vertex i gets index i*n + c and inherits every adjacency of i.
inline BipartiteDigraph blowup(const BipartiteDigraph& g, std::size_t n_a, std::size_t n_b) {
  if (n_a == 0 || n_b == 0) throw Error(ErrorCode::PreconditionViolated, "blow-up factors must be positive");
  BipartiteDigraph::Builder builder(g.a_size() * n_a, g.b_size() * n_b);
  auto copies = [&](Side s) { return s == Side::A ? n_a : n_b; };
  for (const auto& [u, v] : g.edges())
    for (std::size_t cu = 0; cu < copies(u.side); ++cu)
      for (std::size_t cv = 0; cv < copies(v.side); ++cv)
        builder.add_edge({u.side, u.index * copies(u.side) + cu}, {v.side, v.index * copies(v.side) + cv});
  return std::move(builder).build();
}

}  // namespace bipgirth
