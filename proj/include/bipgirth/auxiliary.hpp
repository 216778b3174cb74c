#pragma once

// Auxiliary digraphs built from a bipartite host.

#include <cstddef>
#include <vector>

#include "bipgirth/digraph.hpp"
#include "bipgirth/layers.hpp"

namespace bipgirth {

/// Digraph on S with s -> t (s != t) whenever s -> w -> t in g for some w in T.
/// Vertex i of the result is the i-th smallest member of S.
inline GeneralDigraph aux_square_digraph(const BipartiteDigraph& g, const SideSet& S, const SideSet& T) {
  if (S.side == T.side) throw Error(ErrorCode::MixedSideSet, "S and T must lie on opposite sides");
  if (S.members.size() != g.side_size(S.side) || T.members.size() != g.side_size(T.side))
    throw Error(ErrorCode::IndexOutOfRange, "vertex set sized for a different host");
  std::vector<std::size_t> members = S.members.indices();
  std::vector<std::size_t> position(g.side_size(S.side), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = i;

  GeneralDigraph h(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    DynBitset via = g.out({S.side, members[i]}) & T.members;
    DynBitset reach(g.side_size(S.side));
    via.for_each([&](std::size_t w) { reach |= g.out({T.side, w}); });
    reach &= S.members;
    reach.for_each([&](std::size_t t) {
      if (t != members[i]) h.add_edge(i, position[t]);
    });
  }
  return h;
}

/// Keeps the A->B edges of g and joins u in B to v in A whenever the
/// g-distance from u to v is at most d (d odd).
inline BipartiteDigraph distance_power(const BipartiteDigraph& g, std::size_t d) {
  if (d == 0 || d % 2 == 0) throw Error(ErrorCode::EvenDistance, "distance must be odd, got " + std::to_string(d));
  BipartiteDigraph::Builder builder(g.a_size(), g.b_size());
  for (std::size_t i = 0; i < g.a_size(); ++i)
    g.out(a(i)).for_each([&](std::size_t j) { builder.add_edge(a(i), b(j)); });
  for (std::size_t j = 0; j < g.b_size(); ++j) {
    SideSet reach = star_union(forward_layers(g, b(j), d), d);
    reach.members.for_each([&](std::size_t i) { builder.add_edge(b(j), a(i)); });
  }
  return std::move(builder).build();
}

}  // namespace bipgirth
