#pragma once

// Exact-distance layers N_i(v) (forward) and M_i(v) (backward), and the
// parity unions N*_i(v) built from them.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bipgirth/bitset.hpp"
#include "bipgirth/digraph.hpp"

namespace bipgirth {

/// A vertex set contained in one side of a bipartite host.
struct SideSet {
  Side side = Side::A;
  DynBitset members;

  SideSet() = default;
  SideSet(Side s, std::size_t side_size) : side(s), members(side_size) {}
  SideSet(Side s, DynBitset bits) : side(s), members(std::move(bits)) {}

  static SideSet whole_side(const BipartiteDigraph& g, Side s) {
    SideSet set(s, g.side_size(s));
    set.members.set_all();
    return set;
  }

  std::size_t size() const { return members.count(); }
  bool empty() const { return members.none(); }
  bool contains(VertexRef v) const { return v.side == side && v.index < members.size() && members.test(v.index); }

  std::vector<VertexRef> vertices() const {
    std::vector<VertexRef> out;
    members.for_each([&](std::size_t i) { out.push_back({side, i}); });
    return out;
  }

  friend bool operator==(const SideSet&, const SideSet&) = default;
};

enum class Direction { forward, backward };

struct LayerProfile {
  VertexRef source;
  Direction direction = Direction::forward;
  /// layers[i] holds the vertices at distance exactly i; layers.size() == max_i + 1.
  std::vector<SideSet> layers;
  std::size_t max_i = 0;

  const SideSet& operator[](std::size_t i) const { return layers.at(i); }
};

namespace detail {

inline LayerProfile expand_layers(const BipartiteDigraph& g, VertexRef v, std::size_t max_i, Direction dir) {
  if (v.index >= g.side_size(v.side)) throw Error(ErrorCode::IndexOutOfRange, to_string(v));
  LayerProfile profile;
  profile.source = v;
  profile.direction = dir;
  profile.max_i = max_i;
  profile.layers.reserve(max_i + 1);

  DynBitset visited[2] = {DynBitset(g.a_size()), DynBitset(g.b_size())};
  SideSet current(v.side, g.side_size(v.side));
  current.members.set(v.index);
  visited[static_cast<int>(v.side)].set(v.index);
  profile.layers.push_back(current);
  for (std::size_t i = 1; i <= max_i; ++i) {
    Side next_side = complement(current.side);
    SideSet next(next_side, g.side_size(next_side));
    current.members.for_each([&](std::size_t j) {
      VertexRef u{current.side, j};
      next.members |= dir == Direction::forward ? g.out(u) : g.in(u);
    });
    next.members.subtract(visited[static_cast<int>(next_side)]);
    visited[static_cast<int>(next_side)] |= next.members;
    profile.layers.push_back(next);
    current = std::move(next);
  }
  return profile;
}

}  // namespace detail

/// N_0(v), ..., N_max_i(v). Layers past the reachable set are empty, but
/// still carry the side their parity dictates.
inline LayerProfile forward_layers(const BipartiteDigraph& g, VertexRef v, std::size_t max_i) {
  return detail::expand_layers(g, v, max_i, Direction::forward);
}

/// M_0(v), ..., M_max_i(v).
inline LayerProfile backward_layers(const BipartiteDigraph& g, VertexRef v, std::size_t max_i) {
  return detail::expand_layers(g, v, max_i, Direction::backward);
}

/// Union of layers j with 1 <= j <= i and j = i (mod 2).
inline SideSet star_union(const LayerProfile& profile, std::size_t i) {
  if (i < 1 || i > profile.max_i)
    throw Error(ErrorCode::IndexOutOfRange, "star_union index " + std::to_string(i));
  SideSet acc = profile.layers[i];
  for (std::size_t j = i % 2 == 0 ? 2 : 1; j < i; j += 2) acc.members |= profile.layers[j].members;
  return acc;
}

}  // namespace bipgirth
