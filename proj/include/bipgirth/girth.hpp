#pragma once

// Directed girth with a witness cycle.
//
// One level-synchronous BFS per source vertex, frontier expanded a word at a
// time. A BFS from s stops as soon as its frontier meets an in-neighbour of s
// (the shortest cycle through s) or as soon as it can no longer beat the best
// cycle seen so far. Sources are visited in descending out-degree order, which
// tends to find short cycles early and tighten the cutoff.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "bipgirth/digraph.hpp"

namespace bipgirth {

template <class Vertex>
struct CycleWitness {
  std::size_t length = 0;
  /// v0 -> v1 -> ... -> v_{length-1} -> v0
  std::vector<Vertex> vertices;
};

using BipartiteCycle = CycleWitness<VertexRef>;
using GeneralCycle = CycleWitness<std::size_t>;

namespace detail {

inline std::vector<VertexRef> sources_by_out_degree(const BipartiteDigraph& g) {
  std::vector<VertexRef> order;
  order.reserve(g.vertex_count());
  for (Side s : {Side::A, Side::B})
    for (std::size_t i = 0; i < g.side_size(s); ++i) order.push_back({s, i});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexRef x, VertexRef y) { return g.out_degree(x) > g.out_degree(y); });
  return order;
}

/// Length of the shortest cycle through s, if shorter than `bound`.
inline std::optional<std::size_t> shortest_cycle_through(const BipartiteDigraph& g, VertexRef s, std::size_t bound) {
  const DynBitset& closers = g.in(s);
  if (closers.none() || g.out(s).none()) return std::nullopt;
  DynBitset visited[2] = {DynBitset(g.a_size()), DynBitset(g.b_size())};
  Side side = s.side;
  DynBitset frontier(g.side_size(side));
  frontier.set(s.index);
  visited[static_cast<int>(side)].set(s.index);
  for (std::size_t depth = 0;; ++depth) {
    if (depth + 1 >= bound) return std::nullopt;
    if (side != s.side && frontier.intersects(closers)) return depth + 1;
    Side next_side = complement(side);
    DynBitset next(g.side_size(next_side));
    frontier.for_each([&](std::size_t i) { next |= g.out({side, i}); });
    next.subtract(visited[static_cast<int>(next_side)]);
    if (next.none()) return std::nullopt;
    visited[static_cast<int>(next_side)] |= next;
    frontier = std::move(next);
    side = next_side;
  }
}

inline std::optional<std::size_t> shortest_cycle_through(const GeneralDigraph& g, std::size_t s, std::size_t bound) {
  const DynBitset& closers = g.in(s);
  if (closers.none() || g.out(s).none()) return std::nullopt;
  DynBitset visited(g.size());
  DynBitset frontier(g.size());
  frontier.set(s);
  visited.set(s);
  for (std::size_t depth = 0;; ++depth) {
    if (depth + 1 >= bound) return std::nullopt;
    if (frontier.intersects(closers)) return depth + 1;
    DynBitset next(g.size());
    frontier.for_each([&](std::size_t i) { next |= g.out(i); });
    next.subtract(visited);
    if (next.none()) return std::nullopt;
    visited |= next;
    frontier = std::move(next);
  }
}

template <class Graph, class Vertex>
std::optional<std::pair<std::size_t, Vertex>> best_cycle(const Graph& g, const std::vector<Vertex>& order) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Vertex best_source{};
  for (const Vertex& s : order) {
    if (auto len = shortest_cycle_through(g, s, best)) {
      best = *len;
      best_source = s;
      if (best == 2) break;
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return std::pair{best, best_source};
}

inline std::vector<std::size_t> sources_by_out_degree(const GeneralDigraph& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return g.out_degree(x) > g.out_degree(y); });
  return order;
}

}  // namespace detail

/// Shortest directed cycle, or nullopt when g is acyclic. Always even.
inline std::optional<BipartiteCycle> girth(const BipartiteDigraph& g) {
  auto found = detail::best_cycle(g, detail::sources_by_out_degree(g));
  if (!found) return std::nullopt;
  auto [best, best_source] = *found;

  // Recover a witness by scalar BFS with parent pointers from best_source.
  std::vector<VertexRef> parent_a(g.a_size()), parent_b(g.b_size());
  std::vector<char> seen_a(g.a_size(), 0), seen_b(g.b_size(), 0);
  auto parent = [&](VertexRef v) -> VertexRef& { return v.side == Side::A ? parent_a[v.index] : parent_b[v.index]; };
  auto seen = [&](VertexRef v) -> char& { return v.side == Side::A ? seen_a[v.index] : seen_b[v.index]; };
  std::queue<VertexRef> queue;
  queue.push(best_source);
  seen(best_source) = 1;
  std::optional<VertexRef> closer;
  while (!queue.empty() && !closer) {
    VertexRef u = queue.front();
    queue.pop();
    Side other = complement(u.side);
    g.out(u).for_each([&](std::size_t j) {
      VertexRef w{other, j};
      if (seen(w)) return;
      seen(w) = 1;
      parent(w) = u;
      queue.push(w);
    });
    if (u != best_source && g.has_edge(u, best_source)) closer = u;
  }
  BipartiteCycle cycle;
  cycle.length = best;
  for (VertexRef v = *closer; v != best_source; v = parent(v)) cycle.vertices.push_back(v);
  cycle.vertices.push_back(best_source);
  std::reverse(cycle.vertices.begin(), cycle.vertices.end());
  return cycle;
}

inline std::optional<GeneralCycle> girth(const GeneralDigraph& g) {
  auto found = detail::best_cycle(g, detail::sources_by_out_degree(g));
  if (!found) return std::nullopt;
  auto [best, best_source] = *found;

  std::vector<std::size_t> parent(g.size());
  std::vector<char> seen(g.size(), 0);
  std::queue<std::size_t> queue;
  queue.push(best_source);
  seen[best_source] = 1;
  std::optional<std::size_t> closer;
  while (!queue.empty() && !closer) {
    std::size_t u = queue.front();
    queue.pop();
    g.out(u).for_each([&](std::size_t w) {
      if (seen[w]) return;
      seen[w] = 1;
      parent[w] = u;
      queue.push(w);
    });
    if (u != best_source && g.has_edge(u, best_source)) closer = u;
  }
  GeneralCycle cycle;
  cycle.length = best;
  for (std::size_t v = *closer; v != best_source; v = parent[v]) cycle.vertices.push_back(v);
  cycle.vertices.push_back(best_source);
  std::reverse(cycle.vertices.begin(), cycle.vertices.end());
  return cycle;
}

/// Girth without witness recovery.
inline std::optional<std::size_t> girth_length(const BipartiteDigraph& g) {
  auto found = detail::best_cycle(g, detail::sources_by_out_degree(g));
  return found ? std::optional<std::size_t>(found->first) : std::nullopt;
}
inline std::optional<std::size_t> girth_length(const GeneralDigraph& g) {
  auto found = detail::best_cycle(g, detail::sources_by_out_degree(g));
  return found ? std::optional<std::size_t>(found->first) : std::nullopt;
}

}  // namespace bipgirth
