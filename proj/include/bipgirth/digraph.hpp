#pragma once

// Bipartite and general digraphs with bit-packed adjacency.
//
// A BipartiteDigraph stores, for every vertex, its out- and in-neighbourhood
// as a bitset over the opposite side, so bipartiteness is structural: there
// is no way to express an edge inside one side. Both types are immutable once
// built; use the builders to assemble them.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bipgirth/bitset.hpp"
#include "bipgirth/error.hpp"

namespace bipgirth {

enum class Side : unsigned char { A = 0, B = 1 };

constexpr Side complement(Side s) noexcept { return s == Side::A ? Side::B : Side::A; }
constexpr char side_char(Side s) noexcept { return s == Side::A ? 'A' : 'B'; }

struct VertexRef {
  Side side = Side::A;
  std::size_t index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

inline VertexRef a(std::size_t i) { return {Side::A, i}; }
inline VertexRef b(std::size_t i) { return {Side::B, i}; }

inline std::string to_string(VertexRef v) { return side_char(v.side) + std::to_string(v.index); }

/// Parses "A3" / "B0".
inline VertexRef parse_vertex(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'A' && text[0] != 'B'))
    throw Error(ErrorCode::ParseError, "expected vertex like A3 or B0, got '" + text + "'");
  for (std::size_t i = 1; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw Error(ErrorCode::ParseError, "bad vertex index in '" + text + "'");
  return {text[0] == 'A' ? Side::A : Side::B, std::stoul(text.substr(1))};
}

using Edge = std::pair<VertexRef, VertexRef>;

class BipartiteDigraph {
 public:
  class Builder;

  BipartiteDigraph() = default;

  std::size_t a_size() const noexcept { return a_size_; }
  std::size_t b_size() const noexcept { return b_size_; }
  std::size_t side_size(Side s) const noexcept { return s == Side::A ? a_size_ : b_size_; }
  std::size_t vertex_count() const noexcept { return a_size_ + b_size_; }
  bool is_null() const noexcept { return a_size_ == 0 || b_size_ == 0; }

  /// Out-neighbours of v, as a bitset over the opposite side.
  const DynBitset& out(VertexRef v) const { return rows(v.side, out_a_, out_b_)[checked(v)]; }
  /// In-neighbours of v, as a bitset over the opposite side.
  const DynBitset& in(VertexRef v) const { return rows(v.side, in_a_, in_b_)[checked(v)]; }

  std::size_t out_degree(VertexRef v) const { return out(v).count(); }
  std::size_t in_degree(VertexRef v) const { return in(v).count(); }

  bool has_edge(VertexRef u, VertexRef v) const {
    return u.side != v.side && v.index < side_size(v.side) && out(u).test(v.index);
  }

  std::size_t edge_count() const noexcept { return edge_count_; }

  /// All edges: A->B ordered by (tail, head), then B->A ordered by (tail, head).
  std::vector<Edge> edges() const {
    std::vector<Edge> out_edges;
    out_edges.reserve(edge_count_);
    for (Side s : {Side::A, Side::B})
      for (std::size_t i = 0; i < side_size(s); ++i)
        out({s, i}).for_each([&](std::size_t j) { out_edges.push_back({{s, i}, {complement(s), j}}); });
    return out_edges;
  }

  BipartiteDigraph reversed() const {
    BipartiteDigraph r = *this;
    std::swap(r.out_a_, r.in_a_);
    std::swap(r.out_b_, r.in_b_);
    return r;
  }

  friend bool operator==(const BipartiteDigraph& x, const BipartiteDigraph& y) {
    return x.a_size_ == y.a_size_ && x.b_size_ == y.b_size_ && x.out_a_ == y.out_a_ && x.out_b_ == y.out_b_;
  }

 private:
  static const std::vector<DynBitset>& rows(Side s, const std::vector<DynBitset>& ra,
                                            const std::vector<DynBitset>& rb) {
    return s == Side::A ? ra : rb;
  }
  std::size_t checked(VertexRef v) const {
    if (v.index >= side_size(v.side)) throw Error(ErrorCode::IndexOutOfRange, to_string(v));
    return v.index;
  }

  std::size_t a_size_ = 0;
  std::size_t b_size_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<DynBitset> out_a_, out_b_;  // out_a_[i] over B, out_b_[j] over A
  std::vector<DynBitset> in_a_, in_b_;    // in_a_[i] over B, in_b_[j] over A
};

class BipartiteDigraph::Builder {
 public:
  Builder(std::size_t a_size, std::size_t b_size) {
    g_.a_size_ = a_size;
    g_.b_size_ = b_size;
    g_.out_a_.assign(a_size, DynBitset(b_size));
    g_.in_a_.assign(a_size, DynBitset(b_size));
    g_.out_b_.assign(b_size, DynBitset(a_size));
    g_.in_b_.assign(b_size, DynBitset(a_size));
  }

  /// Adds u->v; duplicates are absorbed. Returns true if the edge is new.
  bool add_edge(VertexRef u, VertexRef v) {
    if (u.side == v.side) throw Error(ErrorCode::SameSideEdge, to_string(u) + " -> " + to_string(v));
    if (u.index >= g_.side_size(u.side)) throw Error(ErrorCode::IndexOutOfRange, to_string(u));
    if (v.index >= g_.side_size(v.side)) throw Error(ErrorCode::IndexOutOfRange, to_string(v));
    auto& out_row = (u.side == Side::A ? g_.out_a_ : g_.out_b_)[u.index];
    if (out_row.test(v.index)) return false;
    out_row.set(v.index);
    (v.side == Side::A ? g_.in_a_ : g_.in_b_)[v.index].set(u.index);
    ++g_.edge_count_;
    return true;
  }

  bool has_edge(VertexRef u, VertexRef v) const { return g_.has_edge(u, v); }

  BipartiteDigraph build() && { return std::move(g_); }
  BipartiteDigraph build() const& { return g_; }

 private:
  BipartiteDigraph g_;
};

inline BipartiteDigraph from_edges(std::size_t a_size, std::size_t b_size, const std::vector<Edge>& edges) {
  BipartiteDigraph::Builder builder(a_size, b_size);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

/// Loopless digraph on vertices 0..n-1 without parallel edges.
class GeneralDigraph {
 public:
  GeneralDigraph() = default;
  explicit GeneralDigraph(std::size_t n) : out_(n, DynBitset(n)), in_(n, DynBitset(n)) {}

  std::size_t size() const noexcept { return out_.size(); }
  bool is_null() const noexcept { return out_.empty(); }

  /// Loops are rejected; duplicates are absorbed. Returns true if new.
  bool add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size())
      throw Error(ErrorCode::IndexOutOfRange, std::to_string(u) + " -> " + std::to_string(v));
    if (u == v) throw Error(ErrorCode::PreconditionViolated, "loop at " + std::to_string(u));
    if (out_[u].test(v)) return false;
    out_[u].set(v);
    in_[v].set(u);
    ++edge_count_;
    return true;
  }

  const DynBitset& out(std::size_t v) const { return out_.at(v); }
  const DynBitset& in(std::size_t v) const { return in_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const { return out_.at(u).test(v); }
  std::size_t out_degree(std::size_t v) const { return out(v).count(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < size(); ++u) out_[u].for_each([&](std::size_t v) { e.emplace_back(u, v); });
    return e;
  }

  friend bool operator==(const GeneralDigraph& x, const GeneralDigraph& y) { return x.out_ == y.out_; }

 private:
  std::vector<DynBitset> out_;
  std::vector<DynBitset> in_;
  std::size_t edge_count_ = 0;
};

}  // namespace bipgirth
