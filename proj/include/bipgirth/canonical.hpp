#pragma once

// Canonical code for side-preserving isomorphism of bipartite digraphs.
//
// Colour refinement on (side, out-colour multiset, in-colour multiset) gives an
// ordered partition that any relabelling respects. Remaining ties are broken
// by individualising each vertex of the first non-singleton cell in turn and
// refining again; every discrete leaf yields a relabelling, and the code is
// the lexicographically least adjacency encoding over all leaves.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bipgirth/digraph.hpp"

namespace bipgirth {

namespace detail {

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const BipartiteDigraph& g) : g_(g), na_(g.a_size()), n_(g.vertex_count()) {
    out_.resize(n_);
    in_.resize(n_);
    for (const auto& [u, v] : g.edges()) {
      out_[flat(u)].push_back(flat(v));
      in_[flat(v)].push_back(flat(u));
    }
  }

  std::string run() {
    std::vector<int> colours(n_);
    for (std::size_t v = 0; v < n_; ++v) colours[v] = v < na_ ? 0 : 1;
    refine(colours);
    search(colours);
    std::string header = std::to_string(na_) + "," + std::to_string(g_.b_size()) + ":";
    return header + best_;
  }

 private:
  std::size_t flat(VertexRef v) const { return v.side == Side::A ? v.index : na_ + v.index; }

  static int count_colours(const std::vector<int>& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

  void refine(std::vector<int>& colours) const {
    int cells = count_colours(colours);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        std::vector<int> outs, ins;
        for (std::size_t w : out_[v]) outs.push_back(colours[w]);
        for (std::size_t w : in_[v]) ins.push_back(colours[w]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        auto& s = sig[v];
        s.push_back(colours[v]);
        s.push_back(static_cast<int>(outs.size()));
        s.insert(s.end(), outs.begin(), outs.end());
        s.push_back(-1);
        s.insert(s.end(), ins.begin(), ins.end());
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t v = 0; v < n_; ++v)
        colours[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      int now = static_cast<int>(distinct.size());
      if (now == cells) return;
      cells = now;
    }
  }

  void search(const std::vector<int>& colours) {
    const int cells = count_colours(colours);
    if (static_cast<std::size_t>(cells) == n_) {
      consider_leaf(colours);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colours) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colours[v] != target) continue;
      std::vector<int> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colours[w] + (w == v ? 0 : 1);
      // compact to ranks
      std::vector<int> used(next);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (auto& c : next) c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
      refine(next);
      search(next);
    }
  }

  void consider_leaf(const std::vector<int>& colours) {
    // colours is a bijection onto 0..n-1; A-vertices occupy 0..na-1.
    std::vector<std::size_t> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(colours[v])] = v;
    std::string code;
    code.reserve((na_ * (n_ - na_) * 2 + 7) / 8);
    unsigned char byte = 0;
    int bits = 0;
    auto push = [&](bool bit) {
      byte = static_cast<unsigned char>((byte << 1) | (bit ? 1 : 0));
      if (++bits == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    };
    for (std::size_t p = 0; p < n_; ++p) {
      std::size_t v = at[p];
      bool v_is_a = v < na_;
      std::size_t lo = v_is_a ? na_ : 0, hi = v_is_a ? n_ : na_;
      std::vector<char> row(n_, 0);
      for (std::size_t w : out_[v]) row[static_cast<std::size_t>(colours[w])] = 1;
      for (std::size_t q = lo; q < hi; ++q) push(row[q] != 0);
    }
    if (bits) code.push_back(static_cast<char>(byte << (8 - bits)));
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
    }
  }

  const BipartiteDigraph& g_;
  std::size_t na_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Equal codes iff the digraphs are isomorphic by a relabelling that maps A to
/// A and B to B. Digraphs with different side sizes never share a code.
inline std::string canonical_code(const BipartiteDigraph& g) { return detail::CanonicalLabeler(g).run(); }

}  // namespace bipgirth
