#pragma once

// Search for compliant bipartite digraphs of girth > 2k.
//
// Out-neighbourhoods ("rows") are assigned one vertex at a time in the order
// a0, b0, a1, b1, ... Every A-row has exactly ceil(beta*|B|) bits and every
// B-row exactly ceil(alpha*|A|): adding edges never lengthens the girth, so a
// witness exists at the minimum degrees whenever one exists at all.
//
// Pruning at each node:
//   * girth: a new row for v must avoid every vertex that already reaches v
//     within 2k-1 steps (that edge would close a cycle of length <= 2k);
//   * Eulerian mode: in-degrees may never exceed their target, and must stay
//     reachable with the rows still to come;
//   * symmetry (exhaustive mode): rows are compared as integers and the row
//     sequence in vertex order is read lexicographically. A prefix is dropped
//     if swapping two assigned A-vertices, two unassigned A-vertices, or the
//     same for B, yields a smaller prefix. Such a swap maps the prefix of any
//     completion to a smaller prefix, so the lexicographically least member of
//     every isomorphism class always survives.
// Complete digraphs are deduplicated by canonical code.
//
// The tree is split into independent work units at a fixed depth. Each unit
// runs to completion (or to its first witness / its node budget) without
// looking at the others, so the report is identical for any thread count.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bipgirth/canonical.hpp"
#include "bipgirth/compliance.hpp"
#include "bipgirth/digraph.hpp"
#include "bipgirth/girth.hpp"
#include "bipgirth/parallel.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth {

enum class SearchMode { exhaustive, randomized };
enum class SearchStatus { FoundCounterexample, Exhausted, LimitReached };

inline const char* to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "randomized"; }
inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::FoundCounterexample: return "FoundCounterexample";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::LimitReached: return "LimitReached";
  }
  return "?";
}

inline constexpr std::uint64_t default_node_limit = 1'000'000'000;

struct SearchConfig {
  std::size_t n_a = 1;
  std::size_t n_b = 1;
  std::size_t k = 1;
  Rational alpha;
  Rational beta;
  SearchMode mode = SearchMode::exhaustive;
  bool eulerian = false;  ///< in-degree = out-degree at every vertex
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> node_limit;  ///< per work unit; default 10^9
  std::optional<unsigned> thread_hint;
  bool stop_at_first = true;  ///< false: enumerate every class of witnesses
};

struct SearchReport {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<BipartiteDigraph> witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t canonical_classes_seen = 0;
  std::chrono::milliseconds wall_time{0};
  SearchConfig config;
  std::vector<std::string> witness_codes;  ///< sorted canonical codes of every witness class seen
};

namespace detail {

using Mask = std::uint64_t;

struct SearchState {
  std::vector<Mask> out_a, out_b;  // out_a[i] over B, out_b[j] over A
  std::vector<Mask> in_a, in_b;    // in_a[i]: B-vertices pointing at a_i
  std::size_t depth = 0;
};

struct UnitResult {
  std::uint64_t nodes = 0;
  bool limit_hit = false;
  std::set<std::string> codes;
  std::optional<std::pair<std::string, BipartiteDigraph>> first;  // least code among found
};

class RowSearch {
 public:
  explicit RowSearch(const SearchConfig& cfg) : cfg_(cfg) {
    if (cfg.n_a == 0 || cfg.n_b == 0) throw Error(ErrorCode::InfeasibleConfig, "both sides must be nonempty");
    if (cfg.n_a > 64 || cfg.n_b > 64) throw Error(ErrorCode::InfeasibleConfig, "sides larger than 64 are not supported");
    if (cfg.k == 0) throw Error(ErrorCode::InfeasibleConfig, "k must be >= 1");
    if (cfg.alpha < 0 || cfg.beta < 0) throw Error(ErrorCode::InfeasibleConfig, "negative degree ratio");
    deg_a_ = ceil_times(cfg.beta, static_cast<std::int64_t>(cfg.n_b));
    deg_b_ = ceil_times(cfg.alpha, static_cast<std::int64_t>(cfg.n_a));
    if (deg_a_ > static_cast<std::int64_t>(cfg.n_b) || deg_b_ > static_cast<std::int64_t>(cfg.n_a))
      throw Error(ErrorCode::InfeasibleConfig, "required out-degree exceeds the opposite side");
    if (cfg.eulerian) {
      // in-degree = out-degree everywhere forces |A|*deg_a = |B|*deg_b
      if (static_cast<std::int64_t>(cfg.n_a) * deg_a_ != static_cast<std::int64_t>(cfg.n_b) * deg_b_)
        throw Error(ErrorCode::InfeasibleConfig, "in-degrees cannot equal out-degrees for these sizes");
      in_target_a_ = static_cast<int>(deg_a_);
      in_target_b_ = static_cast<int>(deg_b_);
    }
    std::size_t longest = std::max(cfg.n_a, cfg.n_b);
    for (std::size_t i = 0; i < longest; ++i) {
      if (i < cfg.n_a) order_.push_back(a(i));
      if (i < cfg.n_b) order_.push_back(b(i));
    }
    rows_a_ = combinations(cfg.n_b, static_cast<std::size_t>(deg_a_));
    rows_b_ = combinations(cfg.n_a, static_cast<std::size_t>(deg_b_));
    limit_ = cfg.node_limit.value_or(default_node_limit);
  }

  SearchReport run() {
    auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.config = cfg_;

    SearchState root;
    root.out_a.assign(cfg_.n_a, 0);
    root.in_a.assign(cfg_.n_a, 0);
    root.out_b.assign(cfg_.n_b, 0);
    root.in_b.assign(cfg_.n_b, 0);

    std::vector<UnitResult> results;
    std::uint64_t split_nodes = 0;
    if (cfg_.mode == SearchMode::randomized) {
      results.resize(1);
      std::mt19937_64 rng(cfg_.seed);
      dfs(root, results[0], &rng);
    } else {
      // Collect the surviving nodes at the split depth sequentially.
      const std::size_t split = std::min<std::size_t>(2, order_.size());
      std::vector<SearchState> units;
      collect(root, split, units, split_nodes);
      results.resize(units.size());
      unsigned threads = cfg_.thread_hint.value_or(default_thread_count());
      parallel_for(units.size(), threads, [&](std::size_t u) { dfs(units[u], results[u], nullptr); });
    }

    bool limit_hit = false;
    std::set<std::string> codes;
    std::optional<std::pair<std::string, BipartiteDigraph>> best;
    report.nodes_explored = split_nodes;
    for (auto& r : results) {
      report.nodes_explored += r.nodes;
      limit_hit = limit_hit || r.limit_hit;
      codes.insert(r.codes.begin(), r.codes.end());
      if (r.first && (!best || r.first->first < best->first)) best = std::move(r.first);
    }
    report.canonical_classes_seen = codes.size();
    report.witness_codes.assign(codes.begin(), codes.end());
    if (best) {
      report.status = SearchStatus::FoundCounterexample;
      report.witness = std::move(best->second);
    } else {
      report.status = limit_hit ? SearchStatus::LimitReached : SearchStatus::Exhausted;
    }
    report.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
  }

 private:
  static std::vector<Mask> combinations(std::size_t n, std::size_t d) {
    std::vector<Mask> out;
    if (d == 0) return {Mask{0}};
    if (d > n) return out;
    const Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    Mask m = (d == 64) ? ~Mask{0} : (Mask{1} << d) - 1;
    while (true) {
      out.push_back(m);
      if (out.size() > 5'000'000) throw Error(ErrorCode::InfeasibleConfig, "too many candidate rows");
      // Gosper's hack: next mask with the same popcount.
      Mask c = m & (~m + 1);
      Mask r = m + c;
      if (r == 0 || (r & ~limit)) break;
      m = (((r ^ m) >> 2) / c) | r;
      if (m & ~limit) break;
    }
    return out;
  }

  /// Opposite-side vertices that reach v within 2k-1 steps in the current state.
  Mask reachers(const SearchState& st, VertexRef v) const {
    Mask frontier_opp = v.side == Side::A ? st.in_a[v.index] : st.in_b[v.index];
    Mask seen_opp = frontier_opp;
    Mask seen_same = Mask{1} << v.index;
    const Side same = v.side;
    for (std::size_t dist = 1; dist + 2 <= 2 * cfg_.k - 1; dist += 2) {
      // two backward steps: opposite -> same -> opposite
      Mask same_layer = 0;
      for (Mask f = frontier_opp; f; f &= f - 1) {
        std::size_t w = static_cast<std::size_t>(std::countr_zero(f));
        same_layer |= same == Side::A ? st.in_b[w] : st.in_a[w];
      }
      same_layer &= ~seen_same;
      seen_same |= same_layer;
      Mask next_opp = 0;
      for (Mask f = same_layer; f; f &= f - 1) {
        std::size_t w = static_cast<std::size_t>(std::countr_zero(f));
        next_opp |= same == Side::A ? st.in_a[w] : st.in_b[w];
      }
      next_opp &= ~seen_opp;
      if (!next_opp) break;
      seen_opp |= next_opp;
      frontier_opp = next_opp;
    }
    return seen_opp;
  }

  bool eulerian_ok(const SearchState& st, VertexRef v, Mask row) const {
    if (!cfg_.eulerian) return true;
    const bool to_b = v.side == Side::A;
    const auto& in = to_b ? st.in_b : st.in_a;
    const int target = to_b ? in_target_b_ : in_target_a_;
    // rows of v's side still to be assigned after this one
    std::size_t assigned_same = 0;
    for (std::size_t p = 0; p <= st.depth; ++p)
      if (order_[p].side == v.side) ++assigned_same;
    const int remaining = static_cast<int>((to_b ? cfg_.n_a : cfg_.n_b) - assigned_same);
    for (std::size_t w = 0; w < in.size(); ++w) {
      int deg = std::popcount(in[w]) + ((row >> w) & 1 ? 1 : 0);
      if (deg > target || target - deg > remaining) return false;
    }
    return true;
  }

  static Mask swap_bits(Mask m, std::size_t i, std::size_t j) {
    Mask bi = (m >> i) & 1, bj = (m >> j) & 1;
    if (bi == bj) return m;
    return m ^ ((Mask{1} << i) | (Mask{1} << j));
  }

  Mask row_of(const SearchState& st, VertexRef v) const {
    return v.side == Side::A ? st.out_a[v.index] : st.out_b[v.index];
  }

  /// True if some same-category transposition produces a smaller prefix.
  bool dominated(const SearchState& st) const {
    const std::size_t assigned = st.depth;  // positions [0, assigned) are filled
    for (Side side : {Side::A, Side::B}) {
      const std::size_t n = side == Side::A ? cfg_.n_a : cfg_.n_b;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          bool ai = position(VertexRef{side, i}) < assigned, aj = position(VertexRef{side, j}) < assigned;
          if (ai != aj) continue;
          for (std::size_t p = 0; p < assigned; ++p) {
            VertexRef w = order_[p];
            Mask old_row = row_of(st, w), new_row;
            if (w.side == side) {
              std::size_t img = w.index == i ? j : w.index == j ? i : w.index;
              new_row = row_of(st, {side, img});
            } else {
              new_row = swap_bits(old_row, i, j);
            }
            if (new_row != old_row) {
              if (new_row < old_row) return true;
              break;
            }
          }
        }
    }
    return false;
  }

  std::size_t position(VertexRef v) const {
    // order_ interleaves a0,b0,a1,b1,... until the shorter side runs out
    std::size_t common = std::min(cfg_.n_a, cfg_.n_b);
    if (v.index < common) return 2 * v.index + (v.side == Side::A ? 0 : 1);
    return 2 * common + (v.index - common);
  }

  void place(SearchState& st, VertexRef v, Mask row) const {
    if (v.side == Side::A) {
      st.out_a[v.index] = row;
      for (Mask f = row; f; f &= f - 1) st.in_b[static_cast<std::size_t>(std::countr_zero(f))] |= Mask{1} << v.index;
    } else {
      st.out_b[v.index] = row;
      for (Mask f = row; f; f &= f - 1) st.in_a[static_cast<std::size_t>(std::countr_zero(f))] |= Mask{1} << v.index;
    }
    ++st.depth;
  }

  template <class Visit>
  void for_each_child(const SearchState& st, std::mt19937_64* rng, Visit&& visit) const {
    VertexRef v = order_[st.depth];
    Mask forbidden = reachers(st, v);
    const std::vector<Mask>& candidates = v.side == Side::A ? rows_a_ : rows_b_;
    std::vector<Mask> shuffled;
    const std::vector<Mask>* list = &candidates;
    if (rng) {
      shuffled = candidates;
      std::shuffle(shuffled.begin(), shuffled.end(), *rng);
      list = &shuffled;
    }
    for (Mask row : *list) {
      if (row & forbidden) continue;
      if (!eulerian_ok(st, v, row)) continue;
      SearchState child = st;
      place(child, v, row);
      if (!rng && dominated(child)) continue;
      if (!visit(child)) return;
    }
  }

  void collect(const SearchState& st, std::size_t split, std::vector<SearchState>& out, std::uint64_t& nodes) const {
    if (st.depth == split) {
      out.push_back(st);
      return;
    }
    for_each_child(st, nullptr, [&](const SearchState& child) {
      ++nodes;
      collect(child, split, out, nodes);
      return true;
    });
  }

  BipartiteDigraph materialise(const SearchState& st) const {
    BipartiteDigraph::Builder builder(cfg_.n_a, cfg_.n_b);
    for (std::size_t i = 0; i < cfg_.n_a; ++i)
      for (Mask f = st.out_a[i]; f; f &= f - 1) builder.add_edge(a(i), b(static_cast<std::size_t>(std::countr_zero(f))));
    for (std::size_t j = 0; j < cfg_.n_b; ++j)
      for (Mask f = st.out_b[j]; f; f &= f - 1) builder.add_edge(b(j), a(static_cast<std::size_t>(std::countr_zero(f))));
    return std::move(builder).build();
  }

  /// Returns false to stop the unit.
  bool dfs(const SearchState& st, UnitResult& res, std::mt19937_64* rng) const {
    if (st.depth == order_.size()) {
      BipartiteDigraph g = materialise(st);
      std::string code = canonical_code(g);
      if (res.codes.insert(code).second && (!res.first || code < res.first->first)) res.first.emplace(code, std::move(g));
      return !cfg_.stop_at_first;
    }
    bool keep_going = true;
    for_each_child(st, rng, [&](const SearchState& child) {
      if (res.nodes >= limit_) {
        res.limit_hit = true;
        keep_going = false;
        return false;
      }
      ++res.nodes;
      keep_going = dfs(child, res, rng);
      return keep_going;
    });
    return keep_going;
  }

  SearchConfig cfg_;
  std::int64_t deg_a_ = 0, deg_b_ = 0;
  int in_target_a_ = 0, in_target_b_ = 0;
  std::vector<VertexRef> order_;
  std::vector<Mask> rows_a_, rows_b_;
  std::uint64_t limit_ = default_node_limit;
};

}  // namespace detail

inline SearchReport find_counterexample(const SearchConfig& cfg) { return detail::RowSearch(cfg).run(); }

/// Least out-degree strictly above n/(k+1).
inline std::size_t forced_degree(std::size_t n, std::size_t k) { return n / (k + 1) + 1; }

/// Balanced instances n = 1..n_max at out-degree floor(n/(k+1))+1 on both sides.
inline std::vector<SearchReport> verify_conjecture_small(std::size_t k, std::size_t n_max,
                                                         std::optional<unsigned> threads = {}) {
  std::vector<SearchReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SearchConfig cfg;
    cfg.n_a = cfg.n_b = n;
    cfg.k = k;
    cfg.alpha = cfg.beta = Rational(Integer(forced_degree(n, k))) / Integer(n);
    cfg.thread_hint = threads;
    reports.push_back(find_counterexample(cfg));
  }
  return reports;
}

/// Regular instances with in- and out-degree d for every d/n > 1/(k+1), n <= n_max.
inline std::vector<SearchReport> verify_eulerian_small(std::size_t k, std::size_t n_max,
                                                       std::optional<unsigned> threads = {}) {
  std::vector<SearchReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t d = forced_degree(n, k); d <= n; ++d) {
      SearchConfig cfg;
      cfg.n_a = cfg.n_b = n;
      cfg.k = k;
      cfg.alpha = cfg.beta = Rational(Integer(d)) / Integer(n);
      cfg.eulerian = true;
      cfg.thread_hint = threads;
      reports.push_back(find_counterexample(cfg));
    }
  return reports;
}

inline bool all_exhausted(const std::vector<SearchReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SearchReport& r) { return r.status == SearchStatus::Exhausted; });
}

}  // namespace bipgirth
