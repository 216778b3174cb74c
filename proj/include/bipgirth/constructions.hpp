#pragma once

// Generators for the extremal and test digraphs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bipgirth/compliance.hpp"
#include "bipgirth/digraph.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth {

struct CirculantParams {
  std::size_t k = 1;
  std::size_t s = 1;
  std::size_t t = 1;

  std::size_t n() const { return k * (s + t - 1) + 1; }
};

/// a_i -> b_{i+x} for x in out_offsets, b_i -> a_{i+y} for y in in_offsets (mod n).
struct OffsetSpec {
  std::size_t n = 1;
  std::set<std::size_t> out_offsets;
  std::set<std::size_t> in_offsets;
};

/// 2k+2 classes V_1..V_{2k+2} of size t, each class fully joined to the next
/// (cyclically). Odd classes go to side A, even classes to side B, so class
/// V_{2m+1} is A-vertices m*t..m*t+t-1 and V_{2m+2} is the same range in B.
inline BipartiteDigraph layered_cycle(std::size_t k, std::size_t t) {
  if (k == 0 || t == 0) throw Error(ErrorCode::PreconditionViolated, "layered_cycle needs k, t >= 1");
  const std::size_t per_side = (k + 1) * t;
  BipartiteDigraph::Builder builder(per_side, per_side);
  for (std::size_t m = 0; m <= k; ++m) {
    std::size_t next = (m + 1) % (k + 1);
    for (std::size_t x = 0; x < t; ++x)
      for (std::size_t y = 0; y < t; ++y) {
        builder.add_edge(a(m * t + x), b(m * t + y));     // V_{2m+1} -> V_{2m+2}
        builder.add_edge(b(m * t + x), a(next * t + y));  // V_{2m+2} -> V_{2m+3}
      }
  }
  return std::move(builder).build();
}

inline BipartiteDigraph offset_circulant(const OffsetSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::PreconditionViolated, "offset_circulant needs n >= 1");
  BipartiteDigraph::Builder builder(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t x : spec.out_offsets) builder.add_edge(a(i), b((i + x) % spec.n));
    for (std::size_t y : spec.in_offsets) builder.add_edge(b(i), a((i + y) % spec.n));
  }
  return std::move(builder).build();
}

/// a_i -> b_j for i <= j <= i+s-1 and b_j -> a_i for i-t <= j < i, indices
/// mod n = k(s+t-1)+1, 0-based.
inline BipartiteDigraph circulant(const CirculantParams& p) {
  if (p.k == 0 || p.s == 0 || p.t == 0) throw Error(ErrorCode::PreconditionViolated, "circulant needs k, s, t >= 1");
  OffsetSpec spec;
  spec.n = p.n();
  for (std::size_t x = 0; x < p.s; ++x) spec.out_offsets.insert(x % spec.n);
  for (std::size_t y = 1; y <= p.t; ++y) spec.in_offsets.insert(y % spec.n);
  return offset_circulant(spec);
}

inline BipartiteDigraph circulant(std::size_t k, std::size_t s, std::size_t t) { return circulant({k, s, t}); }

/// Matching a_i -> b_i plus b_i -> a_j for each edge i -> j of h.
inline BipartiteDigraph ch_reduce(const GeneralDigraph& h) {
  if (h.is_null()) throw Error(ErrorCode::NullDigraph, "ch_reduce needs at least one vertex");
  BipartiteDigraph::Builder builder(h.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) builder.add_edge(a(i), b(i));
  for (const auto& [i, j] : h.edges()) builder.add_edge(b(i), a(j));
  return std::move(builder).build();
}

/// Every A-vertex gets exactly ceil(beta*n_b) out-neighbours and every
/// B-vertex exactly ceil(alpha*n_a), sampled without replacement.
inline BipartiteDigraph random_compliant(std::size_t n_a, std::size_t n_b, const Rational& alpha,
                                         const Rational& beta, std::uint64_t seed) {
  if (n_a == 0 || n_b == 0) throw Error(ErrorCode::NullDigraph, "random_compliant needs nonempty sides");
  if (alpha < 0 || beta < 0) throw Error(ErrorCode::InfeasibleDegree, "negative degree ratio");
  const std::int64_t deg_a = ceil_times(beta, static_cast<std::int64_t>(n_b));
  const std::int64_t deg_b = ceil_times(alpha, static_cast<std::int64_t>(n_a));
  if (deg_a > static_cast<std::int64_t>(n_b) || deg_b > static_cast<std::int64_t>(n_a))
    throw Error(ErrorCode::InfeasibleDegree, "required out-degree exceeds the opposite side");

  std::mt19937_64 rng(seed);
  BipartiteDigraph::Builder builder(n_a, n_b);
  auto fill = [&](Side side, std::size_t count, std::size_t other_size, std::int64_t degree) {
    std::vector<std::size_t> pool(other_size);
    for (std::size_t i = 0; i < count; ++i) {
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      // partial Fisher-Yates
      for (std::int64_t d = 0; d < degree; ++d) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(d), other_size - 1);
        std::swap(pool[static_cast<std::size_t>(d)], pool[pick(rng)]);
        builder.add_edge({side, i}, {complement(side), pool[static_cast<std::size_t>(d)]});
      }
    }
  };
  fill(Side::A, n_a, n_b, deg_a);
  fill(Side::B, n_b, n_a, deg_b);
  return std::move(builder).build();
}

}  // namespace bipgirth
