#pragma once

// Classification of (alpha, beta) for girth bound 2k.
//
//   Good    - a proved theorem forces every compliant digraph to have girth <= 2k
//   Bad     - a circulant construction (or an empty side) witnesses girth > 2k
//   Unknown - neither
//
// Good rules are applied for every k' <= k, since girth <= 2k' implies
// girth <= 2k. All comparisons are exact, with the strictness of each
// theorem's hypothesis.

#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipgirth/compliance.hpp"
#include "bipgirth/constructions.hpp"
#include "bipgirth/parallel.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth {

/// First k of the unbounded range of k for which balanced degree above
/// n/(k+1) is known to force girth <= 2k.
inline constexpr std::size_t large_k_start = 224539;

enum class Status { Good, Bad, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Good: return "GOOD";
    case Status::Bad: return "BAD";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

/// Which coordinate of the construction pair carries the factor t:
/// alpha_major is (t/(kt+1), 1/(kt+1)), built as circulant(k, 1, t);
/// beta_major is (1/(kt+1), t/(kt+1)), built as circulant(k, t, 1).
enum class Orientation { alpha_major, beta_major };

struct BadWitness {
  bool degenerate = false;  ///< alpha = 0 or beta = 0: one side may have no out-edges
  Orientation orientation = Orientation::alpha_major;
  std::size_t t = 0;

  CirculantParams circulant_params(std::size_t k) const {
    return orientation == Orientation::alpha_major ? CirculantParams{k, 1, t} : CirculantParams{k, t, 1};
  }
};

struct GoodReason {
  std::size_t k_prime = 0;
  std::string rule;  ///< e.g. "2a+b>1"
  Rational value;    ///< left-hand side that exceeded the threshold
  Rational threshold;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<GoodReason> good;
  std::optional<BadWitness> bad;

  /// Single-line provenance without commas (safe as a CSV field).
  std::string provenance() const {
    std::ostringstream os;
    if (good) {
      os << "k'=" << good->k_prime << " " << good->rule << " (" << to_string(good->value) << ">"
         << to_string(good->threshold) << ")";
    } else if (bad) {
      if (bad->degenerate)
        os << "witness=(zero-coordinate)";
      else if (bad->t == 1)
        os << "witness=(t=1)";
      else
        os << "witness=(t=" << bad->t << ";"
           << (bad->orientation == Orientation::alpha_major ? "alpha-major" : "beta-major") << ")";
    }
    return os.str();
  }

  std::string describe() const {
    std::string p = provenance();
    return p.empty() ? std::string(to_string(status)) : std::string(to_string(status)) + " " + p;
  }
};

inline AlphaBeta construction_pair(std::size_t k, std::size_t t, Orientation o) {
  Rational den{Integer(k * t + 1)};
  Rational major = Rational(Integer(t)) / den, minor = Rational(1) / den;
  return o == Orientation::alpha_major ? AlphaBeta{major, minor} : AlphaBeta{minor, major};
}

/// Maximal pairs from the circulant family, t = 1..t_max, each followed by
/// its mirror image (t = 1 is its own mirror).
inline std::vector<AlphaBeta> bad_pairs(std::size_t k, std::size_t t_max) {
  std::vector<AlphaBeta> out;
  for (std::size_t t = 1; t <= t_max; ++t) {
    out.push_back(construction_pair(k, t, Orientation::alpha_major));
    if (t > 1) out.push_back(construction_pair(k, t, Orientation::beta_major));
  }
  return out;
}

namespace detail {

/// Smallest t >= 1 with (major, minor) <= (t/(kt+1), 1/(kt+1)), if any.
inline std::optional<std::size_t> dominating_t(std::size_t k, const Rational& major, const Rational& minor) {
  const Rational kk{Integer(k)};
  if (kk * major >= 1) return std::nullopt;  // t/(kt+1) < 1/k <= major for every t
  // major <= t/(kt+1)  <=>  t >= major / (1 - k*major)
  Integer lo = ceil_int(major / (1 - kk * major));
  if (lo < 1) lo = 1;
  // minor <= 1/(kt+1)  <=>  t <= (1/minor - 1)/k
  Integer hi = floor_int((1 / minor - 1) / kk);
  if (lo > hi) return std::nullopt;
  return lo.convert_to<std::size_t>();
}

inline std::optional<GoodReason> good_reason(std::size_t k, const AlphaBeta& p) {
  const Rational& al = p.alpha;
  const Rational& be = p.beta;
  if (al <= 0 || be <= 0) return std::nullopt;
  auto fire = [](std::size_t kp, const char* rule, Rational value, Rational threshold) -> std::optional<GoodReason> {
    if (value > threshold) return GoodReason{kp, rule, std::move(value), std::move(threshold)};
    return std::nullopt;
  };
  if (k >= 1)
    if (auto r = fire(1, "a+b>1", al + be, Rational(1))) return r;
  if (k >= 2) {
    if (auto r = fire(2, "2a+b>1", 2 * al + be, Rational(1))) return r;
    if (auto r = fire(2, "a+2b>1", al + 2 * be, Rational(1))) return r;
  }
  if (k >= 3)
    if (auto r = fire(3, "a+b>1/2", al + be, make_rational(1, 2))) return r;
  if (k >= 4)
    if (auto r = fire(4, "a+b>2/5", al + be, make_rational(2, 5))) return r;
  const Rational lo = al < be ? al : be;
  if (k >= 6)
    if (auto r = fire(6, "min(a;b)>1/7", lo, make_rational(1, 7))) return r;
  if (k >= large_k_start) {
    Rational threshold = Rational(1) / Integer(k + 1);
    if (auto r = fire(k, "min(a;b)>1/(k+1)", lo, threshold)) return r;
  }
  return std::nullopt;
}

inline std::optional<BadWitness> bad_witness(std::size_t k, const AlphaBeta& p) {
  if (p.alpha == 0 || p.beta == 0) return BadWitness{true, Orientation::alpha_major, 0};
  if (auto t = dominating_t(k, p.alpha, p.beta)) return BadWitness{false, Orientation::alpha_major, *t};
  if (auto t = dominating_t(k, p.beta, p.alpha)) return BadWitness{false, Orientation::beta_major, *t};
  return std::nullopt;
}

}  // namespace detail

inline Verdict classify(std::size_t k, const AlphaBeta& p) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  if (p.alpha < 0 || p.beta < 0 || p.alpha > 1 || p.beta > 1)
    throw Error(ErrorCode::PreconditionViolated, "alpha and beta must lie in [0,1]");
  Verdict v;
  v.good = detail::good_reason(k, p);
  v.bad = detail::bad_witness(k, p);
  if (v.good && v.bad)
    throw std::logic_error("point " + to_string(p) + " satisfies both a Good rule and a Bad witness at k=" +
                           std::to_string(k));
  v.status = v.good ? Status::Good : v.bad ? Status::Bad : Status::Unknown;
  return v;
}

struct RegionRow {
  Rational alpha;
  Rational beta;
  Verdict verdict;
};

/// Classifies (i/resolution, j/resolution) for 0 <= i, j <= resolution, in
/// lexicographic (alpha, beta) order.
inline std::vector<RegionRow> region_grid(std::size_t k, std::size_t resolution, unsigned threads = 1) {
  if (resolution < 2) throw Error(ErrorCode::PreconditionViolated, "resolution must be >= 2");
  const std::size_t side = resolution + 1;
  std::vector<RegionRow> rows(side * side);
  const Integer res(resolution);
  parallel_for(side, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < side; ++j) {
      AlphaBeta p{Rational(Integer(i)) / res, Rational(Integer(j)) / res};
      rows[i * side + j] = RegionRow{p.alpha, p.beta, classify(k, p)};
    }
  });
  return rows;
}

inline void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows) {
  os << "alpha,beta,status,provenance\n";
  for (const auto& r : rows)
    os << to_string(r.alpha) << ',' << to_string(r.beta) << ',' << to_string(r.verdict.status) << ','
       << r.verdict.provenance() << '\n';
}

/// Chart of the unit square: grid points coloured by status, the staircase of
/// construction pairs, and the border lines k*a+b=1 and a+k*b=1.
inline void write_region_svg(std::ostream& os, std::size_t k, const std::vector<RegionRow>& rows,
                             std::size_t staircase_t_max = 6) {
  constexpr double size = 600.0, margin = 40.0;
  auto px = [&](double a) { return margin + a * size; };
  auto py = [&](double b) { return margin + (1.0 - b) * size; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
     << size + 2 * margin << "\">\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& r : rows) {
    const char* colour = r.verdict.status == Status::Good  ? "#2b8a3e"
                         : r.verdict.status == Status::Bad ? "#c92a2a"
                                                           : "#adb5bd";
    os << "<circle cx=\"" << px(to_double(r.alpha)) << "\" cy=\"" << py(to_double(r.beta))
       << "\" r=\"1.5\" fill=\"" << colour << "\"/>\n";
  }
  const double kk = static_cast<double>(k);
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(1) << "\" x2=\"" << px(1 / kk) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(1 / kk) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& p : bad_pairs(k, staircase_t_max))
    os << "<circle cx=\"" << px(to_double(p.alpha)) << "\" cy=\"" << py(to_double(p.beta))
       << "\" r=\"3\" fill=\"black\"><title>" << to_string(p) << "</title></circle>\n";
  os << "<text x=\"" << margin << "\" y=\"" << margin - 12 << "\">k=" << k << "</text>\n";
  os << "</svg>\n";
}

}  // namespace bipgirth
