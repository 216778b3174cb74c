#pragma once

// Constants delta for which "minimum out-degree >= |V|/delta forces girth <= g"
// is available. These are consumed as inputs; their proofs live elsewhere.

#include <cstddef>
#include <string>
#include <vector>

#include "bipgirth/rational.hpp"

namespace bipgirth::lemma {

struct DeltaEntry {
  std::string k_condition;  ///< when the entry applies, e.g. "k=3", "k>74"
  std::string formula;      ///< delta as a formula in k
  Rational delta;
  std::size_t girth_bound = 0;
  std::string source;        ///< short tag naming the result
  bool claimed_only = false;  ///< stated without proof
};

inline std::vector<DeltaEntry> delta_table(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  std::vector<DeltaEntry> out;
  if (k == 3) out.push_back({"k=3", "2.886", make_rational(2886, 1000), 3, "delta3", false});
  if (k == 4) out.push_back({"k=4", "3.4814", make_rational(34814, 10000), 4, "delta4", false});
  out.push_back({"all k", "3k/4", make_rational(3 * static_cast<std::int64_t>(k), 4), k, "three-quarters", false});
  if (k > 74)
    out.push_back({"k>74", "k-74", Rational(Integer(k - 74)), k - 1, "k-minus-74", false});
  if (k == 6) out.push_back({"k=6", "5.219", make_rational(5219, 1000), 6, "girth-six-sketch", true});
  return out;
}

/// Every entry from delta_table(j), j <= k, whose girth bound is at most k:
/// each of them may be used wherever "forces girth <= k" is needed.
inline std::vector<DeltaEntry> deltas_forcing_girth_at_most(std::size_t k) {
  std::vector<DeltaEntry> out;
  for (std::size_t j = 1; j <= k; ++j)
    for (auto& e : delta_table(j))
      if (e.girth_bound <= k && e.girth_bound >= 1) out.push_back(std::move(e));
  return out;
}

}  // namespace bipgirth::lemma
