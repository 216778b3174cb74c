#pragma once

// Audits of proved layer-growth statements on concrete digraphs. A reported
// violation means the layer machinery is wrong, not that the graph is special.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bipgirth/compliance.hpp"
#include "bipgirth/girth.hpp"
#include "bipgirth/layers.hpp"
#include "bipgirth/rational.hpp"

namespace bipgirth {

/// One layer of the large-set dichotomy: either the layer itself is big, or
/// the parity union one step earlier is.
struct BigsetRow {
  std::size_t i = 0;
  Side layer_side = Side::A;
  std::size_t layer_size = 0;
  std::size_t star_size = 0;  ///< |N*_{i-1}(v)|
  bool layer_branch = false;
  bool star_branch = false;

  bool holds() const { return layer_branch || star_branch; }
};

struct BigsetAudit {
  VertexRef source;
  std::size_t k = 0;
  Rational delta;
  std::vector<BigsetRow> rows;
  std::size_t violations = 0;

  bool ok() const { return violations == 0; }
};

/// For i = 1..horizon: if N_i(v) lies in A then |N_i(v)| >= alpha|A| or
/// |N*_{i-1}(v)| > beta*delta*|B|, and symmetrically for B. `delta` must be a
/// constant for which minimum out-degree |V|/delta forces girth <= k.
/// Horizon defaults to 2k+2.
inline BigsetAudit audit_bigset(const BipartiteDigraph& g, std::size_t k, const Rational& alpha, const Rational& beta,
                                const Rational& delta, VertexRef v, std::optional<std::size_t> horizon = {}) {
  if (!is_compliant(g, alpha, beta))
    throw Error(ErrorCode::PreconditionViolated, "digraph is not (" + to_string(alpha) + "," + to_string(beta) + ")-compliant");
  if (auto len = girth_length(g); len && *len <= 2 * k)
    throw Error(ErrorCode::PreconditionViolated, "girth " + std::to_string(*len) + " <= 2k");

  const std::size_t max_i = horizon.value_or(2 * k + 2);
  LayerProfile profile = forward_layers(g, v, max_i);
  BigsetAudit report;
  report.source = v;
  report.k = k;
  report.delta = delta;
  const Integer na(g.a_size()), nb(g.b_size());
  for (std::size_t i = 1; i <= max_i; ++i) {
    BigsetRow row;
    row.i = i;
    row.layer_side = profile[i].side;
    row.layer_size = profile[i].size();
    row.star_size = i >= 2 ? star_union(profile, i - 1).size() : 0;
    const Integer layer(row.layer_size), star(row.star_size);
    if (row.layer_side == Side::A) {
      row.layer_branch = Rational(layer) >= alpha * na;
      row.star_branch = Rational(star) > beta * delta * nb;
    } else {
      row.layer_branch = Rational(layer) >= beta * nb;
      row.star_branch = Rational(star) > alpha * delta * na;
    }
    if (!row.holds()) ++report.violations;
    report.rows.push_back(row);
  }
  return report;
}

struct BigindegAudit {
  VertexRef best;
  std::size_t best_sum = 0;  ///< max over v in B of |M_1(v)| + |M_3(v)|
  Rational bound;            ///< (alpha + beta)|A|
  std::vector<std::size_t> sums;

  bool ok() const { return Rational(Integer(best_sum)) >= bound; }
};

/// Some v in B has |M_1(v)| + |M_3(v)| >= (alpha+beta)|A| when g is
/// (alpha,beta)-compliant with girth at least four.
inline BigindegAudit audit_bigindeg(const BipartiteDigraph& g, const Rational& alpha, const Rational& beta) {
  if (!is_compliant(g, alpha, beta))
    throw Error(ErrorCode::PreconditionViolated, "digraph is not (" + to_string(alpha) + "," + to_string(beta) + ")-compliant");
  if (auto len = girth_length(g); len && *len < 4)
    throw Error(ErrorCode::PreconditionViolated, "girth " + std::to_string(*len) + " < 4");
  BigindegAudit report;
  report.bound = (alpha + beta) * Integer(g.a_size());
  for (std::size_t j = 0; j < g.b_size(); ++j) {
    LayerProfile back = backward_layers(g, b(j), 3);
    std::size_t sum = back[1].size() + back[3].size();
    report.sums.push_back(sum);
    if (j == 0 || sum > report.best_sum) {
      report.best_sum = sum;
      report.best = b(j);
    }
  }
  return report;
}

}  // namespace bipgirth
