#pragma once

// JSON forms of the reports (nlohmann::json). Every document carries
// schema_version; fields are only ever added, never renamed.

#include <json.hpp>

#include "bipgirth/io.hpp"
#include "bipgirth/lemma/facts.hpp"
#include "bipgirth/lemma/stress.hpp"
#include "bipgirth/search.hpp"

namespace bipgirth {

inline constexpr int schema_version = 1;

inline nlohmann::ordered_json config_json(const SearchConfig& c) {
  nlohmann::ordered_json j;
  j["n_a"] = c.n_a;
  j["n_b"] = c.n_b;
  j["k"] = c.k;
  j["alpha"] = to_string(c.alpha);
  j["beta"] = to_string(c.beta);
  j["mode"] = to_string(c.mode);
  j["eulerian"] = c.eulerian;
  j["seed"] = c.seed;
  j["node_limit"] = c.node_limit ? nlohmann::ordered_json(*c.node_limit) : nlohmann::ordered_json(nullptr);
  j["stop_at_first"] = c.stop_at_first;
  return j;
}

/// thread_hint is left out of the echo so reports match across thread counts.
inline nlohmann::ordered_json to_json(const SearchReport& r, bool with_time = true) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["status"] = to_string(r.status);
  j["nodes_explored"] = r.nodes_explored;
  j["canonical_classes_seen"] = r.canonical_classes_seen;
  if (with_time) j["wall_time_ms"] = r.wall_time.count();
  j["witness"] = r.witness ? nlohmann::ordered_json(to_edge_list(*r.witness)) : nlohmann::ordered_json(nullptr);
  j["config"] = config_json(r.config);
  return j;
}

namespace lemma {

inline nlohmann::ordered_json to_json(const FactReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["fact_id"] = r.fact_id;
  j["holds"] = r.holds_everywhere;
  j["margin_min"] = r.margin_min ? nlohmann::ordered_json(bipgirth::to_double(*r.margin_min)) : nlohmann::ordered_json(nullptr);
  j["margin_min_exact"] = r.margin_min ? nlohmann::ordered_json(bipgirth::to_string(*r.margin_min)) : nlohmann::ordered_json(nullptr);
  j["grid_step"] = bipgirth::to_string(r.grid_step);
  j["wall_time_ms"] = r.wall_time.count();
  j["first_violation"] = r.first_violation ? nlohmann::ordered_json(bipgirth::to_string(*r.first_violation)) : nlohmann::ordered_json(nullptr);
  j["points_checked"] = r.points_checked;
  j["vacuous_points"] = r.vacuous_points;
  j["description"] = r.description;
  return j;
}

inline nlohmann::ordered_json to_json(const NewineqStressReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["suite"] = std::string("newineq-") + to_string(r.which);
  j["count"] = r.count;
  j["violations"] = r.violations;
  j["worst_gap"] = r.worst_gap;
  j["x_zero_checks"] = r.x_zero_checks;
  j["x_zero_mismatch"] = r.x_zero_mismatch;
  return j;
}

inline nlohmann::ordered_json to_json(const AppliedStressReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["suite"] = "appliedineq";
  j["count"] = r.count;
  j["rejected"] = r.rejected;
  j["violations"] = r.violations;
  j["equality_count"] = r.equality_count;
  j["equality_max_slack"] = r.equality_max_slack;
  return j;
}

inline nlohmann::ordered_json to_json(const BellsCorpusReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["suite"] = "bells";
  j["instances"] = r.instances;
  j["hypotheses_held"] = r.hypotheses_held;
  j["violations"] = r.contradictions;
  j["violating_instances"] = r.contradiction_names;
  return j;
}

}  // namespace lemma

}  // namespace bipgirth
