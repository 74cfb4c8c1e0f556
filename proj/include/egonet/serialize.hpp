#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "egonet/classify.hpp"
#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/eval.hpp"
#include "egonet/labels.hpp"
#include "egonet/sbm.hpp"
#include "egonet/score.hpp"

namespace egonet {

// Ranking order used everywhere results are listed: score descending, ties
// by ascending global id.
inline std::vector<LocalId> score_order(const EgoView& view, const ScoreVector& scores) {
  std::vector<LocalId> order(view.node_count());
  std::iota(order.begin(), order.end(), LocalId{0});
  std::sort(order.begin(), order.end(), [&](LocalId x, LocalId y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return view.to_global[x] < view.to_global[y];
  });
  return order;
}

inline nlohmann::json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [key, value] : params) j[key] = value;
  return j;
}

inline nlohmann::json to_json(const EgoView& view, const ScoreVector& scores) {
  nlohmann::json j;
  j["method"] = scores.method;
  j["params"] = params_json(scores.params);
  nlohmann::json rows = nlohmann::json::array();
  for (LocalId v : score_order(view, scores)) {
    rows.push_back({{"node", view.name(v)}, {"score", scores[v]}});
  }
  j["scores"] = std::move(rows);
  return j;
}

// Labels are optional; when present the confusion counts ride along.
inline nlohmann::json to_json(const EgoView& view, const Prediction& pred,
                              const LabelMap* labels = nullptr) {
  nlohmann::json j;
  j["method"] = pred.method;
  j["params"] = params_json(pred.params);
  j["threshold"] = pred.threshold;  // +inf (k = 0) serializes as null
  j["positives"] = pred.positive_count();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < pred.test_nodes.size(); ++i) {
    rows.push_back({{"node", view.name(pred.test_nodes[i])},
                    {"predicted", pred.positive[i] != 0}});
  }
  j["predictions"] = std::move(rows);
  if (labels) {
    ConfusionMatrix cm = confusion(view, pred, *labels);
    j["confusion"] = {{"a", cm.a}, {"b", cm.b}, {"c", cm.c}, {"d", cm.d}};
  }
  return j;
}

inline nlohmann::json to_json(const RocCurve& curve) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RocPoint& p : curve.points) {
    rows.push_back({{"threshold", p.threshold}, {"fpr", p.fpr}, {"tpr", p.tpr}});
  }
  return {{"points", std::move(rows)}};
}

// CSV twin of the JSON curve; "inf" marks the empty-admission anchor row.
inline void write_roc_csv(const RocCurve& curve, std::ostream& out) {
  out << "threshold,fpr,tpr\n";
  for (const RocPoint& p : curve.points) {
    out << format_double(p.threshold) << ',' << format_double(p.fpr) << ','
        << format_double(p.tpr) << '\n';
  }
}

inline void write_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << '\n';
}

// {"sizes": [...], "p_in": .., "p_out": .., "seed": ..}
inline SbmSpec sbm_spec_from_json(const nlohmann::json& j) {
  SbmSpec spec;
  try {
    spec.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    spec.p_in = j.at("p_in").get<double>();
    spec.p_out = j.at("p_out").get<double>();
    spec.rng_seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad generator spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

inline SbmSpec load_sbm_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("spec file " + path + " is not valid JSON: " + e.what());
  }
  return sbm_spec_from_json(j);
}

}  // namespace egonet
