#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/score.hpp"

namespace egonet {

// Which nodes get classified: everyone within `levels` hops of the observer,
// observer excluded.
struct TestScope {
  int levels = 2;

  static constexpr TestScope level1() { return {1}; }
  static constexpr TestScope within2() { return {2}; }
};

inline std::string to_string(TestScope scope) {
  if (scope.levels == 1) return "level1";
  if (scope.levels == 2) return "within2";
  return "within" + std::to_string(scope.levels);
}

inline TestScope parse_scope(const std::string& text) {
  if (text == "level1") return TestScope::level1();
  if (text == "within2") return TestScope::within2();
  throw ConfigError("unknown scope \"" + text + "\"; expected level1 or within2");
}

// Rings are contiguous local-id ranges, so the test set is simply
// [ring_begin[1], ring_begin[levels+1]).
inline std::vector<LocalId> test_set(const EgoView& view, TestScope scope) {
  if (scope.levels < 1) throw ConfigError("test scope must cover at least level 1");
  if (scope.levels > view.hops) {
    throw ConfigError("test scope " + to_string(scope) + " exceeds the view's " +
                      std::to_string(view.hops) + " hops");
  }
  std::vector<LocalId> nodes(view.ring_begin[static_cast<std::size_t>(scope.levels) + 1] -
                             view.ring_begin[1]);
  std::iota(nodes.begin(), nodes.end(), static_cast<LocalId>(view.ring_begin[1]));
  return nodes;
}

// Binary decision over a test set, plus the provenance needed to re-run it.
struct Prediction {
  std::vector<LocalId> test_nodes;              // ascending local id
  std::vector<char> positive;                   // aligned with test_nodes
  double threshold = std::numeric_limits<double>::infinity();
  std::string method;                           // ranking that was thresholded
  std::vector<std::pair<std::string, std::string>> params;

  std::size_t positive_count() const {
    std::size_t n = 0;
    for (char p : positive) n += p != 0;
    return n;
  }
};

// Marks exactly the k best-scored test nodes positive, ties at the cut
// resolved by ascending global id so the result is seed-free. The reported
// threshold is the k-th score (+inf when k = 0).
inline Prediction threshold_by_count(const EgoView& view, const ScoreVector& scores,
                                     TestScope scope, std::size_t k) {
  Prediction pred;
  pred.test_nodes = test_set(view, scope);
  pred.positive.assign(pred.test_nodes.size(), 0);
  pred.method = scores.method;
  pred.params = scores.params;
  pred.params.emplace_back("rule", "count");
  pred.params.emplace_back("k", std::to_string(k));
  pred.params.emplace_back("scope", to_string(scope));
  if (k > pred.test_nodes.size()) {
    throw ConfigError("threshold_by_count: k=" + std::to_string(k) + " exceeds test set size " +
                      std::to_string(pred.test_nodes.size()));
  }
  if (k == 0) return pred;

  // order[j] indexes into test_nodes
  std::vector<std::size_t> order(pred.test_nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    double sx = scores[pred.test_nodes[x]];
    double sy = scores[pred.test_nodes[y]];
    if (sx != sy) return sx > sy;
    return view.to_global[pred.test_nodes[x]] < view.to_global[pred.test_nodes[y]];
  });
  for (std::size_t j = 0; j < k; ++j) pred.positive[order[j]] = 1;
  pred.threshold = scores[pred.test_nodes[order[k - 1]]];
  return pred;
}

// The positive count the prior rule requests: round((f*(1-pi) + t*pi) * |T|).
inline std::size_t prior_count(double prior, double target_fpr, double target_tpr,
                               std::size_t test_size) {
  for (auto [name, value] : {std::pair<const char*, double>{"prior", prior},
                             {"target_fpr", target_fpr},
                             {"target_tpr", target_tpr}}) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ConfigError(std::string("prior threshold: ") + name + " must lie in [0,1]");
    }
  }
  double expected =
      (target_fpr * (1.0 - prior) + target_tpr * prior) * static_cast<double>(test_size);
  return static_cast<std::size_t>(std::llround(expected));
}

// Count threshold with k derived from a class prior and an operating point.
inline Prediction threshold_by_prior(const EgoView& view, const ScoreVector& scores,
                                     TestScope scope, double prior, double target_fpr,
                                     double target_tpr) {
  std::size_t k = prior_count(prior, target_fpr, target_tpr, test_set(view, scope).size());
  Prediction pred = threshold_by_count(view, scores, scope, k);
  for (auto& [key, value] : pred.params) {
    if (key == "rule") value = "prior";
  }
  pred.params.emplace_back("prior", format_double(prior));
  pred.params.emplace_back("target_fpr", format_double(target_fpr));
  pred.params.emplace_back("target_tpr", format_double(target_tpr));
  return pred;
}

}  // namespace egonet
