#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egonet/classify.hpp"
#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/labels.hpp"
#include "egonet/score.hpp"

namespace egonet {

// a = true positive, b = false negative, c = false positive, d = true negative
struct ConfusionMatrix {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;

  std::size_t total() const { return a + b + c + d; }
  std::size_t positives() const { return a + b; }
  std::size_t negatives() const { return c + d; }
};

inline ConfusionMatrix confusion(const EgoView& view, const Prediction& pred,
                                 const LabelMap& labels) {
  std::string_view home = labels.require(view.name(kObserverLocal));
  ConfusionMatrix cm;
  for (std::size_t j = 0; j < pred.test_nodes.size(); ++j) {
    bool truth = labels.require(view.name(pred.test_nodes[j])) == home;
    bool guess = pred.positive[j] != 0;
    if (truth) {
      guess ? ++cm.a : ++cm.b;
    } else {
      guess ? ++cm.c : ++cm.d;
    }
  }
  return cm;
}

struct Metrics {
  double accuracy = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
};

inline Metrics metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw DataError("accuracy undefined: empty test set");
  if (cm.positives() == 0) throw DataError("tpr undefined: no positive test nodes");
  if (cm.negatives() == 0) throw DataError("fpr undefined: no negative test nodes");
  Metrics m;
  m.accuracy = static_cast<double>(cm.a + cm.d) / static_cast<double>(cm.total());
  m.tpr = static_cast<double>(cm.a) / static_cast<double>(cm.positives());
  m.fpr = static_cast<double>(cm.c) / static_cast<double>(cm.negatives());
  return m;
}

struct RocPoint {
  double threshold = 0.0;  // admit scores >= threshold
  double fpr = 0.0;
  double tpr = 0.0;
};

// Staircase from (0,0) to (1,1); equal scores enter as one group, so a tie
// group spanning both classes produces a diagonal segment.
struct RocCurve {
  std::vector<RocPoint> points;
};

// Core form over arrays aligned with an implicit test set.
inline RocCurve roc(std::span<const double> scores, std::span<const char> truth) {
  std::size_t pos = 0;
  for (char t : truth) pos += t != 0;
  std::size_t neg = truth.size() - pos;
  if (pos == 0 || neg == 0) {
    throw DataError("roc: test set needs both classes, has " + std::to_string(pos) +
                    " positives of " + std::to_string(truth.size()));
  }

  std::vector<std::size_t> order(truth.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return scores[x] > scores[y]; });

  RocCurve curve;
  curve.points.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    double s = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == s; ++i) {
      (truth[order[i]] ? tp : fp) += 1;
    }
    curve.points.push_back({s, static_cast<double>(fp) / static_cast<double>(neg),
                            static_cast<double>(tp) / static_cast<double>(pos)});
  }
  return curve;
}

// Label-aware form over a view's test set; every test node must be labeled.
inline RocCurve roc(const EgoView& view, const ScoreVector& scores,
                    std::span<const LocalId> test, const LabelMap& labels) {
  std::string_view home = labels.require(view.name(kObserverLocal));
  std::vector<double> s(test.size());
  std::vector<char> t(test.size());
  for (std::size_t j = 0; j < test.size(); ++j) {
    s[j] = scores[test[j]];
    t[j] = labels.require(view.name(test[j])) == home;
  }
  return roc(s, t);
}

// Trapezoidal area; equals P(score(pos) > score(neg)) + P(tie)/2.
inline double auc(const RocCurve& curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const RocPoint& lo = curve.points[i - 1];
    const RocPoint& hi = curve.points[i];
    area += (hi.fpr - lo.fpr) * (hi.tpr + lo.tpr) / 2.0;
  }
  return area;
}

// Gain of `candidate` over `baseline`, measured against the informative
// margin above the random-ranking AUC of 1/2.
inline double relative_improvement(double candidate, double baseline) {
  double margin = baseline - 0.5;
  if (margin == 0.0) throw DataError("relative improvement undefined: baseline AUC is 0.5");
  return (candidate - baseline) / margin;
}

}  // namespace egonet
