#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/labels.hpp"

namespace egonet {

// Sparse non-negative restart distribution over ego nodes. Only the
// normalized form matters to the walk, so any positive rescaling of the
// entries produces the same ranking.
struct EscapeVector {
  std::vector<std::pair<LocalId, double>> entries;  // sorted by node, weights > 0
  std::string description;

  double total_mass() const {
    double sum = 0.0;
    for (auto& [_, w] : entries) sum += w;
    return sum;
  }

  std::vector<LocalId> support() const {
    std::vector<LocalId> s;
    s.reserve(entries.size());
    for (auto& [v, _] : entries) s.push_back(v);
    return s;
  }

  // dense beta = b / ||b||_1
  std::vector<double> normalized(std::size_t n) const {
    std::vector<double> beta(n, 0.0);
    double mass = total_mass();
    for (auto& [v, w] : entries) beta[v] += w / mass;
    return beta;
  }
};

inline EscapeVector ev_uniform(const EgoView& view) {
  EscapeVector ev;
  ev.description = "uniform";
  ev.entries.reserve(view.node_count());
  for (LocalId v = 0; v < view.node_count(); ++v) ev.entries.emplace_back(v, 1.0);
  return ev;
}

inline EscapeVector ev_from_set(const EgoView& view, const std::vector<LocalId>& set,
                                const std::vector<double>* weights = nullptr) {
  if (set.empty()) throw ConfigError("escape vector: restart set is empty");
  if (weights && weights->size() != set.size()) {
    throw ConfigError("escape vector: weights do not match the restart set");
  }
  EscapeVector ev;
  ev.description = "set";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= view.node_count()) {
      throw DataError("escape vector: node " + std::to_string(set[i]) + " not in view");
    }
    double w = weights ? (*weights)[i] : 1.0;
    if (w <= 0.0) throw ConfigError("escape vector: weights must be positive");
    ev.entries.emplace_back(set[i], w);
  }
  std::sort(ev.entries.begin(), ev.entries.end());
  return ev;
}

enum class EvStrategy {
  random_positive,       // k positives drawn uniformly at random
  high_degree_positive,  // k positives of largest visible degree
  observer_plus_top,     // observer plus k highest-degree positives
};

inline const char* to_string(EvStrategy s) {
  switch (s) {
    case EvStrategy::random_positive: return "random_positive";
    case EvStrategy::high_degree_positive: return "high_degree_positive";
    case EvStrategy::observer_plus_top: return "observer_plus_top";
  }
  return "?";
}

inline EvStrategy parse_strategy(const std::string& text) {
  for (EvStrategy s : {EvStrategy::random_positive, EvStrategy::high_degree_positive,
                       EvStrategy::observer_plus_top}) {
    if (text == to_string(s)) return s;
  }
  throw ConfigError("unknown escape-vector strategy \"" + text +
                    "\"; expected random_positive, high_degree_positive, or observer_plus_top");
}

// Positive candidates for restart-set selection: same institution as the
// observer, observer excluded, unlabeled nodes skipped. Sorted by ascending
// global id.
inline std::vector<LocalId> positive_candidates(const EgoView& view, const LabelMap& labels) {
  auto flags = positive_flags(view, labels);
  std::vector<LocalId> pos;
  for (LocalId v = 1; v < view.node_count(); ++v) {
    if (flags[v]) pos.push_back(v);
  }
  std::sort(pos.begin(), pos.end(), [&](LocalId a, LocalId b) {
    return view.to_global[a] < view.to_global[b];
  });
  return pos;
}

// Deterministic given (strategy, seed). High-degree selection breaks ties by
// ascending global id.
inline EscapeVector ev_strategy(const EgoView& view, const LabelMap& labels, EvStrategy strategy,
                                std::size_t k, std::uint64_t rng_seed = 0) {
  if (k == 0) throw ConfigError("escape vector strategy: k must be >= 1");
  std::vector<LocalId> pos = positive_candidates(view, labels);
  if (pos.size() < k) {
    throw DataError("escape vector strategy: need " + std::to_string(k) + " positive nodes, only " +
                    std::to_string(pos.size()) + " available");
  }

  std::vector<LocalId> chosen;
  if (strategy == EvStrategy::random_positive) {
    Rng rng(rng_seed);
    for (std::size_t i = 0; i < k; ++i) {  // partial Fisher-Yates
      std::size_t j = i + static_cast<std::size_t>(rng.bounded(pos.size() - i));
      std::swap(pos[i], pos[j]);
      chosen.push_back(pos[i]);
    }
  } else {
    std::sort(pos.begin(), pos.end(), [&](LocalId a, LocalId b) {
      auto da = view.degree(a), db = view.degree(b);
      if (da != db) return da > db;
      return view.to_global[a] < view.to_global[b];
    });
    chosen.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(k));
    if (strategy == EvStrategy::observer_plus_top) chosen.push_back(0);
  }
  std::sort(chosen.begin(), chosen.end());

  EscapeVector ev = ev_from_set(view, chosen);
  ev.description = std::string(to_string(strategy)) + ":" + std::to_string(k);
  return ev;
}

}  // namespace egonet
