#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/score.hpp"

namespace egonet {

// Number of shared neighbors of a and b inside the view. Both adjacency
// lists are sorted by local id, so a linear merge suffices.
inline std::size_t shared_neighbor_count(const EgoView& view, LocalId a, LocalId b) {
  std::span<const LocalId> na = view.neighbors(a);
  std::span<const LocalId> nb = view.neighbors(b);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) {
      ++i;
    } else if (nb[j] < na[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Shared neighbors weighted by 1/ln(degree): rare shared contacts count for
// more than hubs. A shared neighbor of degree 1 is impossible in a valid
// view (it touches both endpoints), so ln(1) = 0 flags corruption.
inline double adamic_adar_pair(const EgoView& view, LocalId a, LocalId b) {
  std::span<const LocalId> na = view.neighbors(a);
  std::span<const LocalId> nb = view.neighbors(b);
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] < nb[j]) {
      ++i;
    } else if (nb[j] < na[i]) {
      ++j;
    } else {
      std::size_t d = view.degree(na[i]);
      if (d < 2) {
        throw DataError("adamic_adar: shared neighbor " + view.name(na[i]) +
                        " has degree " + std::to_string(d) + "; view is corrupt");
      }
      total += 1.0 / std::log(static_cast<double>(d));
      ++i;
      ++j;
    }
  }
  return total;
}

// Scores every node by its shared-neighbor count with the observer.
inline ScoreVector common_neighbors(const EgoView& view) {
  ScoreVector score;
  score.method = "common_neighbors";
  score.values.resize(view.node_count());
  for (LocalId v = 0; v < view.node_count(); ++v) {
    score.values[v] =
        v == kObserverLocal ? 0.0 : static_cast<double>(shared_neighbor_count(view, kObserverLocal, v));
  }
  return score;
}

// Scores every node by its degree-discounted shared-neighbor weight with
// the observer.
inline ScoreVector adamic_adar(const EgoView& view) {
  ScoreVector score;
  score.method = "adamic_adar";
  score.values.resize(view.node_count());
  for (LocalId v = 0; v < view.node_count(); ++v) {
    score.values[v] = v == kObserverLocal ? 0.0 : adamic_adar_pair(view, kObserverLocal, v);
  }
  return score;
}

}  // namespace egonet
