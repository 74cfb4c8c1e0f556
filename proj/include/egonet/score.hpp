#pragma once

#include <string>
#include <utility>
#include <vector>

#include "egonet/common.hpp"

namespace egonet {

// Ranking function over the local ids of one ego view, plus enough
// provenance (method name and parameters) to re-run the computation.
struct ScoreVector {
  std::vector<double> values;
  std::string method;
  std::vector<std::pair<std::string, std::string>> params;

  void tag(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }

  double operator[](LocalId v) const { return values[v]; }
  std::size_t size() const { return values.size(); }
};

}  // namespace egonet
