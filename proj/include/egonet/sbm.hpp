#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/graph.hpp"
#include "egonet/labels.hpp"

namespace egonet {

// Planted-partition generator: communities are denser inside than across,
// which is exactly the structure the detection pipeline is meant to find.
struct SbmSpec {
  std::vector<std::size_t> sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (sizes.empty()) throw ConfigError("sbm: at least one community required");
    for (auto s : sizes) {
      if (s == 0) throw ConfigError("sbm: community sizes must be positive");
    }
    if (!(0.0 <= p_out && p_out < p_in && p_in <= 1.0)) {
      throw ConfigError("sbm: require 0 <= p_out < p_in <= 1");
    }
  }
};

struct SbmResult {
  Graph graph;
  LabelMap labels;
  std::uint64_t attempts = 0;
};

// Nodes are named "0".."n-1" and labeled "c<community>". Each unordered pair
// is an independent Bernoulli draw. If the observer cannot anchor a 2-hop
// view (it ended up isolated), the draw is repeated with a derived seed up to
// `max_attempts` times; identical spec and seed always reproduce the same
// graph.
inline SbmResult gen_sbm(const SbmSpec& spec, const std::string& observer = "0",
                         int max_attempts = 100) {
  spec.validate();

  std::size_t n = 0;
  for (auto s : spec.sizes) n += s;
  std::vector<std::uint32_t> community(n);
  {
    std::size_t at = 0;
    for (std::size_t c = 0; c < spec.sizes.size(); ++c) {
      for (std::size_t k = 0; k < spec.sizes[c]; ++k) community[at++] = static_cast<std::uint32_t>(c);
    }
  }

  SbmResult result;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(derive_seed(spec.rng_seed, static_cast<std::uint64_t>(attempt)));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        double p = community[i] == community[j] ? spec.p_in : spec.p_out;
        if (rng.uniform01() < p) edges.emplace_back(i, j);
      }
    }

    Graph::Builder builder;
    // intern every edge endpoint in numeric order so dense ids match names
    std::vector<char> touched(n, 0);
    for (auto& [i, j] : edges) touched[i] = touched[j] = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (touched[i]) builder.intern(std::to_string(i));
    }
    for (auto& [i, j] : edges) builder.add_edge(std::to_string(i), std::to_string(j));
    Graph g = builder.build();

    result.attempts = static_cast<std::uint64_t>(attempt) + 1;
    auto obs = g.id_of(observer);
    if (!obs) continue;  // observer isolated: not even present in the edge set
    try {
      extract_ego(g, *obs, 2);
    } catch (const DataError&) {
      continue;
    }

    result.graph = std::move(g);
    for (std::uint32_t i = 0; i < n; ++i) {
      result.labels.set(std::to_string(i), "c" + std::to_string(community[i]));
    }
    return result;
  }
  throw DataError("sbm: observer \"" + observer + "\" had no viable 2-hop view after " +
                  std::to_string(max_attempts) + " attempts; try denser parameters");
}

}  // namespace egonet
