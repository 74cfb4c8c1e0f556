#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/graph.hpp"

namespace egonet {

// The observer is ring 0, so it always gets local id 0.
inline constexpr LocalId kObserverLocal = 0;

// Observer-centered h-hop subgraph. Level rings are nested breadth-first
// shells around the observer; an edge is visible iff its lower endpoint sits
// at level <= h-1, so edges between two outermost nodes are hidden. Local
// ids are assigned by (level, ascending global id), which makes every ring a
// contiguous local-id range. Immutable once extracted.
struct EgoView {
  NodeId observer_global = 0;
  int hops = 0;

  std::vector<NodeId> to_global;                  // local -> global
  std::unordered_map<NodeId, LocalId> to_local;   // global -> local
  std::vector<int> level;                         // per local node
  std::vector<std::size_t> ring_begin;            // ring r = [ring_begin[r], ring_begin[r+1])

  std::vector<std::size_t> adj_offset;            // CSR over visible edges
  std::vector<LocalId> adj;
  std::size_t edge_count = 0;

  const Graph* world = nullptr;
  std::vector<std::string> names;                 // per local node

  std::size_t node_count() const { return to_global.size(); }

  std::span<const LocalId> neighbors(LocalId v) const {
    return {adj.data() + adj_offset[v], adj.data() + adj_offset[v + 1]};
  }

  // visible degree; underestimates the true degree of outermost nodes
  std::size_t degree(LocalId v) const { return adj_offset[v + 1] - adj_offset[v]; }

  std::size_t ring_size(int r) const { return ring_begin[r + 1] - ring_begin[r]; }

  const std::string& name(LocalId v) const { return names[v]; }
};

inline EgoView extract_ego(const Graph& g, NodeId observer, int hops) {
  if (hops < 1) throw ConfigError("hops must be >= 1");
  if (observer >= g.node_count()) throw DataError("observer id out of range");
  if (g.degree(observer) == 0) throw DataError("observer has no neighbors");

  EgoView view;
  view.observer_global = observer;
  view.hops = hops;
  view.world = &g;

  // breadth-first shells, each sorted by global id
  std::vector<std::vector<NodeId>> rings(static_cast<std::size_t>(hops) + 1);
  std::unordered_map<NodeId, int> lvl;
  rings[0].push_back(observer);
  lvl.emplace(observer, 0);
  for (int r = 1; r <= hops; ++r) {
    for (NodeId u : rings[r - 1]) {
      for (NodeId w : g.neighbors(u)) {
        if (lvl.emplace(w, r).second) rings[r].push_back(w);
      }
    }
    std::sort(rings[r].begin(), rings[r].end());
  }

  view.ring_begin.assign(static_cast<std::size_t>(hops) + 2, 0);
  for (int r = 0; r <= hops; ++r) {
    view.ring_begin[r + 1] = view.ring_begin[r] + rings[r].size();
    for (NodeId gid : rings[r]) {
      auto local = static_cast<LocalId>(view.to_global.size());
      view.to_global.push_back(gid);
      view.to_local.emplace(gid, local);
      view.level.push_back(r);
      view.names.push_back(g.name(gid));
    }
  }

  // visible edges: lower endpoint must be below the outermost level
  const std::size_t n = view.to_global.size();
  std::vector<std::pair<LocalId, LocalId>> edges;
  for (LocalId lu = 0; lu < n; ++lu) {
    if (view.level[lu] > hops - 1) break;  // rings are contiguous
    NodeId gu = view.to_global[lu];
    for (NodeId gw : g.neighbors(gu)) {
      LocalId lw = view.to_local.at(gw);
      // every neighbor of a sub-outermost node is in the view, and local ids
      // grow with level, so lu < lw keeps each visible edge exactly once
      if (lu < lw) edges.emplace_back(lu, lw);
    }
  }
  view.edge_count = edges.size();

  std::vector<std::size_t> deg(n, 0);
  for (auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  view.adj_offset.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) view.adj_offset[v + 1] = view.adj_offset[v] + deg[v];
  view.adj.resize(2 * edges.size());
  std::vector<std::size_t> cursor(view.adj_offset.begin(), view.adj_offset.end() - 1);
  for (auto& [a, b] : edges) {
    view.adj[cursor[a]++] = b;
    view.adj[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(view.adj.begin() + static_cast<std::ptrdiff_t>(view.adj_offset[v]),
              view.adj.begin() + static_cast<std::ptrdiff_t>(view.adj_offset[v + 1]));
  }
  return view;
}

inline EgoView extract_ego(const Graph& g, std::string_view observer_name, int hops) {
  auto id = g.id_of(observer_name);
  if (!id) throw DataError("observer \"" + std::string(observer_name) + "\" not in graph");
  return extract_ego(g, *id, hops);
}

inline std::vector<std::size_t> degrees(const EgoView& view) {
  std::vector<std::size_t> d(view.node_count());
  for (LocalId v = 0; v < d.size(); ++v) d[v] = view.degree(v);
  return d;
}

// Same format load_graph reads; round-trips to an isomorphic local graph.
inline void save_edge_list(const EgoView& view, std::ostream& out) {
  for (LocalId u = 0; u < view.node_count(); ++u) {
    for (LocalId v : view.neighbors(u)) {
      if (u < v) out << view.name(u) << ' ' << view.name(v) << '\n';
    }
  }
}

}  // namespace egonet
