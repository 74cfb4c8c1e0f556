#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "egonet/common.hpp"

namespace egonet {

struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t edges_kept = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

// Immutable undirected simple graph in CSR form. Node identifiers are
// arbitrary strings at the file boundary and dense integers internally;
// neighbor lists are sorted ascending. Safe to share across threads once
// built.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const std::string& name(NodeId v) const { return names_[v]; }

  std::optional<NodeId> id_of(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? std::nullopt : std::optional<NodeId>(it->second);
  }

  class Builder;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::size_t edge_count_ = 0;
};

class Graph::Builder {
 public:
  NodeId intern(std::string_view name) {
    auto [it, inserted] = ids_.emplace(std::string(name), static_cast<NodeId>(names_.size()));
    if (inserted) names_.push_back(it->first);
    return it->second;
  }

  void add_edge(std::string_view u, std::string_view v) {
    NodeId a = intern(u);
    NodeId b = intern(v);
    if (a == b) {
      ++self_loops_;
      return;
    }
    pairs_.emplace_back(std::min(a, b), std::max(a, b));
  }

  LoadReport report() const {
    LoadReport r;
    r.self_loops = self_loops_;
    return r;
  }

  Graph build(LoadReport* report = nullptr) {
    std::sort(pairs_.begin(), pairs_.end());
    std::size_t unique_count = 0;
    std::size_t dupes = 0;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i > 0 && pairs_[i] == pairs_[i - 1]) {
        ++dupes;
      } else {
        pairs_[unique_count++] = pairs_[i];
      }
    }
    pairs_.resize(unique_count);

    Graph g;
    g.names_ = std::move(names_);
    g.ids_ = std::move(ids_);
    g.edge_count_ = pairs_.size();
    const std::size_t n = g.names_.size();
    std::vector<std::size_t> deg(n, 0);
    for (auto& [a, b] : pairs_) {
      ++deg[a];
      ++deg[b];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * pairs_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto& [a, b] : pairs_) {
      g.adj_[cursor[a]++] = b;
      g.adj_[cursor[b]++] = a;
    }
    // pairs were sorted, so each neighbor run is already ascending for the
    // low endpoint; the high endpoint runs need a per-node sort
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    if (report) {
      report->self_loops = self_loops_;
      report->duplicates = dupes;
      report->edges_kept = pairs_.size();
    }
    return g;
  }

 private:
  std::vector<std::pair<NodeId, NodeId>> pairs_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::size_t self_loops_ = 0;
};

// Edge-list format: UTF-8 text, one edge per line as two whitespace-separated
// node tokens. Blank lines and lines whose first non-blank character is '#'
// are ignored. Duplicate edges and self-loops are dropped and counted in the
// report; anything else malformed is a ParseError with its line number.
inline Graph load_graph(std::istream& in, LoadReport* report = nullptr) {
  Graph::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  std::size_t lines_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;  // blank
    if (u[0] == '#') continue;
    if (!(ls >> v) || (ls >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected exactly two node tokens");
    }
    builder.add_edge(u, v);
    ++lines_read;
  }
  if (lines_read == 0) throw DataError("edge list is empty");
  LoadReport rep;
  Graph g = builder.build(&rep);
  rep.lines_read = lines_read;
  if (report) *report = rep;
  return g;
}

inline Graph load_graph_file(const std::string& path, LoadReport* report = nullptr) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list: " + path);
  return load_graph(in, report);
}

inline void save_edge_list(const Graph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) out << g.name(u) << ' ' << g.name(v) << '\n';
    }
  }
}

// Dense-index <-> name mapping, one `index<TAB>name` line per node in index
// order. The anonymized-publishing counterpart of the loader's interning.
inline void export_id_map(const Graph& g, std::ostream& out) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << v << '\t' << g.name(v) << '\n';
  }
}

}  // namespace egonet
