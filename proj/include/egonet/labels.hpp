#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"

namespace egonet {

// Ground-truth institution per node name. The binary label of node i with
// respect to an observer o is 1 iff both carry the same institution.
class LabelMap {
 public:
  LabelMap() = default;

  void set(std::string name, std::string institution) {
    map_[std::move(name)] = std::move(institution);
  }

  std::optional<std::string_view> institution_of(std::string_view name) const {
    auto it = map_.find(std::string(name));
    if (it == map_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  std::string_view require(std::string_view name) const {
    auto inst = institution_of(name);
    if (!inst) throw DataError("node \"" + std::string(name) + "\" has no label");
    return *inst;
  }

  std::size_t size() const { return map_.size(); }

  const std::unordered_map<std::string, std::string>& raw() const { return map_; }

 private:
  std::unordered_map<std::string, std::string> map_;
};

// Label file: one `node<TAB>institution` per line; blank lines and lines
// starting with '#' are ignored. A repeated node keeps the last entry.
inline LabelMap load_labels(std::istream& in) {
  LabelMap labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw ParseError("label file line " + std::to_string(line_no) +
                       ": expected node<TAB>institution");
    }
    labels.set(line.substr(0, tab), line.substr(tab + 1));
  }
  return labels;
}

inline LabelMap load_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open label file: " + path);
  return load_labels(in);
}

inline void save_labels(const LabelMap& labels, std::ostream& out) {
  std::vector<const std::string*> names;
  names.reserve(labels.size());
  for (auto& [name, _] : labels.raw()) names.push_back(&name);
  std::sort(names.begin(), names.end(), [](auto* a, auto* b) { return *a < *b; });
  for (auto* name : names) out << *name << '\t' << *labels.institution_of(*name) << '\n';
}

// Binary ground truth over the view, relative to the observer's institution.
// Nodes without a label are reported through `missing` when provided and
// treated as negative; callers that cannot tolerate gaps use require().
inline std::vector<char> positive_flags(const EgoView& view, const LabelMap& labels,
                                        std::vector<LocalId>* missing = nullptr) {
  auto obs = labels.institution_of(view.name(0));
  if (!obs) throw DataError("observer \"" + view.name(0) + "\" has no label");
  std::vector<char> flags(view.node_count(), 0);
  for (LocalId v = 0; v < view.node_count(); ++v) {
    auto inst = labels.institution_of(view.name(v));
    if (!inst) {
      if (missing) missing->push_back(v);
      continue;
    }
    flags[v] = (*inst == *obs) ? 1 : 0;
  }
  return flags;
}

inline double positive_ratio(const std::vector<char>& flags, std::size_t total) {
  std::size_t positives = 0;
  for (char f : flags) positives += static_cast<unsigned char>(f);
  return static_cast<double>(positives) / static_cast<double>(total);
}

}  // namespace egonet
