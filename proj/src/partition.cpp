#include "maxekpp/partition.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace maxekpp {

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("empty partition");
  for (int l : labels_)
    if (l < 1) throw std::invalid_argument("component labels must be >= 1");
}

Partition Partition::singletons(int node_count) {
  std::vector<int> labels(static_cast<std::size_t>(node_count));
  for (int v = 1; v <= node_count; ++v) labels[v - 1] = v;
  return Partition(std::move(labels));
}

Partition Partition::single_component(int node_count) {
  return Partition(std::vector<int>(static_cast<std::size_t>(node_count), 1));
}

int Partition::label(int node) const {
  if (node < 1 || node > node_count())
    throw std::out_of_range("node " + std::to_string(node) + " outside 1.." +
                            std::to_string(node_count()));
  return labels_[node - 1];
}

int Partition::component_count() const {
  return static_cast<int>(used_labels().size());
}

std::vector<int> Partition::component(int label) const {
  std::vector<int> members;
  for (int v = 1; v <= node_count(); ++v)
    if (labels_[v - 1] == label) members.push_back(v);
  return members;
}

std::vector<std::vector<int>> Partition::components() const {
  std::map<int, std::vector<int>> by_label;
  for (int v = 1; v <= node_count(); ++v) by_label[labels_[v - 1]].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_label.size());
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  return out;
}

std::vector<int> Partition::used_labels() const {
  std::vector<int> labels = labels_;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool Partition::is_canonical() const {
  int next = 1;
  std::map<int, bool> seen;
  for (int l : labels_) {
    if (!seen.count(l)) {
      if (l != next) return false;
      seen[l] = true;
      ++next;
    }
  }
  return true;
}

Partition Partition::canonicalized() const {
  std::vector<int> relabel(labels_.size());
  std::map<int, int> mapping;
  int next = 1;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = mapping.emplace(labels_[i], next);
    if (inserted) ++next;
    relabel[i] = it->second;
  }
  return Partition(std::move(relabel));
}

bool operator==(const Partition& a, const Partition& b) {
  if (a.node_count() != b.node_count()) return false;
  return a.canonicalized().labels_ == b.canonicalized().labels_;
}

bool Partition::precedes(const Partition& other) const {
  return canonicalized().labels_ < other.canonicalized().labels_;
}

Partition parse_partition(std::istream& in, int node_count) {
  std::vector<int> labels(static_cast<std::size_t>(node_count), 0);
  std::vector<bool> assigned(static_cast<std::size_t>(node_count), false);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int node = 0, label = 0;
    if (!(fields >> node >> label))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected '<node> <label>'");
    if (node < 1 || node > node_count)
      throw std::runtime_error("line " + std::to_string(line_no) + ": node " +
                               std::to_string(node) + " outside 1.." +
                               std::to_string(node_count));
    if (assigned[node - 1])
      throw std::runtime_error("line " + std::to_string(line_no) + ": node " +
                               std::to_string(node) + " assigned twice");
    if (label < 1)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": labels must be >= 1");
    labels[node - 1] = label;
    assigned[node - 1] = true;
  }
  for (int v = 1; v <= node_count; ++v)
    if (!assigned[v - 1])
      throw std::runtime_error("node " + std::to_string(v) + " unassigned");
  return Partition(std::move(labels));
}

void write_partition(std::ostream& out, const Partition& p) {
  for (int v = 1; v <= p.node_count(); ++v)
    out << v << ' ' << p.label(v) << '\n';
}

}  // namespace maxekpp
