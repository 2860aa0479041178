#pragma once

#include <iosfwd>
#include <vector>

namespace maxekpp {

/// Total assignment of nodes 1..n to positive integer component labels.
/// Canonical form is the restricted-growth labeling: scanning nodes in id
/// order, the first node of every component carries the smallest label not
/// yet used, so node 1 always has label 1 and a new label exceeds the
/// running maximum by exactly 1. Two partitions of the same node set are
/// equal iff their canonical forms match.
class Partition {
 public:
  /// labels[i] is the label of node i+1; all labels must be >= 1.
  explicit Partition(std::vector<int> labels);

  static Partition singletons(int node_count);
  static Partition single_component(int node_count);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int label(int node) const;
  const std::vector<int>& labels() const { return labels_; }

  int component_count() const;
  /// Members of the component carrying the given label, ascending ids.
  std::vector<int> component(int label) const;
  /// All components as ascending-id member lists, ordered by label.
  std::vector<std::vector<int>> components() const;
  /// Labels in use, ascending.
  std::vector<int> used_labels() const;

  bool is_canonical() const;
  Partition canonicalized() const;

  /// Canonical-form equality.
  friend bool operator==(const Partition& a, const Partition& b);
  /// Lexicographic order on canonical label sequences.
  bool precedes(const Partition& other) const;

 private:
  std::vector<int> labels_;
};

/// Text form, one "<node> <label>" line per node in id order.
/// '#' comments and blank lines are tolerated when parsing; every node
/// must be assigned exactly once.
Partition parse_partition(std::istream& in, int node_count);
void write_partition(std::ostream& out, const Partition& p);

}  // namespace maxekpp
