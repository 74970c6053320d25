#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gonality {

// Partition of {0..n-1} stored as a restricted growth string: block ids are
// numbered in order of their smallest element.
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition singletons(int n);
  static SetPartition whole(int n);
  // Blocks must cover {0..n-1} exactly once. Throws std::invalid_argument.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(rgs_.size()); }
  int num_blocks() const { return num_blocks_; }
  int block_of(int i) const { return rgs_.at(i); }
  bool same_block(int i, int j) const { return rgs_.at(i) == rgs_.at(j); }
  const std::vector<int>& labels() const { return rgs_; }
  // Blocks sorted ascending, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  // Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;
  SetPartition meet(const SetPartition& other) const;
  SetPartition join(const SetPartition& other) const;
  // Relabels element i as perm[i].
  SetPartition permuted(const std::vector<int>& perm) const;
  // Adds element n; joined to the block of join_with, or a new singleton if < 0.
  SetPartition extended(int join_with = -1) const;

  std::string str() const;  // e.g. "{0,2}{1}"

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.rgs_ <=> b.rgs_; }

 private:
  std::vector<int> rgs_;
  int num_blocks_ = 0;
};

// All set partitions of {0..n-1} in restricted-growth order.
std::vector<SetPartition> all_set_partitions(int n);
// All partitions refining p.
std::vector<SetPartition> refinements(const SetPartition& p);

}  // namespace gonality
