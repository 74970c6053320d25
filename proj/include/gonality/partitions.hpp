#pragma once

#include "gonality/set_partition.hpp"

#include <optional>
#include <vector>

namespace gonality {

// Partition of a number m; parts kept in descending order.
struct NumberPartition {
  std::vector<int> parts;

  NumberPartition() = default;
  explicit NumberPartition(std::vector<int> p);
  int total() const;
  int count() const { return static_cast<int>(parts.size()); }
};

// Any three partitions in t have singleton coarsest common refinement.
bool check_triple_intersection(const std::vector<SetPartition>& t);

// Inductive construction of set partitions of {0..m-1} with the prescribed
// part sizes and the triple intersection property. Requires
// k_1 + ... + k_l - 2 >= m(l - 2). Throws Error("partition-sizes") or
// Error("partition-precondition").
std::vector<SetPartition> solve_partition_lemma(const std::vector<NumberPartition>& pis);

// Exhaustive search; m <= 6 only (Error("size-guard") otherwise).
std::optional<std::vector<SetPartition>> brute_force_solve(const std::vector<NumberPartition>& pis);

// True when the sizes of p's blocks match pi as multisets.
bool has_sizes(const SetPartition& p, const NumberPartition& pi);

}  // namespace gonality
