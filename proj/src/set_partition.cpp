#include "gonality/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

namespace gonality {

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition p;
  std::map<int, int> renum;
  p.rgs_.reserve(labels.size());
  for (int l : labels) {
    auto it = renum.find(l);
    if (it == renum.end()) it = renum.emplace(l, static_cast<int>(renum.size())).first;
    p.rgs_.push_back(it->second);
  }
  p.num_blocks_ = static_cast<int>(renum.size());
  return p;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return from_labels(l);
}

SetPartition SetPartition::whole(int n) { return from_labels(std::vector<int>(n, 0)); }

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> l(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) throw std::invalid_argument("element " + std::to_string(x) + " out of range");
      if (l[x] >= 0) throw std::invalid_argument("element " + std::to_string(x) + " repeated");
      l[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x)
    if (l[x] < 0) throw std::invalid_argument("element " + std::to_string(x) + " missing");
  return from_labels(l);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int i = 0; i < size(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(num_blocks_, 0);
  for (int b : rgs_) ++out[b];
  return out;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<int> image(num_blocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int& img = image[rgs_[i]];
    if (img < 0)
      img = coarser.rgs_[i];
    else if (img != coarser.rgs_[i])
      return false;
  }
  return true;
}

SetPartition SetPartition::meet(const SetPartition& other) const {
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) l[i] = rgs_[i] * (other.num_blocks_ + 1) + other.rgs_.at(i);
  return from_labels(l);
}

SetPartition SetPartition::join(const SetPartition& other) const {
  boost::disjoint_sets_with_storage<> uf(size());
  std::vector<int> first(num_blocks_, -1), first_o(other.num_blocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int& a = first[rgs_[i]];
    if (a < 0) a = i; else uf.union_set(a, i);
    int& b = first_o[other.rgs_.at(i)];
    if (b < 0) b = i; else uf.union_set(b, i);
  }
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) l[i] = static_cast<int>(uf.find_set(i));
  return from_labels(l);
}

SetPartition SetPartition::permuted(const std::vector<int>& perm) const {
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) l[perm.at(i)] = rgs_[i];
  return from_labels(l);
}

SetPartition SetPartition::extended(int join_with) const {
  std::vector<int> l = rgs_;
  l.push_back(join_with >= 0 ? rgs_.at(join_with) : num_blocks_);
  return from_labels(l);
}

std::string SetPartition::str() const {
  std::string s;
  for (const auto& b : blocks()) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition::from_labels({}));
    return out;
  }
  std::vector<int> a(n, 0), mx(n, 0);
  while (true) {
    out.push_back(SetPartition::from_labels(a));
    int i = n - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[i];
    }
  }
  return out;
}

std::vector<SetPartition> refinements(const SetPartition& p) {
  // Product of independent refinements of each block.
  auto blocks = p.blocks();
  std::vector<SetPartition> out;
  std::vector<int> labels(p.size());
  std::vector<std::vector<SetPartition>> per_block;
  for (const auto& b : blocks) per_block.push_back(all_set_partitions(static_cast<int>(b.size())));
  std::vector<std::size_t> idx(blocks.size(), 0);
  while (true) {
    int offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& sub = per_block[b][idx[b]];
      for (std::size_t k = 0; k < blocks[b].size(); ++k) labels[blocks[b][k]] = offset + sub.block_of(static_cast<int>(k));
      offset += sub.num_blocks();
    }
    out.push_back(SetPartition::from_labels(labels));
    std::size_t b = 0;
    while (b < blocks.size() && ++idx[b] == per_block[b].size()) idx[b++] = 0;
    if (b == blocks.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gonality
