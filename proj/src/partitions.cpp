#include "gonality/partitions.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gonality {

NumberPartition::NumberPartition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw Error("partition-sizes", "parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int NumberPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool has_sizes(const SetPartition& p, const NumberPartition& pi) {
  auto s = p.block_sizes();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s == pi.parts;
}

bool check_triple_intersection(const std::vector<SetPartition>& t) {
  if (t.size() < 3) return true;
  int m = t.front().size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int together = 0;
      for (const auto& p : t) together += p.same_block(i, j);
      if (together >= 3) return false;
    }
  return true;
}

namespace {

// Consecutive blocks in the order of parts.
SetPartition consecutive(const std::vector<int>& parts) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < parts.size(); ++b) labels.insert(labels.end(), parts[b], static_cast<int>(b));
  return SetPartition::from_labels(labels);
}

// First block (by smallest element) of the requested size.
int first_block_of_size(const std::vector<std::vector<int>>& blocks, int size) {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (static_cast<int>(blocks[b].size()) == size) return static_cast<int>(b);
  throw Error("partition-internal", "missing block of size " + std::to_string(size));
}

void remove_one(std::vector<int>& parts, int value) {
  parts.erase(std::find(parts.begin(), parts.end(), value));
}

// pis sorted by part count ascending; m >= 1; l >= 3.
std::vector<SetPartition> induct(std::vector<NumberPartition> pis, int m) {
  const std::size_t l = pis.size();
  if (m == 1) return std::vector<SetPartition>(l, SetPartition::singletons(1));
  if (pis[1].count() == m) {
    std::vector<SetPartition> out(l, SetPartition::singletons(m));
    out[0] = consecutive(pis[0].parts);
    return out;
  }
  // Largest parts of pi_1, pi_2 exceed 1 here; pi_3 has two parts and
  // pi_h (h >= 4) a unit part by the counting argument.
  int a1 = pis[0].parts.front(), a2 = pis[1].parts.front();
  if (pis[2].count() < 2) throw Error("partition-internal", "third partition has a single part");
  int a3 = pis[2].parts[0], b3 = pis[2].parts[1];
  std::vector<NumberPartition> reduced = pis;
  remove_one(reduced[0].parts, a1);
  if (a1 > 1) reduced[0].parts.push_back(a1 - 1);
  remove_one(reduced[1].parts, a2);
  if (a2 > 1) reduced[1].parts.push_back(a2 - 1);
  remove_one(reduced[2].parts, a3);
  remove_one(reduced[2].parts, b3);
  reduced[2].parts.push_back(a3 + b3 - 1);
  for (std::size_t h = 3; h < l; ++h) {
    if (pis[h].parts.back() != 1) throw Error("partition-internal", "no unit part to discard");
    reduced[h].parts.pop_back();
  }
  for (auto& p : reduced) p = NumberPartition(p.parts);

  // Recurse in sorted order, then undo the permutation.
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return reduced[x].count() < reduced[y].count(); });
  std::vector<NumberPartition> sorted;
  for (std::size_t i : order) sorted.push_back(reduced[i]);
  auto sub_sorted = induct(sorted, m - 1);
  std::vector<SetPartition> sub(l);
  for (std::size_t i = 0; i < l; ++i) sub[order[i]] = sub_sorted[i];

  const int x = m - 1;  // the new element
  std::vector<SetPartition> out(l);
  std::vector<std::vector<int>> a_prime(3);
  for (int h = 0; h < 2; ++h) {
    int size = (h == 0 ? a1 : a2) - 1;
    auto blocks = sub[h].blocks();
    int b = first_block_of_size(blocks, size);
    a_prime[h] = blocks[b];
    out[h] = sub[h].extended(blocks[b].front());
  }
  {
    auto blocks = sub[2].blocks();
    int b = first_block_of_size(blocks, a3 + b3 - 1);
    const auto& a3p = blocks[b];
    int common = -1;
    for (int e : a3p)
      if (std::find(a_prime[0].begin(), a_prime[0].end(), e) != a_prime[0].end() &&
          std::find(a_prime[1].begin(), a_prime[1].end(), e) != a_prime[1].end())
        common = e;
    std::vector<int> b_set;
    if (common >= 0) b_set.push_back(common);
    for (int e : a3p)
      if (static_cast<int>(b_set.size()) < b3 && e != common) b_set.push_back(e);
    std::vector<int> labels = sub[2].labels();
    int fresh = sub[2].num_blocks();
    for (int e : b_set) labels[e] = fresh;
    labels.push_back(b);  // x joins the rest of A_3'
    out[2] = SetPartition::from_labels(labels);
  }
  for (std::size_t h = 3; h < l; ++h) out[h] = sub[h].extended();
  (void)x;
  return out;
}

}  // namespace

std::vector<SetPartition> solve_partition_lemma(const std::vector<NumberPartition>& pis) {
  if (pis.empty()) throw Error("partition-sizes", "no partitions given");
  const int m = pis.front().total();
  const int l = static_cast<int>(pis.size());
  int ksum = 0;
  for (const auto& p : pis) {
    if (p.total() != m) throw Error("partition-sizes", "partitions are of different numbers");
    if (p.parts.empty()) throw Error("partition-sizes", "empty number partition");
    ksum += p.count();
  }
  if (ksum - 2 < m * (l - 2))
    throw Error("partition-precondition", "sum of part counts minus 2 (" + std::to_string(ksum - 2) +
                                              ") is below m(l-2) = " + std::to_string(m * (l - 2)));
  if (l <= 2) {
    std::vector<SetPartition> out;
    for (const auto& p : pis) out.push_back(consecutive(p.parts));
    return out;
  }
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pis[x].count() < pis[y].count(); });
  std::vector<NumberPartition> sorted;
  for (std::size_t i : order) sorted.push_back(pis[i]);
  auto res = induct(sorted, m);
  std::vector<SetPartition> out(l);
  for (int i = 0; i < l; ++i) out[order[i]] = res[i];
  return out;
}

std::optional<std::vector<SetPartition>> brute_force_solve(const std::vector<NumberPartition>& pis) {
  if (pis.empty()) return std::vector<SetPartition>{};
  const int m = pis.front().total();
  if (m > 6) throw Error("size-guard", "brute force limited to m <= 6");
  auto all = all_set_partitions(m);
  std::vector<std::vector<const SetPartition*>> options(pis.size());
  for (std::size_t h = 0; h < pis.size(); ++h)
    for (const auto& p : all)
      if (has_sizes(p, pis[h])) options[h].push_back(&p);
  std::vector<int> together(m * m, 0);
  std::vector<SetPartition> chosen(pis.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t h) -> bool {
    if (h == pis.size()) return true;
    for (const SetPartition* p : options[h]) {
      bool ok = true;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (p->same_block(i, j) && ++together[i * m + j] >= 3) ok = false;
      if (ok) {
        chosen[h] = *p;
        if (rec(h + 1)) return true;
      }
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (p->same_block(i, j)) --together[i * m + j];
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return chosen;
}

}  // namespace gonality
