#pragma once
// Test-side reference implementations, written without the library's
// algorithms: brute-force canonical forms, Pruefer trees, direct union-find
// quotients.

#include "gonality/gluing.hpp"
#include "gonality/set_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using gonality::GluingDatum;
using gonality::MetricGraph;
using gonality::Rational;
using gonality::SetPartition;

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

using EdgeList = std::vector<std::pair<int, int>>;

// All labeled trees on n vertices from Pruefer codes.
inline std::vector<EdgeList> labeled_trees(int n) {
  std::vector<EdgeList> out;
  if (n == 1) return {EdgeList{}};
  if (n == 2) return {EdgeList{{0, 1}}};
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    EdgeList es;
    for (int c : code)
      for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
          es.push_back({std::min(v, c), std::max(v, c)});
          --deg[v];
          --deg[c];
          break;
        }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) (a < 0 ? a : b) = v;
    es.push_back({a, b});
    out.push_back(es);
    int i = 0;
    while (i < n - 2 && ++code[i] == n) code[i++] = 0;
    if (i == n - 2) break;
  }
  return out;
}

inline EdgeList relabel(const EdgeList& es, const std::vector<int>& perm) {
  EdgeList r;
  for (auto [u, v] : es) r.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
  std::sort(r.begin(), r.end());
  return r;
}

// One representative per isomorphism class, by brute force over permutations.
inline std::vector<EdgeList> unlabeled_trees(int n) {
  std::map<EdgeList, EdgeList> seen;
  for (const auto& es : labeled_trees(n)) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
      EdgeList r = relabel(es, perm);
      if (first || r < best) best = r;
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.emplace(best, es);
  }
  std::vector<EdgeList> out;
  for (auto& [k, v] : seen) out.push_back(k);
  return out;
}

inline MetricGraph tree_graph(int n, const EdgeList& es) {
  MetricGraph t(n);
  for (auto [u, v] : es) t.add_edge(u, v, 1);
  return t;
}

// Quotient counts by direct union-find on (point, copy) pairs.
struct QuotientCounts {
  int vertices = 0;
  int edges = 0;
  int components = 0;
};

inline QuotientCounts quotient_counts(const GluingDatum& gd) {
  int n = gd.tree.num_vertices(), d = gd.d;
  auto id = [&](int v, int c) { return v * d + c; };
  std::set<std::pair<int, int>> vclasses;
  QuotientCounts q;
  for (int v = 0; v < n; ++v) q.vertices += gd.vertex_partitions[v].num_blocks();
  for (int e = 0; e < gd.tree.num_edges(); ++e) q.edges += gd.edge_partitions[e].num_blocks();
  Dsu dsu(n * d);
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (gd.vertex_partitions[v].same_block(a, b)) dsu.unite(id(v, a), id(v, b));
  for (int e = 0; e < gd.tree.num_edges(); ++e)
    for (int c = 0; c < d; ++c) dsu.unite(id(gd.tree.edge(e).u, c), id(gd.tree.edge(e).v, c));
  for (int x = 0; x < n * d; ++x) q.components += dsu.find(x) == x;
  return q;
}

inline int genus(const GluingDatum& gd) {
  auto q = quotient_counts(gd);
  return q.edges - q.vertices + q.components;
}

// Riemann-Hurwitz defects computed from partitions; minimum over all blocks.
inline int min_rh(const GluingDatum& gd) {
  int best = 1 << 30;
  for (int v = 0; v < gd.tree.num_vertices(); ++v) {
    const SetPartition& p = gd.vertex_partitions[v];
    int l = gd.tree.valency(v);
    for (const auto& blk : p.blocks()) {
      int m = static_cast<int>(blk.size());
      int k = 0;
      for (auto h : gd.tree.half_edges(v))
        for (const auto& eb : gd.edge_partitions[h.edge].blocks())
          if (std::find(blk.begin(), blk.end(), eb.front()) != blk.end()) ++k;
      best = std::min(best, (k - 2) - m * (l - 2));
    }
  }
  return best;
}

inline bool structurally_valid(const GluingDatum& gd) {
  for (int e = 0; e < gd.tree.num_edges(); ++e) {
    const auto& ed = gd.tree.edge(e);
    if (!gd.edge_partitions[e].refines(gd.vertex_partitions[ed.u]) ||
        !gd.edge_partitions[e].refines(gd.vertex_partitions[ed.v]))
      return false;
  }
  return quotient_counts(gd).components == 1;
}

inline bool valid(const GluingDatum& gd) { return structurally_valid(gd) && min_rh(gd) >= 0; }

// Every pair of copies glued along at most two edges at any vertex.
inline bool intervals_ok(const GluingDatum& gd) {
  for (int a = 0; a < gd.d; ++a)
    for (int b = a + 1; b < gd.d; ++b)
      for (int v = 0; v < gd.tree.num_vertices(); ++v) {
        int c = 0;
        for (auto h : gd.tree.half_edges(v)) c += gd.edge_partitions[h.edge].same_block(a, b);
        if (c > 2) return false;
      }
  return true;
}

// All valid data on the given tree with d copies, by full product search with
// refinement filtering.
template <class F>
void for_each_valid_datum(const MetricGraph& tree, int d, F f) {
  auto parts = gonality::all_set_partitions(d);
  int n = tree.num_vertices(), m = tree.num_edges();
  int np = static_cast<int>(parts.size());
  std::vector<int> vp(n, 0), ep(m, 0);
  std::function<void(int)> edges = [&](int e) {
    if (e == m) {
      GluingDatum gd;
      gd.tree = tree;
      gd.d = d;
      for (int x : vp) gd.vertex_partitions.push_back(parts[x]);
      for (int x : ep) gd.edge_partitions.push_back(parts[x]);
      if (valid(gd)) f(gd);
      return;
    }
    const auto& ed = tree.edge(e);
    for (int x = 0; x < np; ++x) {
      if (!parts[x].refines(parts[vp[ed.u]]) || !parts[x].refines(parts[vp[ed.v]])) continue;
      ep[e] = x;
      edges(e + 1);
    }
  };
  std::function<void(int)> verts = [&](int v) {
    if (v == n) {
      edges(0);
      return;
    }
    for (int x = 0; x < np; ++x) {
      vp[v] = x;
      verts(v + 1);
    }
  };
  verts(0);
}

// Brute-force canonical string: all vertex relabelings and copy permutations.
inline std::string brute_canonical(const GluingDatum& gd) {
  int n = gd.tree.num_vertices();
  std::vector<int> perm(n), cp(gd.d);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::vector<std::string> vs(n);
      for (int v = 0; v < n; ++v) vs[perm[v]] = gd.vertex_partitions[v].permuted(cp).str();
      std::vector<std::string> es;
      for (int e = 0; e < gd.tree.num_edges(); ++e) {
        int a = perm[gd.tree.edge(e).u], b = perm[gd.tree.edge(e).v];
        es.push_back(std::to_string(std::min(a, b)) + "-" + std::to_string(std::max(a, b)) + ":" +
                     gd.edge_partitions[e].permuted(cp).str());
      }
      std::sort(es.begin(), es.end());
      std::string s;
      for (auto& x : vs) s += x + "|";
      for (auto& x : es) s += x + "|";
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Connected multigraphs (loops allowed) with all valencies 3, genus g >= 2,
// one per isomorphism class.
inline std::vector<MetricGraph> trivalent_graphs(int g) {
  int n = 2 * g - 2, m = 3 * g - 3;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) slots.push_back({u, v});
  std::map<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> classes;
  std::vector<std::pair<int, int>> cur;
  std::vector<int> deg(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == m) {
      for (int x : deg)
        if (x != 3) return;
      Dsu dsu(n);
      for (auto [u, v] : cur) dsu.unite(u, v);
      for (int v = 0; v < n; ++v)
        if (dsu.find(v) != dsu.find(0)) return;
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> best;
      bool first = true;
      do {
        std::vector<std::pair<int, int>> r;
        for (auto [u, v] : cur) r.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        std::sort(r.begin(), r.end());
        if (first || r < best) best = r;
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.emplace(best, cur);
      return;
    }
    for (std::size_t i = from; i < slots.size(); ++i) {
      auto [u, v] = slots[i];
      int add = u == v ? 2 : 1;
      if (deg[u] + add > 3 || (u != v && deg[v] + 1 > 3)) continue;
      deg[u] += add;
      if (u != v) deg[v] += 1;
      cur.push_back(slots[i]);
      rec(i);
      cur.pop_back();
      deg[u] -= add;
      if (u != v) deg[v] -= 1;
    }
  };
  rec(0);
  std::vector<MetricGraph> out;
  for (auto& [k, es] : classes) {
    MetricGraph gr(n);
    for (auto [u, v] : es) gr.add_edge(u, v, 1);
    out.push_back(gr);
  }
  return out;
}

// Independent q-reduction on a small multigraph, by repeated maximal legal
// set firing found through burning from q. Returns chips left at q.
inline long long reduced_chips_at(int n, const std::vector<std::pair<int, int>>& edges, std::vector<long long> d, int q) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges)
    if (u != v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  // Make effective away from q: move debt toward q along a BFS tree by firing
  // everything farther than the debtor's level.
  std::vector<int> dist(n, -1);
  std::vector<int> order{q};
  dist[q] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (dist[w] < 0) {
        dist[w] = dist[order[i]] + 1;
        order.push_back(w);
      }
  auto fire_set = [&](const std::vector<char>& s) {
    for (int v = 0; v < n; ++v)
      if (s[v])
        for (int w : adj[v])
          if (!s[w]) {
            --d[v];
            ++d[w];
          }
  };
  for (int guard = 0; guard < 100000; ++guard) {
    int debtor = -1;
    for (int v = 0; v < n; ++v)
      if (v != q && d[v] < 0 && (debtor < 0 || dist[v] > dist[debtor])) debtor = v;
    if (debtor < 0) break;
    // Fire the complement of the ball strictly inside debtor's level.
    std::vector<char> s(n, 0);
    for (int v = 0; v < n; ++v) s[v] = dist[v] >= dist[debtor] ? 0 : 1;
    // Firing vertices closer to q sends chips outward toward the debtor.
    fire_set(s);
  }
  while (true) {
    std::vector<char> burnt(n, 0);
    burnt[q] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (burnt[v]) continue;
        long long threats = 0;
        for (int w : adj[v]) threats += burnt[w];
        if (threats > d[v]) {
          burnt[v] = 1;
          changed = true;
        }
      }
    }
    std::vector<char> s(n);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      s[v] = !burnt[v];
      any = any || s[v];
    }
    if (!any) break;
    fire_set(s);
  }
  return d[q];
}

}  // namespace oracle
