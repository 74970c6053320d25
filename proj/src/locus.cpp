#include "gonality/locus.hpp"

#include "gonality/affine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace gonality {

namespace {

using Adj = std::vector<std::vector<int>>;

std::vector<int> centers(const Adj& adj) {
  int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n), layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu(const Adj& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const Adj& adj) {
  std::string best;
  for (int c : centers(adj)) {
    std::string s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

Adj adjacency(const MetricGraph& t) {
  Adj adj(t.num_vertices());
  for (const auto& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// BFS from the first center; parents get smaller ids.
MetricTree relabel_bfs(const Adj& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> id(n, -1), order{centers(adj).front()};
  id[order[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (id[w] < 0) {
        id[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
  MetricTree t(n);
  std::vector<int> parent(n, -1);
  for (std::size_t i = 1; i < order.size(); ++i) {
    int v = order[i];
    for (int w : adj[v])
      if (id[w] < id[v]) parent[id[v]] = id[w];
  }
  for (int v = 1; v < n; ++v) t.add_edge(parent[v], v, 1);
  return t;
}

std::string labelled_code(const MetricTree& t, const std::vector<SetPartition>& vp,
                          const std::vector<SetPartition>& ep, VertexId v, EdgeId via) {
  std::vector<std::string> kids;
  for (HalfEdge h : t.half_edges(v)) {
    if (h.edge == via) continue;
    kids.push_back(ep[h.edge].str() + labelled_code(t, vp, ep, t.far_end(h), h.edge));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + vp[v].str();
  for (auto& k : kids) s += k;
  return s + ")";
}

struct Tables {
  std::vector<SetPartition> all;
  std::vector<std::vector<int>> finer;    // indices refining partition i
  std::vector<std::vector<int>> coarser;  // indices partition i refines
  std::vector<int> blocks;
  std::vector<std::vector<char>> joins;   // joins[i][pair index]
  std::vector<std::vector<int>> inside;   // inside[e][p]: blocks of e per block of p, flattened by p block
  std::vector<char> singleton;
};

Tables make_tables(int d) {
  Tables t;
  t.all = all_set_partitions(d);
  int n = static_cast<int>(t.all.size());
  t.finer.resize(n);
  t.coarser.resize(n);
  for (int i = 0; i < n; ++i) {
    t.blocks.push_back(t.all[i].num_blocks());
    t.singleton.push_back(t.all[i].num_blocks() == d);
    std::vector<char> j;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) j.push_back(t.all[i].same_block(a, b));
    t.joins.push_back(std::move(j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.all[j].refines(t.all[i])) {
        t.finer[i].push_back(j);
        t.coarser[j].push_back(i);
      }
  return t;
}

class Search {
 public:
  Search(const MetricTree& tree, int g, int d, const Tables& tab, std::int64_t budget)
      : t_(tree), g_(g), d_(d), tab_(tab), budget_(budget) {
    int n = t_.num_vertices();
    parent_edge_.assign(n, -1);
    children_.resize(n);
    for (EdgeId e = 0; e < t_.num_edges(); ++e) {
      parent_edge_[t_.edge(e).v] = e;
      children_[t_.edge(e).u].push_back(e);
    }
    // Slots: vertex partition, then its child edges.
    for (VertexId v = 0; v < n; ++v) {
      slots_.push_back({v, -1});
      for (EdgeId e : children_[v]) slots_.push_back({v, e});
    }
    vp_.assign(n, -1);
    ep_.assign(t_.num_edges(), -1);
  }

  // False when the budget ran out.
  bool run(std::vector<GluingDatum>& out) {
    out_ = &out;
    return step(0, 0);
  }

 private:
  struct Slot {
    VertexId v;
    EdgeId e;
  };

  bool last_slot_of(std::size_t i) const {
    return i + 1 == slots_.size() || slots_[i + 1].v != slots_[i].v;
  }

  bool vertex_ok(VertexId v) const {
    const SetPartition& p = tab_.all[vp_[v]];
    std::vector<EdgeId> inc = children_[v];
    if (parent_edge_[v] >= 0) inc.push_back(parent_edge_[v]);
    int l = static_cast<int>(inc.size());
    if (l == 1 && tab_.singleton[vp_[v]]) return false;
    if (l == 2 && ep_[inc[0]] == vp_[v] && ep_[inc[1]] == vp_[v]) return false;
    // Interval gluing: each pair glued along at most two incident edges.
    int pairs = static_cast<int>(tab_.joins[0].size());
    for (int q = 0; q < pairs; ++q) {
      int c = 0;
      for (EdgeId e : inc) c += tab_.joins[ep_[e]][q];
      if (c > 2) return false;
    }
    std::vector<int> k(p.num_blocks(), 0), m(p.num_blocks(), 0);
    for (int i = 0; i < d_; ++i) ++m[p.block_of(i)];
    for (EdgeId e : inc)
      for (const auto& b : tab_.all[ep_[e]].blocks()) ++k[p.block_of(b.front())];
    for (int b = 0; b < p.num_blocks(); ++b)
      if ((k[b] - 2) - m[b] * (l - 2) < 0) return false;
    return true;
  }

  // genus_part = sum over finished vertices of nb(parent edge) - nb(vertex).
  bool step(std::size_t i, int genus_part) {
    if (budget_ >= 0 && ++nodes_ > budget_) return false;
    if (i == slots_.size()) {
      if (1 - tab_.blocks[vp_[0]] + genus_part != g_) return true;
      SetPartition join = tab_.all[vp_[0]];
      for (int p : vp_) join = join.join(tab_.all[p]);
      if (join.num_blocks() != 1) return true;
      GluingDatum gd;
      gd.tree = t_;
      gd.d = d_;
      for (int p : vp_) gd.vertex_partitions.push_back(tab_.all[p]);
      for (int p : ep_) gd.edge_partitions.push_back(tab_.all[p]);
      out_->push_back(std::move(gd));
      return true;
    }
    const Slot s = slots_[i];
    int remaining = t_.num_vertices() - s.v - 1;
    auto next = [&](int gp) {
      if (last_slot_of(i) && !vertex_ok(s.v)) return true;
      return step(i + 1, gp);
    };
    if (s.e < 0) {
      const std::vector<int>* options;
      std::vector<int> every;
      if (s.v == 0) {
        every.resize(tab_.all.size());
        std::iota(every.begin(), every.end(), 0);
        options = &every;
      } else {
        options = &tab_.coarser[ep_[parent_edge_[s.v]]];
      }
      for (int p : *options) {
        vp_[s.v] = p;
        int gp = genus_part;
        if (s.v > 0) gp += tab_.blocks[ep_[parent_edge_[s.v]]] - tab_.blocks[p];
        int base = 1 - tab_.blocks[vp_[0]];
        if (base + gp > g_) continue;
        // Each later vertex adds at most d - 1.
        if (base + gp + remaining * (d_ - 1) < g_) continue;
        if (!next(gp)) return false;
      }
      vp_[s.v] = -1;
    } else {
      for (int p : tab_.finer[vp_[s.v]]) {
        ep_[s.e] = p;
        if (!next(genus_part)) return false;
      }
      ep_[s.e] = -1;
    }
    return true;
  }

  const MetricTree& t_;
  int g_, d_;
  const Tables& tab_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::vector<EdgeId>> children_;
  std::vector<Slot> slots_;
  std::vector<int> vp_, ep_;
  std::vector<GluingDatum>* out_ = nullptr;
};

BasicGluingDatum<Affine> symbolic(const GluingDatum& gd) {
  BasicGluingDatum<Affine> a;
  a.d = gd.d;
  a.vertex_partitions = gd.vertex_partitions;
  a.edge_partitions = gd.edge_partitions;
  a.tree = BasicMetricGraph<Affine>(gd.tree.num_vertices());
  int n = gd.tree.num_edges();
  for (EdgeId e = 0; e < n; ++e)
    a.tree.add_edge(gd.tree.edge(e).u, gd.tree.edge(e).v, Affine::variable(e, n, gd.tree.edge(e).length));
  return a;
}

}  // namespace

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GONALITY_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::vector<MetricTree> small_trees(int max_edges) {
  std::vector<std::pair<int, std::string>> keys;
  std::vector<MetricTree> out;
  std::vector<Adj> layer{Adj(1)};
  for (int edges = 0; edges <= max_edges; ++edges) {
    std::vector<std::pair<std::string, MetricTree>> found;
    for (const Adj& a : layer) found.emplace_back(tree_code(a), relabel_bfs(a));
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& f : found) out.push_back(std::move(f.second));
    if (edges == max_edges) break;
    std::map<std::string, Adj> next;
    for (const Adj& a : layer)
      for (int v = 0; v < static_cast<int>(a.size()); ++v) {
        Adj b = a;
        int w = static_cast<int>(b.size());
        b.emplace_back();
        b[v].push_back(w);
        b[w].push_back(v);
        next.emplace(tree_code(b), std::move(b));
      }
    layer.clear();
    for (auto& [code, a] : next) layer.push_back(std::move(a));
  }
  return out;
}

std::string canonical_code(const GluingDatum& gd) {
  Adj adj = adjacency(gd.tree);
  std::vector<int> perm(gd.d);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<SetPartition> vp, ep;
    for (const auto& p : gd.vertex_partitions) vp.push_back(p.permuted(perm));
    for (const auto& p : gd.edge_partitions) ep.push_back(p.permuted(perm));
    for (int c : centers(adj)) {
      std::string s = labelled_code(gd.tree, vp, ep, c, -1);
      if (best.empty() || s < best) best = s;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return "d" + std::to_string(gd.d) + ":" + best;
}

CellImage cell_image(const GluingDatum& gd) {
  auto q = quotient_unchecked(symbolic(gd));
  auto pruned = prune_dangling(q.phi.source);
  CellImage out;
  out.graph = MetricGraph(pruned.num_vertices());
  int n = gd.tree.num_edges();
  for (const auto& e : pruned.edges()) {
    out.graph.add_edge(e.u, e.v, e.length.value);
    Vector row(n, 0);
    for (std::size_t i = 0; i < e.length.grad.size() && static_cast<int>(i) < n; ++i) row[i] = e.length.grad[i];
    out.psi.push_back(std::move(row));
  }
  return out;
}

int cell_dimension(const GluingDatum& gd) { return matrix_rank(cell_image(gd).psi); }

Enumeration enumerate_cells(int g, int d, const EnumerationLimits& limits) {
  if (g < 2 || d < 1) throw Error("bad-parameters", "need g >= 2 and d >= 1");
  if (d > 5) throw Error("limit-exceeded", "d above 5 is beyond desk scale");
  int max_edges = limits.max_edges >= 0 ? limits.max_edges : 2 * g + 2 * d - 5;
  if (max_edges > 10) throw Error("limit-exceeded", "trees above 10 edges are beyond desk scale");
  Enumeration result;
  if (d == 1) return result;
  Tables tab = make_tables(d);
  auto trees = small_trees(max_edges);
  result.total_trees = static_cast<int>(trees.size());
  int first = std::clamp(limits.first_tree, 0, result.total_trees);
  int last = limits.max_trees >= 0 ? std::min(result.total_trees, first + limits.max_trees) : result.total_trees;
  int count = last - first;
  std::vector<std::vector<LocusCell>> per_tree(count);
  std::vector<char> finished(count, 0);
  std::atomic<int> cursor{0};
  auto work = [&] {
    while (true) {
      int i = cursor++;
      if (i >= count) return;
      const MetricTree& t = trees[first + i];
      if (t.num_edges() == 0) {
        finished[i] = 1;
        continue;
      }
      std::vector<GluingDatum> found;
      Search s(t, g, d, tab, limits.max_nodes);
      if (!s.run(found)) continue;
      std::map<std::string, LocusCell> uniq;
      for (auto& gd : found) {
        std::string code = canonical_code(gd);
        if (uniq.count(code)) continue;
        LocusCell c;
        c.dimension = cell_dimension(gd);
        c.code = code;
        c.datum = std::move(gd);
        uniq.emplace(c.code, std::move(c));
      }
      for (auto& [code, c] : uniq) per_tree[i].push_back(std::move(c));
      finished[i] = 1;
    }
  };
  int nt = std::max(1, std::min(thread_count(limits.threads), count));
  std::vector<std::thread> pool;
  for (int k = 1; k < nt; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  result.next_tree = last;
  for (int i = 0; i < count; ++i)
    if (!finished[i]) {
      result.next_tree = first + i;
      break;
    }
  for (int i = 0; i < result.next_tree - first; ++i)
    for (auto& c : per_tree[i]) result.cells.push_back(std::move(c));
  std::sort(result.cells.begin(), result.cells.end(),
            [](const LocusCell& a, const LocusCell& b) { return a.code < b.code; });
  return result;
}

int max_cell_dimension(const std::vector<LocusCell>& cells) {
  int best = -1;
  for (const auto& c : cells) best = std::max(best, c.dimension);
  return best;
}

bool membership(const std::vector<LocusCell>& cells, const MetricGraph& g, int* witness) {
  if (!is_connected(g) || genus(g) < 1) throw Error("bad-graph", "expected a connected graph of positive genus");
  MetricGraph target = prune_dangling(g);
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const auto& cell = cells[ci];
    if (genus(cell.datum.tree) != 0) continue;
    CellImage im = cell_image(cell.datum);
    if (im.graph.num_vertices() != target.num_vertices() || im.graph.num_edges() != target.num_edges()) continue;
    int n = cell.datum.tree.num_edges();
    bool hit = false;
    for_each_isomorphism(im.graph, target, [](EdgeId, EdgeId) { return true; },
                         [&](const std::vector<VertexId>&, const std::vector<EdgeId>& emap) {
                           std::vector<Inequality> sys;
                           for (int f = 0; f < im.graph.num_edges(); ++f) {
                             const Rational& len = target.edge(emap[f]).length;
                             Vector neg = im.psi[f];
                             for (auto& x : neg) x = -x;
                             sys.push_back({im.psi[f], len, false});
                             sys.push_back({neg, -len, false});
                           }
                           for (int e = 0; e < n; ++e) {
                             Vector a(n, 0);
                             a[e] = 1;
                             sys.push_back({a, 0, false});
                           }
                           hit = feasible_point(sys, n).has_value();
                           return hit;
                         });
    if (hit) {
      if (witness) *witness = static_cast<int>(ci);
      return true;
    }
  }
  return false;
}

}  // namespace gonality
