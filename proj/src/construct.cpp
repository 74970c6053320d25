#include "gonality/construct.hpp"

#include "gonality/morphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <type_traits>

namespace gonality {

void Recorder::note(const Affine& diff, int sign) {
  if (diff.is_constant()) return;
  // Every length built here is a linear form without constant term.
  Vector a(dims, 0);
  for (std::size_t i = 0; i < diff.grad.size() && i < static_cast<std::size_t>(dims); ++i) a[i] = diff.grad[i];
  if (sign == 0) {
    zero_forms.push_back(std::move(a));
    return;
  }
  if (sign < 0)
    for (auto& x : a) x = -x;
  strict.push_back({std::move(a), 0, true});
}

namespace {

template <class L>
int compare(const L& a, const L& b, Recorder* rec) {
  Rational dv = value_of(a) - value_of(b);
  int s = dv > 0 ? 1 : (dv < 0 ? -1 : 0);
  if constexpr (std::is_same_v<L, Affine>) {
    if (rec) rec->note(a - b, s);
  }
  return s;
}

struct Seg {
  EdgeId e;
  int copy;
  bool forward;
};

std::vector<Seg> reversed(std::vector<Seg> s) {
  std::reverse(s.begin(), s.end());
  for (auto& x : s) x.forward = !x.forward;
  return s;
}

template <class L>
struct Build {
  BasicGluingDatum<L> gd;
  std::map<VertexId, std::pair<VertexId, int>> at;
  std::map<EdgeId, std::vector<Seg>> path;
};

struct Mask {
  std::vector<char> v;
  std::vector<char> e;
};

int count(const std::vector<char>& x) { return static_cast<int>(std::count(x.begin(), x.end(), 1)); }

int genus_of(const Mask& m) { return count(m.e) - count(m.v) + 1; }

template <class L>
VertexId split_datum_edge(BasicGluingDatum<L>& gd, EdgeId e, const L& t) {
  VertexId x = gd.tree.split_edge(e, t);
  gd.vertex_partitions.push_back(gd.edge_partitions[e]);
  gd.edge_partitions.push_back(gd.edge_partitions[e]);
  return x;
}

template <class L>
VertexId tree_median(const BasicMetricGraph<L>& t, VertexId a, VertexId b, VertexId c) {
  std::set<VertexId> on_ab{a};
  for (auto [e, from] : tree_path(t, a, b)) on_ab.insert(t.edge(e).other(from));
  if (on_ab.count(c)) return c;
  for (auto [e, from] : tree_path(t, c, a)) {
    VertexId next = t.edge(e).other(from);
    if (on_ab.count(next)) return next;
  }
  return a;
}

// New copy d glued to copies[i] at the tip of a branch of length ext[i] hung
// at feet[i]. Returns the branch edges.
template <class L>
std::array<EdgeId, 3> attach_tripod(BasicGluingDatum<L>& gd, const std::array<VertexId, 3>& feet,
                                    const std::array<int, 3>& copies, const std::array<L, 3>& ext) {
  int d = gd.d;
  for (auto& p : gd.vertex_partitions) p = p.extended();
  for (auto& p : gd.edge_partitions) p = p.extended();
  gd.d = d + 1;
  std::array<EdgeId, 3> out{};
  for (int i = 0; i < 3; ++i) {
    VertexId tip = gd.tree.add_vertex();
    out[i] = gd.tree.add_edge(feet[i], tip, ext[i]);
    std::vector<int> labels(d + 1);
    std::iota(labels.begin(), labels.end(), 0);
    labels[d] = copies[i];
    gd.vertex_partitions.push_back(SetPartition::from_labels(labels));
    gd.edge_partitions.push_back(SetPartition::singletons(d + 1));
  }
  return out;
}

template <class L>
std::vector<Seg> tree_route(const BasicMetricGraph<L>& t, VertexId from, VertexId to, int copy) {
  std::vector<Seg> out;
  for (auto [e, v] : tree_path(t, from, to)) out.push_back({e, copy, t.edge(e).u == v});
  return out;
}

// Gluing pattern of the merged datum: copy k restricts to copy alpha[k] of the
// first datum and beta[k] of the second, -1 meaning a free tree copy.
template <class L>
Build<L> merge(const Build<L>& b1, const Build<L>& b2, VertexId y, int share) {
  auto [t1, c1] = b1.at.at(y);
  auto [t2, c2] = b2.at.at(y);
  const auto& g1 = b1.gd;
  const auto& g2 = b2.gd;
  int d1 = g1.d, d2 = g2.d;
  const SetPartition& p1 = g1.vertex_partitions[t1];
  const SetPartition& p2 = g2.vertex_partitions[t2];
  std::vector<int> beta_of(d1, -1), alpha_of(d2, -1);
  beta_of[c1] = c2;
  alpha_of[c2] = c1;
  if (share == 2) {
    auto blk1 = p1.blocks()[p1.block_of(c1)];
    auto blk2 = p2.blocks()[p2.block_of(c2)];
    if (blk1.size() != 2 || blk2.size() != 2)
      throw Error("cactus-merge", "shared gluing needs multiplicity two on both sides");
    int o1 = blk1[0] == c1 ? blk1[1] : blk1[0];
    int o2 = blk2[0] == c2 ? blk2[1] : blk2[0];
    beta_of[o1] = o2;
    alpha_of[o2] = o1;
  }
  int d = d1 + d2 - share;
  std::vector<int> alpha(d, -1), beta(d, -1), merged_of_beta(d2, -1);
  for (int k = 0; k < d1; ++k) {
    alpha[k] = k;
    beta[k] = beta_of[k];
    if (beta_of[k] >= 0) merged_of_beta[beta_of[k]] = k;
  }
  int next = d1;
  for (int j = 0; j < d2; ++j)
    if (alpha_of[j] < 0) {
      beta[next] = j;
      merged_of_beta[j] = next++;
    }

  Build<L> out;
  auto& gd = out.gd;
  gd.d = d;
  gd.tree = g1.tree;
  std::vector<VertexId> vmap2(g2.tree.num_vertices());
  for (VertexId v = 0; v < g2.tree.num_vertices(); ++v) vmap2[v] = v == t2 ? t1 : gd.tree.add_vertex();
  std::vector<EdgeId> emap2(g2.tree.num_edges());
  for (EdgeId e = 0; e < g2.tree.num_edges(); ++e) {
    const auto& ed = g2.tree.edge(e);
    emap2[e] = gd.tree.add_edge(vmap2[ed.u], vmap2[ed.v], ed.length);
  }
  auto side1 = [&](const SetPartition& p) {
    std::vector<int> l(d);
    int fresh = p.num_blocks();
    for (int k = 0; k < d; ++k) l[k] = alpha[k] >= 0 ? p.block_of(alpha[k]) : fresh++;
    return SetPartition::from_labels(l);
  };
  auto side2 = [&](const SetPartition& p) {
    std::vector<int> l(d);
    int fresh = p.num_blocks();
    for (int k = 0; k < d; ++k) l[k] = beta[k] >= 0 ? p.block_of(beta[k]) : fresh++;
    return SetPartition::from_labels(l);
  };
  gd.vertex_partitions.resize(gd.tree.num_vertices());
  for (VertexId v = 0; v < g1.tree.num_vertices(); ++v) gd.vertex_partitions[v] = side1(g1.vertex_partitions[v]);
  for (VertexId v = 0; v < g2.tree.num_vertices(); ++v)
    if (v != t2) gd.vertex_partitions[vmap2[v]] = side2(g2.vertex_partitions[v]);
  {
    UnionFind uf(d);
    std::vector<int> first1(p1.num_blocks(), -1), first2(p2.num_blocks(), -1);
    for (int k = 0; k < d; ++k) {
      if (alpha[k] >= 0) {
        int& f = first1[p1.block_of(alpha[k])];
        if (f < 0) f = k; else uf.union_set(f, k);
      }
      if (beta[k] >= 0) {
        int& f = first2[p2.block_of(beta[k])];
        if (f < 0) f = k; else uf.union_set(f, k);
      }
    }
    std::vector<int> l(d);
    for (int k = 0; k < d; ++k) l[k] = static_cast<int>(uf.find_set(k));
    gd.vertex_partitions[t1] = SetPartition::from_labels(l);
  }
  for (EdgeId e = 0; e < g1.tree.num_edges(); ++e) gd.edge_partitions.push_back(side1(g1.edge_partitions[e]));
  for (EdgeId e = 0; e < g2.tree.num_edges(); ++e) gd.edge_partitions.push_back(side2(g2.edge_partitions[e]));

  out.at = b1.at;
  out.path = b1.path;
  for (const auto& [v, loc] : b2.at)
    if (!out.at.count(v)) out.at[v] = {vmap2[loc.first], merged_of_beta[loc.second]};
  for (const auto& [e, segs] : b2.path) {
    std::vector<Seg> s;
    for (const Seg& x : segs) s.push_back({emap2[x.e], merged_of_beta[x.copy], x.forward});
    out.path[e] = std::move(s);
  }
  return out;
}

// m = 2 and k >= 2l - 1 at the location of v.
template <class L>
bool ramified_point(const Build<L>& b, VertexId v) {
  auto [t, c] = b.at.at(v);
  const SetPartition& p = b.gd.vertex_partitions[t];
  int blk = p.block_of(c);
  int m = 0;
  for (int i = 0; i < p.size(); ++i) m += p.block_of(i) == blk;
  int l = b.gd.tree.valency(t);
  int k = 0;
  for (HalfEdge h : b.gd.tree.half_edges(t))
    for (const auto& q : b.gd.edge_partitions[h.edge].blocks()) k += p.block_of(q.front()) == blk;
  return m == 2 && k >= 2 * l - 1;
}

template <class L>
class Engine {
 public:
  Engine(const BasicMetricGraph<L>& g, Recorder* rec) : g_(g), rec_(rec) {
    for (const auto& e : g.edges()) len_.push_back(e.length);
  }

  // Tripod edges get length a + delta instead of their given length.
  void set_auto(std::mt19937_64* rng) { rng_ = rng; }
  const std::vector<L>& lengths() const { return len_; }

  Mask full() const { return {std::vector<char>(g_.num_vertices(), 1), std::vector<char>(g_.num_edges(), 1)}; }

  Build<L> trivalent(const Mask& m) {
    if (genus_of(m) == 0) return identity(m);
    Peeled p = peel(m);
    if (!p.comps.empty()) {
      Build<L> b = trivalent(p.core);
      for (std::size_t i = 0; i < p.comps.size(); ++i) b = merge(b, identity(p.comps[i]), p.attach[i], 1);
      return b;
    }
    if (genus_of(m) == 1) return fold(m, smallest(m));
    VertexId y = removable(m);
    if (y < 0) return cactus(m, -1);
    Mask rest = m;
    rest.v[y] = 0;
    std::array<EdgeId, 3> es{};
    int n = 0;
    for (HalfEdge h : g_.half_edges(y))
      if (m.e[h.edge]) {
        es[n++] = h.edge;
        rest.e[h.edge] = 0;
      }
    Build<L> b = trivalent(rest);
    tripod_step(b, y, es);
    return b;
  }

  Build<L> cactus(const Mask& m, VertexId v1) {
    auto all = cactus_variants(m, v1, 1);
    if (all.empty()) throw Error("cactus-parity", "no decomposition puts the marked point on an odd-genus side");
    return all.front();
  }

  // Up to cap constructions, one per choice of decompositions, in the order
  // the greedy choice would try them.
  std::vector<Build<L>> cactus_variants(const Mask& m, VertexId v1, int cap) {
    int g = genus_of(m);
    if (g == 0) return {identity(m)};
    if (g % 2 == 0) v1 = -1;
    Peeled p = peel(m);
    if (!p.comps.empty()) {
      VertexId core_v1 = v1;
      int holder = -1;
      if (v1 >= 0 && !p.core.v[v1])
        for (std::size_t i = 0; i < p.comps.size(); ++i)
          if (p.comps[i].v[v1]) {
            holder = static_cast<int>(i);
            core_v1 = p.attach[i];
          }
      std::vector<Build<L>> out;
      for (Build<L> b : cactus_variants(p.core, core_v1, cap)) {
        for (std::size_t i = 0; i < p.comps.size(); ++i) {
          if (static_cast<int>(i) == holder)
            b = merge(b, doubled(p.comps[i], p.attach[i], v1), p.attach[i], 2);
          else
            b = merge(b, identity(p.comps[i]), p.attach[i], 1);
        }
        out.push_back(std::move(b));
      }
      return out;
    }
    if (g == 1) return {fold(m, v1 >= 0 ? v1 : smallest(m))};

    struct Cand {
      int balance;
      VertexId y;
      unsigned subset;
      Mask a, b;
      VertexId va, vb;
      int share;
    };
    std::vector<Cand> cands;
    bool any_cut = false;
    for (VertexId y = 0; y < g_.num_vertices(); ++y) {
      if (!m.v[y]) continue;
      auto pieces = pieces_at(m, y);
      int r = static_cast<int>(pieces.size());
      if (r < 2) continue;
      any_cut = true;
      if (r > 12) throw Error("size-guard", "too many blocks at one cut vertex");
      for (unsigned s = 1; s + 1 < (1u << r); ++s) {
        Mask a = empty(), b = empty();
        for (int i = 0; i < r; ++i) add_into(((s >> i) & 1) ? a : b, pieces[i]);
        int ga = genus_of(a), gb = genus_of(b);
        int bal = std::abs(ga - gb);
        if (g % 2 == 1) {
          if (ga % 2 == 0) continue;
          if (v1 >= 0 && v1 != y && !a.v[v1]) continue;
          cands.push_back({bal, y, s, a, b, v1 >= 0 ? v1 : -1, -1, 1});
        } else {
          if (!(s & 1u)) continue;
          if (ga % 2 == 1)
            cands.push_back({bal, y, s, a, b, y, y, 2});
          else
            cands.push_back({bal, y, s, a, b, -1, -1, 1});
        }
      }
    }
    if (!any_cut) throw Error("not-cactus", "a genus-" + std::to_string(g) + " block is not a cycle");
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
      return std::tie(x.balance, x.y, x.subset) < std::tie(y.balance, y.y, y.subset);
    });
    std::vector<Build<L>> out;
    for (const Cand& c : cands) {
      auto as = cactus_variants(c.a, c.va, cap);
      if (as.empty()) continue;
      auto bs = cactus_variants(c.b, c.vb, cap);
      for (const auto& ba : as)
        for (const auto& bb : bs) {
          try {
            Build<L> x = merge(ba, bb, c.y, c.share);
            if (v1 >= 0 && !ramified_point(x, v1)) continue;
            out.push_back(std::move(x));
          } catch (const Error& e) {
            if (e.kind() != "cactus-merge") throw;
          }
          if (static_cast<int>(out.size()) >= cap) return out;
        }
    }
    return out;
  }

 private:
  struct Peeled {
    Mask core;
    std::vector<Mask> comps;
    std::vector<VertexId> attach;
  };

  Mask empty() const { return {std::vector<char>(g_.num_vertices(), 0), std::vector<char>(g_.num_edges(), 0)}; }

  static void add_into(Mask& into, const Mask& x) {
    for (std::size_t i = 0; i < x.v.size(); ++i) into.v[i] |= x.v[i];
    for (std::size_t i = 0; i < x.e.size(); ++i) into.e[i] |= x.e[i];
  }

  static VertexId smallest(const Mask& m) {
    return static_cast<VertexId>(std::find(m.v.begin(), m.v.end(), 1) - m.v.begin());
  }

  int valency_in(const Mask& m, VertexId v) const {
    int k = 0;
    for (HalfEdge h : g_.half_edges(v)) k += m.e[h.edge];
    return k;
  }

  bool connected(const Mask& m) const {
    VertexId s = smallest(m);
    if (s >= g_.num_vertices()) return false;
    std::vector<char> seen(g_.num_vertices(), 0);
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdge h : g_.half_edges(v)) {
        if (!m.e[h.edge]) continue;
        VertexId w = g_.far_end(h);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (m.v[v] && !seen[v]) return false;
    return true;
  }

  Peeled peel(const Mask& m) const {
    Peeled p;
    p.core = m;
    std::vector<int> deg(g_.num_vertices(), 0);
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (m.v[v]) {
        deg[v] = valency_in(m, v);
        if (deg[v] == 1) leaves.push_back(v);
      }
    while (!leaves.empty()) {
      VertexId v = leaves.back();
      leaves.pop_back();
      if (!p.core.v[v] || deg[v] != 1) continue;
      p.core.v[v] = 0;
      for (HalfEdge h : g_.half_edges(v)) {
        if (!p.core.e[h.edge]) continue;
        p.core.e[h.edge] = 0;
        VertexId w = g_.far_end(h);
        if (--deg[w] == 1) leaves.push_back(w);
      }
    }
    UnionFind uf(g_.num_edges());
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (!m.v[v] || p.core.v[v]) continue;
      EdgeId first = -1;
      for (HalfEdge h : g_.half_edges(v)) {
        if (!m.e[h.edge]) continue;
        if (first < 0) first = h.edge; else uf.union_set(first, h.edge);
      }
    }
    std::map<std::size_t, int> index;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (!m.e[e] || p.core.e[e]) continue;
      auto [it, fresh] = index.emplace(uf.find_set(e), static_cast<int>(p.comps.size()));
      if (fresh) {
        p.comps.push_back(empty());
        p.attach.push_back(-1);
      }
      Mask& c = p.comps[it->second];
      c.e[e] = 1;
      for (VertexId w : {g_.edge(e).u, g_.edge(e).v}) {
        c.v[w] = 1;
        if (p.core.v[w]) p.attach[it->second] = w;
      }
    }
    return p;
  }

  std::vector<Mask> pieces_at(const Mask& m, VertexId y) const {
    UnionFind uf(g_.num_edges());
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (!m.v[v] || v == y) continue;
      EdgeId first = -1;
      for (HalfEdge h : g_.half_edges(v)) {
        if (!m.e[h.edge]) continue;
        if (first < 0) first = h.edge; else uf.union_set(first, h.edge);
      }
    }
    std::map<std::size_t, int> index;
    std::vector<Mask> out;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (!m.e[e]) continue;
      auto [it, fresh] = index.emplace(uf.find_set(e), static_cast<int>(out.size()));
      if (fresh) {
        out.push_back(empty());
        out.back().v[y] = 1;
      }
      Mask& c = out[it->second];
      c.e[e] = 1;
      c.v[g_.edge(e).u] = 1;
      c.v[g_.edge(e).v] = 1;
    }
    return out;
  }

  VertexId removable(const Mask& m) const {
    for (VertexId y = 0; y < g_.num_vertices(); ++y) {
      if (!m.v[y] || valency_in(m, y) != 3) continue;
      bool loop = false;
      for (HalfEdge h : g_.half_edges(y)) loop = loop || (m.e[h.edge] && g_.edge(h.edge).is_loop());
      if (loop) continue;
      Mask rest = m;
      rest.v[y] = 0;
      for (HalfEdge h : g_.half_edges(y)) rest.e[h.edge] = 0;
      if (connected(rest)) return y;
    }
    return -1;
  }

  Build<L> identity(const Mask& m) const {
    Build<L> b;
    std::vector<VertexId> id(g_.num_vertices(), -1);
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      if (m.v[v]) {
        id[v] = b.gd.tree.add_vertex();
        b.at[v] = {id[v], 0};
      }
    for (EdgeId e = 0; e < g_.num_edges(); ++e)
      if (m.e[e]) {
        EdgeId f = b.gd.tree.add_edge(id[g_.edge(e).u], id[g_.edge(e).v], len_[e]);
        b.path[e] = {{f, 0, true}};
      }
    b.gd.d = 1;
    b.gd.vertex_partitions.assign(b.gd.tree.num_vertices(), SetPartition::whole(1));
    b.gd.edge_partitions.assign(b.gd.tree.num_edges(), SetPartition::whole(1));
    return b;
  }

  // Two copies of the tree glued along the path from c to v1, whose lengths
  // double in the target so the glued part keeps its length upstairs.
  Build<L> doubled(const Mask& comp, VertexId c, VertexId v1) const {
    Build<L> base = identity(comp);
    const auto& t = base.gd.tree;
    std::vector<char> on_v(t.num_vertices(), 0), on_e(t.num_edges(), 0);
    VertexId a = base.at.at(c).first, z = base.at.at(v1).first;
    on_v[a] = 1;
    for (auto [e, from] : tree_path(t, a, z)) {
      on_e[e] = 1;
      on_v[t.edge(e).other(from)] = 1;
    }
    Build<L> b;
    b.at = base.at;
    b.path = base.path;
    for (VertexId v = 0; v < t.num_vertices(); ++v) b.gd.tree.add_vertex();
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
      const auto& ed = t.edge(e);
      b.gd.tree.add_edge(ed.u, ed.v, on_e[e] ? ed.length + ed.length : ed.length);
    }
    b.gd.d = 2;
    for (VertexId v = 0; v < t.num_vertices(); ++v)
      b.gd.vertex_partitions.push_back(on_v[v] ? SetPartition::whole(2) : SetPartition::singletons(2));
    for (EdgeId e = 0; e < t.num_edges(); ++e)
      b.gd.edge_partitions.push_back(on_e[e] ? SetPartition::whole(2) : SetPartition::singletons(2));
    return b;
  }

  // The 2:1 map from the cycle m to a segment, branched at w and its antipode.
  Build<L> fold(const Mask& m, VertexId w) {
    std::vector<VertexId> xs{w};
    std::vector<std::pair<EdgeId, bool>> steps;
    HalfEdge h{-1, 0};
    for (HalfEdge k : g_.half_edges(w))
      if (m.e[k.edge]) {
        h = k;
        break;
      }
    while (true) {
      steps.push_back({h.edge, h.end == 0});
      VertexId nxt = g_.far_end(h);
      if (nxt == w) break;
      xs.push_back(nxt);
      HalfEdge back{h.edge, 1 - h.end};
      for (HalfEdge k : g_.half_edges(nxt))
        if (m.e[k.edge] && !(k == back)) {
          h = k;
          break;
        }
    }
    int n = static_cast<int>(xs.size());
    std::vector<L> pos(n);
    L total{};
    for (int i = 0; i < n; ++i) {
      pos[i] = total;
      total = total + len_[steps[i].first];
    }
    L half = total / 2;
    std::vector<int> side(n, -1);
    std::vector<L> image(n);
    for (int i = 1; i < n; ++i) {
      side[i] = compare(pos[i], half, rec_);
      image[i] = side[i] <= 0 ? pos[i] : total - pos[i];
    }
    // Distinct target points, sorted: 0, the images, half.
    std::vector<L> vals{L{}, half};
    for (int i = 1; i < n; ++i) vals.push_back(image[i]);
    std::vector<int> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return compare(vals[a], vals[b], rec_) < 0; });
    std::vector<int> idx(vals.size());
    std::vector<L> pts;
    for (std::size_t r = 0; r < order.size(); ++r) {
      if (r == 0 || compare(vals[order[r]], pts.back(), rec_) != 0) pts.push_back(vals[order[r]]);
      idx[order[r]] = static_cast<int>(pts.size()) - 1;
    }
    int K = static_cast<int>(pts.size()) - 1;
    Build<L> b;
    auto& gd = b.gd;
    gd.d = 2;
    for (int j = 0; j <= K; ++j) gd.tree.add_vertex();
    for (int j = 0; j < K; ++j) gd.tree.add_edge(j, j + 1, pts[j + 1] - pts[j]);
    for (int j = 0; j <= K; ++j)
      gd.vertex_partitions.push_back(j == 0 || j == K ? SetPartition::whole(2) : SetPartition::singletons(2));
    gd.edge_partitions.assign(K, SetPartition::singletons(2));
    std::vector<int> at_idx(n);
    at_idx[0] = 0;
    b.at[w] = {0, 0};
    for (int i = 1; i < n; ++i) {
      at_idx[i] = idx[i + 1];
      b.at[xs[i]] = {at_idx[i], side[i] > 0 ? 1 : 0};
    }
    for (int i = 0; i < n; ++i) {
      int s0 = i == 0 ? -1 : side[i];
      int i0 = at_idx[i];
      int s1 = i + 1 == n ? 1 : side[i + 1];
      int i1 = i + 1 == n ? 0 : at_idx[i + 1];
      std::vector<Seg> segs;
      auto up = [&](int from, int to, int copy) {
        for (int j = from; j < to; ++j) segs.push_back({j, copy, true});
      };
      auto down = [&](int from, int to, int copy) {
        for (int j = from; j > to; --j) segs.push_back({j - 1, copy, false});
      };
      if (s0 < 0 && s1 < 0) {
        up(i0, i1, 0);
      } else if (s0 < 0) {
        up(i0, K, 0);
        down(K, i1, 1);
      } else {
        down(i0, i1, 1);
      }
      auto [e, fwd] = steps[i];
      b.path[e] = fwd ? segs : reversed(segs);
    }
    return b;
  }

  void tripod_step(Build<L>& b, VertexId y, const std::array<EdgeId, 3>& es) {
    std::array<VertexId, 3> feet{};
    std::array<int, 3> copies{};
    std::array<VertexId, 3> others{};
    for (int i = 0; i < 3; ++i) {
      others[i] = g_.edge(es[i]).other(y);
      std::tie(feet[i], copies[i]) = b.at.at(others[i]);
    }
    const auto& t = b.gd.tree;
    VertexId med = tree_median(t, feet[0], feet[1], feet[2]);
    std::array<L, 3> ext;
    for (int i = 0; i < 3; ++i) {
      L a = tree_distance(t, feet[i], med);
      if constexpr (std::is_same_v<L, Rational>) {
        if (rng_) {
          std::uniform_int_distribution<int> pick(4, 16);
          len_[es[i]] = a + Rational(pick(*rng_), 8);
        }
      }
      if (compare(len_[es[i]], a, rec_) <= 0)
        throw Error("outside-cone", "edge " + std::to_string(es[i]) + " is not longer than its distance term " +
                                        to_string(value_of(a)));
      ext[i] = (len_[es[i]] - a) / 2;
    }
    std::vector<std::vector<Seg>> routes(3);
    for (int i = 0; i < 3; ++i) routes[i] = tree_route(t, feet[i], med, b.gd.d);
    int fresh = b.gd.d;
    auto branch = attach_tripod(b.gd, feet, copies, ext);
    b.at[y] = {med, fresh};
    for (int i = 0; i < 3; ++i) {
      std::vector<Seg> s{{branch[i], copies[i], true}, {branch[i], fresh, false}};
      s.insert(s.end(), routes[i].begin(), routes[i].end());
      b.path[es[i]] = g_.edge(es[i]).u == others[i] ? s : reversed(s);
    }
  }

  const BasicMetricGraph<L>& g_;
  Recorder* rec_;
  std::vector<L> len_;
  std::mt19937_64* rng_ = nullptr;
};

Realization realize(const Build<Rational>& b, const MetricGraph& input) {
  Realization r;
  r.datum = b.gd;
  auto q = quotient_unchecked(b.gd);
  r.phi = std::move(q.phi);
  r.vertex_image.assign(input.num_vertices(), -1);
  for (const auto& [v, loc] : b.at)
    r.vertex_image[v] = q.vertex_of[loc.first][b.gd.vertex_partitions[loc.first].block_of(loc.second)];
  r.edge_image.resize(input.num_edges());
  for (const auto& [e, segs] : b.path)
    for (const Seg& s : segs)
      r.edge_image[e].push_back({q.edge_of[s.e][b.gd.edge_partitions[s.e].block_of(s.copy)], s.forward});
  return r;
}

bool all_trivalent(const MetricGraph& g) {
  if (g.num_vertices() == 1 && g.num_edges() == 1) return true;  // the circle
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) != 3) return false;
  return true;
}

BasicMetricGraph<Affine> symbolic(const MetricGraph& g, const Vector& ref) {
  BasicMetricGraph<Affine> a(g.num_vertices());
  int n = g.num_edges();
  for (EdgeId e = 0; e < n; ++e) a.add_edge(g.edge(e).u, g.edge(e).v, Affine::variable(e, n, ref[e]));
  return a;
}

GraphPoint target_image(const TropicalMorphism& phi, const GraphPoint& p) {
  if (p.is_vertex()) return GraphPoint::at_vertex(phi.vmap[p.vertex]);
  const Edge& se = phi.source.edge(p.edge);
  EdgeId f = phi.emap[p.edge];
  const Edge& te = phi.target.edge(f);
  Rational t = p.offset * phi.slope[p.edge];
  return point_on_edge(phi.target, f, phi.vmap[se.u] == te.u ? t : Rational(te.length - t));
}

std::vector<GraphPoint> fiber_points(const TropicalMorphism& phi, const GraphPoint& q) {
  std::vector<GraphPoint> out;
  if (q.is_vertex()) {
    for (VertexId v = 0; v < phi.source.num_vertices(); ++v)
      if (phi.vmap[v] == q.vertex) out.push_back(GraphPoint::at_vertex(v));
    return out;
  }
  const Edge& te = phi.target.edge(q.edge);
  for (EdgeId e = 0; e < phi.source.num_edges(); ++e) {
    if (phi.emap[e] != q.edge) continue;
    const Edge& se = phi.source.edge(e);
    Rational s = phi.slope[e];
    Rational t = phi.vmap[se.u] == te.u ? q.offset / s : (te.length - q.offset) / s;
    out.push_back(point_on_edge(phi.source, e, t));
  }
  return out;
}

std::string describe(const GraphPoint& p) {
  if (p.is_vertex()) return "vertex " + std::to_string(p.vertex);
  return "edge " + std::to_string(p.edge) + " at " + to_string(p.offset);
}

IntegralSet any_integral_set(const MetricGraph& g, VertexId base) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) >= 3) return integral_set(g);
  return integral_set(g, GraphPoint::at_vertex(base));
}

template <class L>
BasicGluingDatum<L> hyperelliptic_impl(const std::vector<L>& gaps, const std::vector<L>& bridges) {
  int g = static_cast<int>(gaps.size());
  if (g < 1 || static_cast<int>(bridges.size()) != g - 1)
    throw Error("bad-parameters", "need g gaps and g-1 bridges");
  BasicGluingDatum<L> gd;
  gd.d = 2;
  VertexId cur = gd.tree.add_vertex();
  for (int i = 0; i < g; ++i) {
    VertexId nxt = gd.tree.add_vertex();
    gd.tree.add_edge(cur, nxt, gaps[i]);
    gd.edge_partitions.push_back(SetPartition::singletons(2));
    cur = nxt;
    if (i + 1 < g) {
      nxt = gd.tree.add_vertex();
      gd.tree.add_edge(cur, nxt, bridges[i]);
      gd.edge_partitions.push_back(SetPartition::whole(2));
      cur = nxt;
    }
  }
  gd.vertex_partitions.assign(gd.tree.num_vertices(), SetPartition::whole(2));
  return gd;
}

}  // namespace

GraphPoint Realization::image_of(const MetricGraph& input, const GraphPoint& p) const {
  if (p.is_vertex()) return GraphPoint::at_vertex(vertex_image.at(p.vertex));
  if (p.offset <= 0 || p.offset >= input.edge(p.edge).length) throw Error("bad-point", "offset outside edge");
  Rational rest = p.offset;
  for (auto [se, fwd] : edge_image.at(p.edge)) {
    const Rational& len = phi.source.edge(se).length;
    if (rest <= len) return point_on_edge(phi.source, se, fwd ? rest : Rational(len - rest));
    rest -= len;
  }
  throw Error("bad-point", "edge image shorter than the edge");
}

GluingDatum hyperelliptic_datum(const std::vector<Rational>& gaps, const std::vector<Rational>& bridges) {
  for (const auto& x : gaps)
    if (x <= 0) throw Error("bad-parameters", "gap lengths must be positive");
  for (const auto& x : bridges)
    if (x <= 0) throw Error("bad-parameters", "bridge lengths must be positive");
  return hyperelliptic_impl(gaps, bridges);
}

BasicGluingDatum<Affine> hyperelliptic_datum(const std::vector<Affine>& gaps, const std::vector<Affine>& bridges) {
  return hyperelliptic_impl(gaps, bridges);
}

GluingDatum tripod_glue(const GluingDatum& gd, const TripodSpec& spec, TripodInfo* info) {
  for (const auto& x : spec.extensions)
    if (x <= 0) throw Error("bad-parameters", "extension lengths must be positive");
  auto q = quotient(gd);
  GluingDatum out = gd;
  // Locate each point as (tree edge, offset) or a tree vertex, plus a copy.
  struct Spot {
    VertexId vertex = -1;
    EdgeId edge = -1;
    Rational offset;
    int copy = 0;
  };
  std::array<Spot, 3> spots;
  for (int i = 0; i < 3; ++i) {
    const GraphPoint& p = spec.points[i];
    if (p.is_vertex()) {
      if (p.vertex < 0 || p.vertex >= q.phi.source.num_vertices()) throw Error("bad-point", "marked point off the graph");
      auto [t, blk] = q.vertex_origin[p.vertex];
      spots[i].vertex = t;
      spots[i].copy = gd.vertex_partitions[t].blocks()[blk].front();
      continue;
    }
    if (p.edge < 0 || p.edge >= q.phi.source.num_edges() || p.offset <= 0 ||
        p.offset >= q.phi.source.edge(p.edge).length)
      throw Error("bad-point", "marked point off the graph");
    auto [f, blk] = q.edge_origin[p.edge];
    const auto block = gd.edge_partitions[f].blocks()[blk];
    Rational t = p.offset * static_cast<int>(block.size());
    const Edge& te = gd.tree.edge(f);
    spots[i].edge = f;
    spots[i].offset = q.phi.vmap[q.phi.source.edge(p.edge).u] == te.u ? t : Rational(te.length - t);
    spots[i].copy = block.front();
  }
  // Split from the far end of each edge so earlier offsets stay on the same id.
  std::map<EdgeId, std::map<Rational, std::vector<int>>> by_edge;
  for (int i = 0; i < 3; ++i)
    if (spots[i].edge >= 0) by_edge[spots[i].edge][spots[i].offset].push_back(i);
  for (auto& [e, offs] : by_edge)
    for (auto it = offs.rbegin(); it != offs.rend(); ++it) {
      VertexId x = split_datum_edge(out, e, it->first);
      for (int i : it->second) spots[i].vertex = x;
    }
  std::array<VertexId, 3> feet{};
  std::array<int, 3> copies{};
  for (int i = 0; i < 3; ++i) {
    feet[i] = spots[i].vertex;
    copies[i] = spots[i].copy;
  }
  if (info) {
    info->feet = feet;
    info->copies = copies;
    info->median = tree_median(out.tree, feet[0], feet[1], feet[2]);
    for (int i = 0; i < 3; ++i) info->distances[i] = tree_distance(out.tree, feet[i], info->median);
  }
  attach_tripod(out, feet, copies, spec.extensions);
  return out;
}

MetricGraph with_lengths(const MetricGraph& combinatorial, const Vector& lengths) {
  if (static_cast<int>(lengths.size()) != combinatorial.num_edges())
    throw Error("bad-parameters", "one length per edge expected");
  MetricGraph g(combinatorial.num_vertices());
  for (EdgeId e = 0; e < combinatorial.num_edges(); ++e)
    g.add_edge(combinatorial.edge(e).u, combinatorial.edge(e).v, lengths[e]);
  return g;
}

Realization trivalent_construct(const MetricGraph& g) {
  if (!is_connected(g) || genus(g) < 1 || !all_trivalent(g))
    throw Error("not-trivalent", "expected a connected trivalent graph of positive genus");
  Engine<Rational> engine(g, nullptr);
  return realize(engine.trivalent(engine.full()), g);
}

Cone trivalent_cone(const MetricGraph& combinatorial, std::uint64_t seed) {
  if (!is_connected(combinatorial) || genus(combinatorial) < 1 || !all_trivalent(combinatorial))
    throw Error("not-trivalent", "expected a connected trivalent graph of positive genus");
  int n = combinatorial.num_edges();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng(seed + 7919 * attempt);
    std::uniform_int_distribution<int> pick(8, 24);
    Vector start(n);
    for (auto& x : start) x = Rational(pick(rng), 8);
    MetricGraph g = with_lengths(combinatorial, start);
    Engine<Rational> probe(g, nullptr);
    probe.set_auto(&rng);
    probe.trivalent(probe.full());
    Vector ref = probe.lengths();
    Recorder rec;
    rec.dims = n;
    auto sym = symbolic(combinatorial, ref);
    Engine<Affine> engine(sym, &rec);
    engine.trivalent(engine.full());
    if (!rec.zero_forms.empty()) continue;
    Cone c;
    c.dims = n;
    c.reference = ref;
    for (int e = 0; e < n; ++e) {
      Vector a(n, 0);
      a[e] = 1;
      c.inequalities.push_back({a, 0, true});
    }
    for (auto& q : rec.strict) c.inequalities.push_back(q);
    return c;
  }
  throw Error("degenerate-cone", "no generic reference point found");
}

bool Cone::contains(const Vector& x) const {
  for (const auto& q : inequalities) {
    Rational s = 0;
    for (int i = 0; i < dims; ++i) s += q.a[i] * x[i];
    if (q.strict ? !(s > q.b) : !(s >= q.b)) return false;
  }
  for (const auto& a : equalities) {
    Rational s = 0;
    for (int i = 0; i < dims; ++i) s += a[i] * x[i];
    if (s != 0) return false;
  }
  return true;
}

int Cone::dimension() const {
  if (!contains(reference)) return -1;
  return dims - matrix_rank(equalities);
}

std::vector<Vector> Cone::integral_samples(int count, std::uint64_t seed) const {
  BigInt den = 1;
  for (const auto& x : reference) den = boost::multiprecision::lcm(den, denominator(x));
  Vector base(dims);
  for (int i = 0; i < dims; ++i) base[i] = reference[i] * Rational(den);
  std::mt19937_64 rng(seed);
  std::set<Vector> seen;
  std::vector<Vector> out;
  for (int tries = 0; tries < 200000 && static_cast<int>(out.size()) < count; ++tries) {
    int lambda = 1 + static_cast<int>(rng() % 4);
    Vector x(dims);
    for (int i = 0; i < dims; ++i) x[i] = base[i] * lambda + Rational(static_cast<long long>(rng() % (2 * lambda + 1)));
    if (!contains(x) || !seen.insert(x).second) continue;
    out.push_back(x);
  }
  for (int lambda = 1; static_cast<int>(out.size()) < count; ++lambda) {
    Vector x(dims);
    for (int i = 0; i < dims; ++i) x[i] = base[i] * lambda;
    if (seen.insert(x).second) out.push_back(x);
  }
  return out;
}

V0Check check_v0(const TropicalMorphism& phi, const GraphPoint& p) {
  auto [psi, vp] = subdivide_source(phi, p);
  auto cr = core_retraction(psi.source);
  const MetricGraph& core = cr.core.graph;
  IntegralSet s = any_integral_set(core, cr.core.new_of_old[cr.attach[vp]]);
  VertexId w = psi.vmap[vp];
  for (VertexId v = 0; v < psi.source.num_vertices(); ++v) {
    if (psi.vmap[v] != w || cr.attach[v] != v) continue;
    if (!contains_point(s, GraphPoint::at_vertex(cr.core.new_of_old[v])))
      return {false, "fiber point " + std::to_string(v) + " lies on the graph outside its integral set"};
  }
  return {true, ""};
}

IntegralCertificate integral_certificate(const TropicalMorphism& phi) {
  auto cr = core_retraction(phi.source);
  const MetricGraph& core = cr.core.graph;
  IntegralSet s = any_integral_set(core, 0);
  int rejected = 0;
  for (const GraphPoint& c : s.points) {
    GraphPoint p = c.is_vertex() ? GraphPoint::at_vertex(cr.core.old_of_new[c.vertex])
                                 : GraphPoint::on_edge(cr.core.old_edge_of_new[c.edge], c.offset);
    if (!check_v0(phi, p).ok) {
      ++rejected;
      continue;
    }
    auto [psi, vp] = subdivide_source(phi, p);
    auto cert = check_harmonic(psi);
    auto cr2 = core_retraction(psi.source);
    IntegralCertificate out;
    out.core = cr2.core.graph;
    out.set = any_integral_set(out.core, cr2.core.new_of_old[cr2.attach[vp]]);
    out.v0 = GraphPoint::at_vertex(cr2.core.new_of_old[vp]);
    out.divisor.chips.assign(out.core.num_vertices(), 0);
    for (VertexId v = 0; v < psi.source.num_vertices(); ++v)
      if (psi.vmap[v] == psi.vmap[vp]) out.divisor.chips[cr2.core.new_of_old[cr2.attach[v]]] += cert.m[v];
    out.unit = unit_subdivide(out.core, out.set);
    out.unit_divisor.chips.assign(out.unit.graph.n, 0);
    bool supported = true;
    for (VertexId v = 0; v < out.core.num_vertices(); ++v) {
      if (out.divisor.chips[v] == 0) continue;
      int o = out.unit.of_metric_vertex[v];
      if (o < 0) {
        supported = false;
        break;
      }
      out.unit_divisor.chips[o] += out.divisor.chips[v];
    }
    if (!supported) {
      ++rejected;
      continue;
    }
    out.rank_at_least_one = rank_at_least_one(out.unit.graph, out.unit_divisor);
    out.rejected = rejected;
    return out;
  }
  throw Error("no-v0", "no integral point has its fiber inside the integral set");
}

CactusResult cactus_construct(const MetricGraph& g, std::optional<GraphPoint> v1) {
  int gen = genus(g);
  if (gen % 2 == 1 && !v1) throw Error("missing-point", "odd genus needs a marked point");
  MetricGraph input = g;
  VertexId vv = -1;
  if (v1) std::tie(input, vv) = subdivide_at(g, *v1);
  Engine<Rational> engine(input, nullptr);
  bool integral = true;
  for (const auto& e : input.edges()) integral = integral && denominator(e.length) == 1;
  // With integral lengths, keep looking for a decomposition whose result
  // passes the integrality conditions; otherwise the first one will do.
  auto all = engine.cactus_variants(engine.full(), gen % 2 == 1 ? vv : -1, integral ? 256 : 1);
  if (all.empty()) throw Error("cactus-parity", "no decomposition puts the marked point on an odd-genus side");
  CactusResult first;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CactusResult r;
    r.realization = realize(all[i], input);
    r.input = input;
    if (vv >= 0) r.v1 = r.realization.vertex_image[vv];
    if (!integral || check_cactus_integrality(r)) return r;
    if (i == 0) first = std::move(r);
  }
  return first;
}

LocalShape local_shape(const TropicalMorphism& phi, VertexId v) {
  auto cert = check_harmonic(phi);
  return {cert.m[v], phi.source.valency(v), phi.target.valency(phi.vmap[v])};
}

bool check_cactus_integrality(const CactusResult& r, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const TropicalMorphism& phi = r.realization.phi;
  try {
    VertexId base = r.v1 >= 0 ? r.v1 : 0;
    IntegralSet sp = any_integral_set(phi.source, base);
    VertexId in_base = 0;
    if (r.v1 >= 0)
      for (VertexId v = 0; v < r.input.num_vertices(); ++v)
        if (r.realization.vertex_image[v] == r.v1) in_base = v;
    IntegralSet s = any_integral_set(r.input, in_base);
    for (const auto& p : s.points)
      if (!contains_point(sp, r.realization.image_of(r.input, p)))
        return fail("integral set of the graph is not contained in that of the modification");
    std::vector<GraphPoint> images;
    for (const auto& p : sp.points) {
      GraphPoint q = target_image(phi, p);
      if (std::find(images.begin(), images.end(), q) == images.end()) images.push_back(q);
    }
    bool branch = false;
    for (VertexId w = 0; w < phi.target.num_vertices(); ++w) branch = branch || phi.target.valency(w) >= 3;
    IntegralSet u = branch ? integral_set(phi.target) : integral_set(phi.target, images.front());
    for (const auto& q : images) {
      if (!contains_point(u, q)) return fail("image of the integral set leaves the integral set of the tree");
      for (const auto& x : fiber_points(phi, q))
        if (!contains_point(sp, x))
          return fail("fiber over " + describe(q) + " meets " + describe(x) + " outside the integral set");
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return true;
}

LowerBoundFamily lower_bound_family(int g, int d) {
  if (g < 2 || d < 2) throw Error("family-range", "need g >= 2 and d >= 2");
  // Parameters are numbered as they are introduced; max_params bounds the
  // gradient length.
  const int max_params = 2 * g + 6 * g;
  struct State {
    BasicGluingDatum<Affine> gd;
    int params = 0;
  };
  auto var = [&](State& s, Rational at) { return Affine::variable(s.params++, max_params, std::move(at)); };
  auto hyper = [&](int genus) {
    State s;
    std::vector<Affine> gaps, bridges;
    for (int i = 0; i < genus; ++i) gaps.push_back(var(s, Rational(3 + i, 2 + (i % 3))));
    for (int i = 0; i + 1 < genus; ++i) bridges.push_back(var(s, Rational(5 + 2 * i, 3 + (i % 2))));
    s.gd = hyperelliptic_datum(gaps, bridges);
    return s;
  };
  auto rank_of = [&](const BasicGluingDatum<Affine>& gd, MetricGraph* out) {
    auto q = quotient_unchecked(gd);
    auto pruned = prune_dangling(q.phi.source);
    Matrix rows;
    for (const auto& e : pruned.edges()) {
      Vector row(max_params, 0);
      for (std::size_t i = 0; i < e.length.grad.size(); ++i) row[i] = e.length.grad[i];
      rows.push_back(std::move(row));
    }
    if (out) {
      MetricGraph m(pruned.num_vertices());
      for (const auto& e : pruned.edges()) m.add_edge(e.u, e.v, e.length.value);
      *out = m;
    }
    return matrix_rank(rows);
  };
  // Adds a tripod at three points given as (tree edge, copy); several points
  // on one edge get increasing offsets.
  auto with_tripod = [&](const State& s) {
    std::vector<std::pair<EdgeId, int>> slots;
    for (EdgeId f = 0; f < s.gd.tree.num_edges(); ++f)
      for (const auto& blk : s.gd.edge_partitions[f].blocks()) slots.push_back({f, blk.front()});
    int n = static_cast<int>(slots.size());
    State best;
    int best_rank = -1;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c) {
          State t = s;
          std::array<int, 3> pick{a, b, c};
          std::map<EdgeId, std::vector<int>> on_edge;
          for (int i = 0; i < 3; ++i) on_edge[slots[pick[i]].first].push_back(i);
          std::array<VertexId, 3> feet{};
          std::array<int, 3> copies{};
          for (auto& [f, who] : on_edge) {
            int k = static_cast<int>(who.size());
            std::vector<Affine> offs;
            for (int j = 0; j < k; ++j)
              offs.push_back(var(t, s.gd.tree.edge(f).length.value * Rational(j + 1, k + 1)));
            // Offsets increase with j at the reference; split from the far end.
            std::vector<VertexId> xs(k);
            for (int j = k - 1; j >= 0; --j) xs[j] = split_datum_edge(t.gd, f, offs[j]);
            for (int j = 0; j < k; ++j) {
              feet[who[j]] = xs[j];
              copies[who[j]] = slots[pick[who[j]]].second;
            }
          }
          std::array<Affine, 3> ext;
          for (int i = 0; i < 3; ++i) ext[i] = var(t, Rational(1 + i, 2));
          attach_tripod(t.gd, feet, copies, ext);
          int r = rank_of(t.gd, nullptr);
          if (r > best_rank) {
            best_rank = r;
            best = std::move(t);
          }
        }
    return best;
  };
  std::function<State(int, int)> build = [&](int gg, int dd) -> State {
    if (dd == 2 || gg == 2) return hyper(gg);
    if (gg == 3) return with_tripod(hyper(1));
    return with_tripod(build(gg - 2, dd - 1));
  };
  State s = build(g, d);
  LowerBoundFamily fam;
  fam.g = g;
  fam.d = d;
  fam.parameters = s.params;
  fam.dimension = rank_of(s.gd, &fam.graph);
  fam.datum = std::move(s.gd);
  return fam;
}

}  // namespace gonality
