#include "gonality/divisor.hpp"

#include "gonality/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace gonality {

std::vector<std::vector<int>> OrdinaryGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

int OrdinaryGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a != b) d += (a == v) + (b == v);
  return d;
}

UnitSubdivision unit_subdivide(const MetricGraph& g, const IntegralSet& s) {
  std::string why;
  if (!is_integral_set(g, s.points, &why)) throw Error("not-integral-set", why);
  auto [h, ids] = subdivide_at_all(g, s.points);
  std::vector<int> ord(h.num_vertices(), -1);
  UnitSubdivision out;
  out.graph.n = static_cast<int>(s.points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ord[ids[i]] = static_cast<int>(i);
  out.of_metric_vertex.assign(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.of_metric_vertex[v] = ord[v];
  std::vector<char> used(h.num_edges(), 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (ord[v] < 0) continue;
    for (HalfEdge start : h.half_edges(v)) {
      if (used[start.edge]) continue;
      HalfEdge cur = start;
      Rational len = 0;
      VertexId w;
      while (true) {
        used[cur.edge] = 1;
        len += h.edge(cur.edge).length;
        w = h.far_end(cur);
        if (ord[w] >= 0 || h.valency(w) != 2) break;
        const auto& hs = h.half_edges(w);
        HalfEdge back{cur.edge, 1 - cur.end};
        cur = hs[0] == back ? hs[1] : hs[0];
      }
      if (ord[w] < 0) continue;  // dangling piece shorter than 1
      if (len != 1) throw Error("not-integral-set", "interval of length " + to_string(len));
      out.graph.edges.emplace_back(ord[v], ord[w]);
    }
  }
  return out;
}

Divisor fire(const OrdinaryGraph& g, const Divisor& d, const std::vector<long long>& script) {
  Divisor out = d;
  for (auto [a, b] : g.edges) {
    if (a == b) continue;
    long long flow = script[a] - script[b];
    out.chips[a] -= flow;
    out.chips[b] += flow;
  }
  return out;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("overflow", "chip count overflow");
  return r;
}

// Fires the set (mask) k times, updating chips and script.
void fire_set(const std::vector<std::vector<int>>& adj, std::vector<long long>& chips, std::vector<long long>& script,
              const std::vector<char>& in_set, long long k) {
  int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if (!in_set[v]) continue;
    script[v] += k;
    for (int u : adj[v])
      if (!in_set[u]) {
        chips[v] -= k;
        chips[u] += k;
      }
  }
}

// Makes the divisor effective away from q by firing balls around q, from the
// outermost layer inwards.
void make_effective_off_q(const std::vector<std::vector<int>>& adj, std::vector<long long>& chips,
                          std::vector<long long>& script, int q) {
  int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, -1);
  std::queue<int> bfs;
  dist[q] = 0;
  bfs.push(q);
  int maxd = 0;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    maxd = std::max(maxd, dist[v]);
    for (int u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        bfs.push(u);
      }
  }
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0) throw Error("disconnected", "chip-firing on a disconnected graph");
  for (int layer = maxd; layer >= 1; --layer) {
    long long k = 0;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != layer || chips[v] >= 0) continue;
      long long in = 0;
      for (int u : adj[v]) in += dist[u] == layer - 1;
      k = std::max(k, (-chips[v] + in - 1) / in);
    }
    if (k == 0) continue;
    checked_mul(k, static_cast<long long>(n) * n);
    std::vector<char> ball(n);
    for (int v = 0; v < n; ++v) ball[v] = dist[v] <= layer - 1;
    fire_set(adj, chips, script, ball, k);
  }
}

}  // namespace

bool is_q_reduced(const OrdinaryGraph& g, const Divisor& d, int q) {
  auto adj = g.adjacency();
  int n = g.n;
  for (int v = 0; v < n; ++v)
    if (v != q && d.chips[v] < 0) return false;
  std::vector<char> burnt(n, 0);
  std::vector<long long> heat(n, 0);
  std::queue<int> fire_front;
  burnt[q] = 1;
  fire_front.push(q);
  int count = 1;
  while (!fire_front.empty()) {
    int v = fire_front.front();
    fire_front.pop();
    for (int u : adj[v]) {
      if (burnt[u]) continue;
      if (++heat[u] > d.chips[u]) {
        burnt[u] = 1;
        ++count;
        fire_front.push(u);
      }
    }
  }
  return count == n;
}

ReducedDivisor dhar_reduce(const OrdinaryGraph& g, const Divisor& d, int q) {
  if (static_cast<int>(d.chips.size()) != g.n) throw Error("malformed", "divisor size does not match graph");
  if (q < 0 || q >= g.n) throw Error("malformed", "base vertex out of range");
  auto adj = g.adjacency();
  int n = g.n;
  ReducedDivisor out;
  out.q = q;
  out.script.assign(n, 0);
  std::vector<long long> chips = d.chips;
  make_effective_off_q(adj, chips, out.script, q);
  while (true) {
    // Burn from q in vertex-id order; a vertex burns once the fire reaching it
    // outnumbers its chips.
    std::vector<char> burnt(n, 0);
    std::vector<long long> heat(n, 0);
    std::queue<int> front;
    burnt[q] = 1;
    front.push(q);
    int count = 1;
    while (!front.empty()) {
      int v = front.front();
      front.pop();
      for (int u : adj[v]) {
        if (burnt[u]) continue;
        if (++heat[u] > chips[u]) {
          burnt[u] = 1;
          ++count;
          front.push(u);
        }
      }
    }
    if (count == n) break;
    std::vector<char> unburnt(n);
    long long k = std::numeric_limits<long long>::max();
    for (int v = 0; v < n; ++v) {
      unburnt[v] = !burnt[v];
      if (!unburnt[v]) continue;
      long long outflow = 0;
      for (int u : adj[v]) outflow += burnt[u];
      if (outflow > 0) k = std::min(k, chips[v] / outflow);
    }
    if (k <= 0) k = 1;
    fire_set(adj, chips, out.script, unburnt, k);
  }
  // Normalize the script so q never fires.
  long long base = out.script[q];
  for (auto& x : out.script) x -= base;
  out.divisor.chips = std::move(chips);
  return out;
}

bool rank_at_least_one(const OrdinaryGraph& g, const Divisor& d) {
  if (!d.is_effective()) throw Error("not-effective", "rank test needs an effective divisor");
  for (int q = 0; q < g.n; ++q)
    if (dhar_reduce(g, d, q).divisor.chips[q] < 1) return false;
  return true;
}

}  // namespace gonality
