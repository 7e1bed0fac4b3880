#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbp {

using Edge = std::pair<int, int>;

namespace detail {

inline std::vector<Edge> canonical_edges(int n, std::vector<Edge> edges, const char* what) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument(std::string(what) + ": vertex out of range");
    if (u == v) throw std::invalid_argument(std::string(what) + ": self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument(std::string(what) + ": duplicate edge");
  return edges;
}

inline std::vector<Edge> canonical_biedges(int n1, int n2, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n1 || v < 0 || v >= n2)
      throw std::invalid_argument("BipartiteGraph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("BipartiteGraph: duplicate edge");
  return edges;
}

inline std::vector<std::vector<std::uint64_t>> adjacency_rows(int n, int cols,
                                                              const std::vector<Edge>& edges,
                                                              bool symmetric) {
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>((cols + 63) / 64, 0));
  for (const auto& [u, v] : edges) {
    rows[u][v >> 6] |= std::uint64_t(1) << (v & 63);
    if (symmetric) rows[v][u >> 6] |= std::uint64_t(1) << (u & 63);
  }
  return rows;
}

inline void fnv_mix(std::uint64_t& h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

}  // namespace detail

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// the edge list is kept sorted with u < v per edge.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    edges_ = detail::canonical_edges(n, std::move(edges), "Graph");
    adj_ = detail::adjacency_rows(n_, n_, edges_, true);
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return (adj_[u][v >> 6] >> (v & 63)) & 1;
  }
  const std::vector<std::uint64_t>& adj_row(int v) const { return adj_[v]; }

  std::vector<int> degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& [u, v] : edges_) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  bool is_regular() const {
    auto d = degrees();
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
  }

  // Degree of a regular graph; throws if not regular.
  int regularity() const {
    if (n_ == 0 || !is_regular()) throw std::invalid_argument("Graph: not regular");
    return degrees()[0];
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (u != v && adjacent(u, v)) out.push_back(u);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    detail::fnv_mix(h, 0x67);  // tag general graph
    detail::fnv_mix(h, static_cast<std::uint64_t>(n_));
    for (const auto& [u, v] : edges_) detail::fnv_mix(h, (std::uint64_t(u) << 32) | std::uint64_t(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// Bipartite graph with parts V1 = 0..n1-1 and V2 = 0..n2-1; every edge (i, j)
// has i in V1 and j in V2.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n1, int n2, std::vector<Edge> edges) : n1_(n1), n2_(n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("BipartiteGraph: negative part size");
    edges_ = detail::canonical_biedges(n1, n2, std::move(edges));
    adj_ = detail::adjacency_rows(n1_, n2_, edges_, false);
  }

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int i, int j) const {
    return (adj_[i][j >> 6] >> (j & 63)) & 1;
  }
  // Right-neighborhood of left vertex i, as a bitset over V2.
  const std::vector<std::uint64_t>& right_row(int i) const { return adj_[i]; }

  std::vector<int> left_degrees() const {
    std::vector<int> d(n1_, 0);
    for (const auto& [i, j] : edges_) ++d[i];
    return d;
  }
  std::vector<int> right_degrees() const {
    std::vector<int> d(n2_, 0);
    for (const auto& [i, j] : edges_) ++d[j];
    return d;
  }

  // True when every vertex on both sides has the same degree.
  bool is_regular() const {
    auto l = left_degrees();
    auto r = right_degrees();
    int d0 = n1_ > 0 ? l[0] : (n2_ > 0 ? r[0] : 0);
    return std::all_of(l.begin(), l.end(), [&](int x) { return x == d0; }) &&
           std::all_of(r.begin(), r.end(), [&](int x) { return x == d0; });
  }

  int regularity() const {
    if ((n1_ == 0 && n2_ == 0) || !is_regular())
      throw std::invalid_argument("BipartiteGraph: not regular");
    return n1_ > 0 ? left_degrees()[0] : 0;
  }

  bool is_complete_bipartite() const { return m() == n1_ * n2_; }

  // Flatten to a general graph: V1 keeps its indices, V2 is offset by n1.
  Graph flatten() const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [i, j] : edges_) e.emplace_back(i, n1_ + j);
    return Graph(n1_ + n2_, std::move(e));
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.edges_ == b.edges_;
  }

  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    detail::fnv_mix(h, 0x62);  // tag bipartite graph
    detail::fnv_mix(h, static_cast<std::uint64_t>(n1_));
    detail::fnv_mix(h, static_cast<std::uint64_t>(n2_));
    for (const auto& [u, v] : edges_) detail::fnv_mix(h, (std::uint64_t(u) << 32) | std::uint64_t(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  int n1_ = 0;
  int n2_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// A pair (A, B) with A in V1, B in V2 and no edge between A and B.
struct BiindependentPair {
  std::vector<int> a;
  std::vector<int> b;

  long long sum() const { return static_cast<long long>(a.size()) + static_cast<long long>(b.size()); }
  long long product() const { return static_cast<long long>(a.size()) * static_cast<long long>(b.size()); }

  bool is_valid(const BipartiteGraph& g) const {
    auto ok = [](const std::vector<int>& s, int n) {
      for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= n) return false;
        if (k > 0 && s[k] <= s[k - 1]) return false;  // sorted, no repeats
      }
      return true;
    };
    if (!ok(a, g.n1()) || !ok(b, g.n2())) return false;
    for (int i : a)
      for (int j : b)
        if (g.adjacent(i, j)) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Doubling constructions.

// Bipartite double B(G): two copies of V(G); left i ~ right j iff {i,j} is an
// edge of G.  The biadjacency matrix equals the adjacency matrix of G.
inline BipartiteGraph bipartite_double(const Graph& g) {
  std::vector<Edge> e;
  e.reserve(2 * g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(v, u);
  }
  return BipartiteGraph(g.n(), g.n(), std::move(e));
}

// Extended bipartite double B0(G): B(G) plus the perfect matching i ~ i'.
// The biadjacency matrix equals A_G + I.
inline BipartiteGraph extended_bipartite_double(const Graph& g) {
  std::vector<Edge> e;
  e.reserve(2 * g.edges().size() + g.n());
  for (const auto& [u, v] : g.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(v, u);
  }
  for (int i = 0; i < g.n(); ++i) e.emplace_back(i, i);
  return BipartiteGraph(g.n(), g.n(), std::move(e));
}

// Complement within the complete bipartite graph K_{n1,n2}.
inline BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.n1(); ++i)
    for (int j = 0; j < g.n2(); ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return BipartiteGraph(g.n1(), g.n2(), std::move(e));
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.n(), std::move(e));
}

// ---------------------------------------------------------------------------
// Clique-number preserving operations.

// Disjoint union; vertices of h are offset by g.n().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (const auto& [u, v] : h.edges()) e.emplace_back(g.n() + u, g.n() + v);
  return Graph(g.n() + h.n(), std::move(e));
}

// Join: disjoint union plus all edges between the two vertex sets, so that
// omega(g join h) = omega(g) + omega(h).
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (const auto& [u, v] : h.edges()) e.emplace_back(g.n() + u, g.n() + v);
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) e.emplace_back(u, g.n() + v);
  return Graph(g.n() + h.n(), std::move(e));
}

// k-th expansion: each vertex v becomes a clique X_v = {v*k, ..., v*k + k-1};
// X_u and X_v are completely joined iff {u,v} is an edge.  Multiplies the
// clique number by k.
inline Graph expansion(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("expansion: k must be >= 1");
  std::vector<Edge> e;
  for (int v = 0; v < g.n(); ++v)
    for (int c = 0; c < k; ++c)
      for (int d = c + 1; d < k; ++d) e.emplace_back(v * k + c, v * k + d);
  for (const auto& [u, v] : g.edges())
    for (int c = 0; c < k; ++c)
      for (int d = 0; d < k; ++d) e.emplace_back(u * k + c, v * k + d);
  return Graph(g.n() * k, std::move(e));
}

// ---------------------------------------------------------------------------
// Families.

inline BipartiteGraph perfect_matching(int n) {
  if (n < 1) throw std::invalid_argument("perfect_matching: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, i);
  return BipartiteGraph(n, n, std::move(e));
}

// Crown graph: K_{n,n} minus a perfect matching.
inline BipartiteGraph crown(int n) {
  if (n < 1) throw std::invalid_argument("crown: n must be >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, j);
  return BipartiteGraph(n, n, std::move(e));
}

inline BipartiteGraph complete_bipartite(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("complete_bipartite: negative part size");
  std::vector<Edge> e;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) e.emplace_back(i, j);
  return BipartiteGraph(n1, n2, std::move(e));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

// Bipartite view of an even cycle: part 1 holds the even cycle vertices
// 0,2,...,n-2 (index i <-> vertex 2i), part 2 the odd ones (j <-> 2j+1).
inline BipartiteGraph cycle_bipartite(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("cycle_bipartite: n must be even, >= 4");
  int h = n / 2;
  std::vector<Edge> e;
  for (int i = 0; i < h; ++i) {
    e.emplace_back(i, i);                // 2i ~ 2i+1
    e.emplace_back(i, (i + h - 1) % h);  // 2i ~ 2i-1
  }
  return BipartiteGraph(h, h, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(e));
}

// Hypercube Q_r as a bipartite graph on even/odd parity classes.  Part 1
// lists the even-weight bitmasks in increasing order, part 2 the odd-weight
// ones; vertices are adjacent iff the masks differ in exactly one bit.
inline BipartiteGraph hypercube(int r) {
  if (r < 1 || r > 24) throw std::invalid_argument("hypercube: r must be in 1..24");
  int size = 1 << r;
  std::vector<int> index_of(size, -1);
  std::vector<int> even, odd;
  for (int x = 0; x < size; ++x) {
    if (__builtin_popcount(static_cast<unsigned>(x)) % 2 == 0) {
      index_of[x] = static_cast<int>(even.size());
      even.push_back(x);
    } else {
      index_of[x] = static_cast<int>(odd.size());
      odd.push_back(x);
    }
  }
  std::vector<Edge> e;
  for (int x : even)
    for (int b = 0; b < r; ++b) e.emplace_back(index_of[x], index_of[x ^ (1 << b)]);
  return BipartiteGraph(size / 2, size / 2, std::move(e));
}

// Even-parity bitmask of hypercube part-1 index i (inverse of the numbering
// used by hypercube()).
inline std::vector<int> hypercube_part_masks(int r, bool even_part) {
  int size = 1 << r;
  std::vector<int> out;
  for (int x = 0; x < size; ++x)
    if ((__builtin_popcount(static_cast<unsigned>(x)) % 2 == 0) == even_part) out.push_back(x);
  return out;
}

}  // namespace bbp
