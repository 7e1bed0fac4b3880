#pragma once

#include <stdexcept>
#include <vector>

#include "bbp/graph.hpp"

namespace bbp {

// The fixed 6-vertex, 10-edge graph with clique number 3 used as a padding
// block by the half-size reduction: a hexagon 0..5 with chords {0,3}, {1,3},
// {1,4}, {2,5}.  Both triangles live on {0,1,3} and {1,2,3}.
inline Graph f_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 3}, {1, 4}, {2, 5}});
}

// Bipartite gadget H_G encoding the clique structure of G in its maximal
// independent sets.  Both parts have size n + m(n+1) and are laid out the
// same way: first the n vertex slots (v1 resp. v2 for v in input order),
// then one (n+1)-block per edge in canonical edge order (L_e on the left,
// R_e on the right).  Edges: the matching v1 ~ v2, the complete block
// L_e x R_e per edge, and v1 ~ R_e for every edge e incident to v.
inline BipartiteGraph hardness_gadget(const Graph& g) {
  int n = g.n();
  int m = g.m();
  if (n == 0) throw std::invalid_argument("hardness_gadget: empty graph");
  int block = n + 1;
  auto block_start = [&](int e) { return n + e * block; };
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (int e = 0; e < m; ++e)
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j) edges.emplace_back(block_start(e) + i, block_start(e) + j);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    for (int j = 0; j < block; ++j) {
      edges.emplace_back(u, block_start(e) + j);
      edges.emplace_back(v, block_start(e) + j);
    }
  }
  int part = n + m * block;
  return BipartiteGraph(part, part, std::move(edges));
}

// Smallest t with t(t-1)/2 >= 9n^2 + n + m, the clique-pad size used by
// half_size_reduction on a graph with 2n vertices and m edges.
inline int half_size_pad(const Graph& g) {
  if (g.n() < 2 || g.n() % 2 != 0)
    throw std::invalid_argument("half_size_reduction: |V| must be even and positive");
  long long n = g.n() / 2;
  long long need = 9 * n * n + n + g.m();
  int t = 1;
  while (static_cast<long long>(t) * (t - 1) / 2 < need) ++t;
  return t;
}

// Pads G into a graph H with |E(H)| = |V(H)| (|V(H)| - 2) / 4 and
// omega(H) = omega(G) + 3n + t, where |V(G)| = 2n and t = half_size_pad(G):
// H = ((G join F^(n)) join K_t) + H0, with H0 a filler graph on t vertices
// carrying the lexicographically first C(t,2) - (9n^2 + n + m) edges.
inline Graph half_size_reduction(const Graph& g) {
  int t = half_size_pad(g);
  long long n = g.n() / 2;
  Graph core = join(join(g, expansion(f_graph(), static_cast<int>(n))), complete_graph(t));
  long long fill = static_cast<long long>(t) * (t - 1) / 2 - (9 * n * n + n + g.m());
  std::vector<Edge> filler;
  for (int u = 0; u < t && fill > 0; ++u)
    for (int v = u + 1; v < t && fill > 0; ++v, --fill) filler.emplace_back(u, v);
  return disjoint_union(core, Graph(t, std::move(filler)));
}

}  // namespace bbp
