#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bbp/graph.hpp"

namespace bbp {

// Thrown when an enumeration exceeds its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace bits {

using Row = std::vector<std::uint64_t>;

inline bool any(const Row& r) {
  for (auto w : r)
    if (w) return true;
  return false;
}

inline int count(const Row& r) {
  int c = 0;
  for (auto w : r) c += __builtin_popcountll(w);
  return c;
}

inline int first(const Row& r) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i]) return static_cast<int>(i * 64) + __builtin_ctzll(r[i]);
  return -1;
}

inline bool test(const Row& r, int v) { return (r[v >> 6] >> (v & 63)) & 1; }
inline void set(Row& r, int v) { r[v >> 6] |= std::uint64_t(1) << (v & 63); }
inline void reset(Row& r, int v) { r[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

inline int count_and(const Row& a, const Row& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

inline Row and_rows(const Row& a, const Row& b) {
  Row r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

inline Row andnot_rows(const Row& a, const Row& b) {
  Row r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & ~b[i];
  return r;
}

}  // namespace bits

namespace detail {

// Bron-Kerbosch with pivoting over explicit adjacency bitsets.  Visits every
// maximal clique exactly once; counts them against the budget.
class MaximalCliques {
 public:
  MaximalCliques(const std::vector<bits::Row>& adj, long long budget,
                 const std::function<void(const std::vector<int>&)>& visit)
      : adj_(adj), budget_(budget), visit_(visit) {}

  void run(int n) {
    bits::Row p(adj_.empty() ? 1 : adj_[0].size(), 0), x(p.size(), 0);
    for (int v = 0; v < n; ++v) bits::set(p, v);
    std::vector<int> r;
    expand(r, p, x);
  }

  long long found() const { return found_; }

 private:
  void expand(std::vector<int>& r, bits::Row p, bits::Row x) {
    if (!bits::any(p) && !bits::any(x)) {
      if (++found_ > budget_) throw BudgetExceeded("maximal set enumeration budget exceeded");
      visit_(r);
      return;
    }
    // Pivot on the vertex of P | X with the most candidates in P.
    int pivot = -1, best = -1;
    for (size_t i = 0; i < p.size(); ++i) {
      std::uint64_t w = p[i] | x[i];
      while (w) {
        int v = static_cast<int>(i * 64) + __builtin_ctzll(w);
        w &= w - 1;
        int c = bits::count_and(p, adj_[v]);
        if (c > best) {
          best = c;
          pivot = v;
        }
      }
    }
    bits::Row cand = bits::andnot_rows(p, adj_[pivot]);
    for (size_t i = 0; i < cand.size(); ++i) {
      std::uint64_t w = cand[i];
      while (w) {
        int v = static_cast<int>(i * 64) + __builtin_ctzll(w);
        w &= w - 1;
        r.push_back(v);
        expand(r, bits::and_rows(p, adj_[v]), bits::and_rows(x, adj_[v]));
        r.pop_back();
        bits::reset(p, v);
        bits::set(x, v);
      }
    }
  }

  const std::vector<bits::Row>& adj_;
  long long budget_;
  const std::function<void(const std::vector<int>&)>& visit_;
  long long found_ = 0;
};

}  // namespace detail

// Visits every maximal independent set of g (equivalently, every maximal
// clique of the complement).  Returns the number of sets visited; throws
// BudgetExceeded once more than `budget` sets have been produced.
inline long long for_each_maximal_independent_set(
    const Graph& g, long long budget, const std::function<void(const std::vector<int>&)>& visit) {
  int n = g.n();
  int words = (n + 63) / 64;
  std::vector<bits::Row> non_adj(n, bits::Row(std::max(words, 1), 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) bits::set(non_adj[u], v);
  }
  detail::MaximalCliques mc(non_adj, budget, visit);
  mc.run(n);
  return mc.found();
}

// Hopcroft-Karp maximum matching.
inline int max_matching(const BipartiteGraph& g) {
  int n1 = g.n1(), n2 = g.n2();
  std::vector<std::vector<int>> adj(n1);
  for (const auto& [i, j] : g.edges()) adj[i].push_back(j);
  std::vector<int> match_l(n1, -1), match_r(n2, -1), dist(n1);
  const int inf = 1 << 29;

  auto bfs = [&]() {
    std::queue<int> q;
    for (int i = 0; i < n1; ++i) {
      dist[i] = match_l[i] == -1 ? 0 : inf;
      if (dist[i] == 0) q.push(i);
    }
    bool found = false;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j : adj[i]) {
        int i2 = match_r[j];
        if (i2 == -1) {
          found = true;
        } else if (dist[i2] == inf) {
          dist[i2] = dist[i] + 1;
          q.push(i2);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int i) {
    for (int j : adj[i]) {
      int i2 = match_r[j];
      if (i2 == -1 || (dist[i2] == dist[i] + 1 && dfs(i2))) {
        match_l[i] = j;
        match_r[j] = i;
        return true;
      }
    }
    dist[i] = inf;
    return false;
  };

  int size = 0;
  while (bfs())
    for (int i = 0; i < n1; ++i)
      if (match_l[i] == -1 && dfs(i)) ++size;
  return size;
}

// Exact clique number via branch and bound with a greedy-coloring bound
// (Tomita-style).  Handles the dense padded graphs produced by the half-size
// reduction comfortably.
inline int omega(const Graph& g) {
  int n = g.n();
  if (n == 0) return 0;
  int words = (n + 63) / 64;
  std::vector<bits::Row> adj(n, bits::Row(words, 0));
  for (const auto& [u, v] : g.edges()) {
    bits::set(adj[u], v);
    bits::set(adj[v], u);
  }
  int best = 0;
  std::vector<int> order, bound;

  std::function<void(bits::Row, int)> expand = [&](bits::Row p, int depth) {
    if (!bits::any(p)) {
      best = std::max(best, depth);
      return;
    }
    // Greedy coloring: vertices in one class are pairwise non-adjacent, so a
    // clique meets each class at most once.
    size_t base = order.size();
    bits::Row uncolored = p;
    int colors = 0;
    while (bits::any(uncolored)) {
      ++colors;
      bits::Row avail = uncolored;
      while (bits::any(avail)) {
        int v = bits::first(avail);
        bits::reset(avail, v);
        bits::reset(uncolored, v);
        avail = bits::andnot_rows(avail, adj[v]);
        order.push_back(v);
        bound.push_back(colors);
      }
    }
    for (size_t i = order.size(); i-- > base;) {
      if (depth + bound[i] <= best) break;
      int v = order[i];
      expand(bits::and_rows(p, adj[v]), depth + 1);
      bits::reset(p, v);
    }
    order.resize(base);
    bound.resize(base);
  };

  bits::Row all(words, 0);
  for (int v = 0; v < n; ++v) bits::set(all, v);
  expand(all, 0);
  return best;
}

}  // namespace bbp
