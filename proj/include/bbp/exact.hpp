#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bbp/enumeration.hpp"
#include "bbp/gadgets.hpp"
#include "bbp/graph.hpp"
#include "bbp/rational.hpp"

namespace bbp {

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// Exact values of the biindependent-pair parameters of a bipartite graph,
// with one optimal witness pair per parameter.
struct ExactReport {
  int alpha = 0;
  int alpha_bal = 0;
  long long g = 0;
  long long g_bal = 0;
  Rational h;
  Rational h_bal;
  BiindependentPair w_alpha, w_alpha_bal, w_g, w_h, w_g_bal, w_h_bal;
  long long maximal_sets = 0;
};

// alpha(G) for bipartite G via Koenig's theorem: |V| minus the size of a
// maximum matching.
inline int alpha_bipartite(const BipartiteGraph& g) {
  return g.n1() + g.n2() - max_matching(g);
}

// Exact parameters by enumerating maximal independent sets of the flattened
// graph.  Every parameter is monotone in |A| and |B|, so optima occur at
// maximal sets (trimmed to equal sizes for the balanced variants).
// Witness ties break to the lexicographically smallest (A, B).
inline ExactReport exact_bipartite_parameters(const BipartiteGraph& g,
                                              long long budget = kDefaultEnumerationBudget) {
  ExactReport rep;
  int n1 = g.n1();
  Graph flat = g.flatten();

  bool first = true;
  auto lex_less = [](const BiindependentPair& p, const BiindependentPair& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.b < q.b;
  };
  auto consider = [&](auto& value, auto candidate, BiindependentPair& witness,
                      const BiindependentPair& pair) {
    if (first || candidate > value || (candidate == value && lex_less(pair, witness))) {
      value = candidate;
      witness = pair;
    }
  };

  rep.maximal_sets = for_each_maximal_independent_set(flat, budget, [&](const std::vector<int>& set) {
    BiindependentPair pair;
    for (int v : set) {
      if (v < n1)
        pair.a.push_back(v);
      else
        pair.b.push_back(v - n1);
    }
    std::sort(pair.a.begin(), pair.a.end());
    std::sort(pair.b.begin(), pair.b.end());
    long long a = static_cast<long long>(pair.a.size());
    long long b = static_cast<long long>(pair.b.size());
    long long k = std::min(a, b);
    BiindependentPair trimmed{{pair.a.begin(), pair.a.begin() + k},
                              {pair.b.begin(), pair.b.begin() + k}};

    consider(rep.alpha, static_cast<int>(a + b), rep.w_alpha, pair);
    consider(rep.g, a * b, rep.w_g, pair);
    consider(rep.h, a + b > 0 ? Rational(a * b, a + b) : Rational(0), rep.w_h, pair);
    consider(rep.alpha_bal, static_cast<int>(2 * k), rep.w_alpha_bal, trimmed);
    consider(rep.g_bal, k * k, rep.w_g_bal, trimmed);
    consider(rep.h_bal, Rational(k, 2), rep.w_h_bal, trimmed);
    first = false;
  });

  if (rep.alpha != alpha_bipartite(g))
    throw std::logic_error("exact_bipartite_parameters: enumeration disagrees with Koenig alpha");
  for (const auto* w : {&rep.w_alpha, &rep.w_alpha_bal, &rep.w_g, &rep.w_h, &rep.w_g_bal, &rep.w_h_bal})
    if (!w->is_valid(g)) throw std::logic_error("exact_bipartite_parameters: invalid witness");
  return rep;
}

// Parameters of a general graph through its doubles:
//   g_bi(G) = g(B0(G)),  h_bi(G) = h(B0(G)),
//   g_bc(G) = g(B0(complement(G))),  h_bc likewise.
// B0(complement(G)) is also the bipartite complement of B(G); both
// construction routes are built and must coincide.
struct GeneralDoubleReport {
  long long g_bi = 0;
  Rational h_bi;
  long long g_bc = 0;
  Rational h_bc;
};

inline GeneralDoubleReport exact_general_parameters(const Graph& g,
                                                    long long budget = kDefaultEnumerationBudget) {
  BipartiteGraph via_complement = extended_bipartite_double(complement(g));
  BipartiteGraph via_double = bipartite_complement(bipartite_double(g));
  if (!(via_complement == via_double))
    throw std::logic_error("exact_general_parameters: double/complement routes disagree");

  ExactReport bi = exact_bipartite_parameters(extended_bipartite_double(g), budget);
  ExactReport bc = exact_bipartite_parameters(via_complement, budget);
  return GeneralDoubleReport{bi.g, bi.h, bc.g, bc.h};
}

// Exact consistency of the parameter chain
//   alpha_bal/4 = sqrt(g_bal)/2 = h_bal <= h <= sqrt(g)/2 <= alpha/4
// plus the three-way equivalence of the equality cases, all in integer or
// rational arithmetic.
inline bool verify_relation_chain(const ExactReport& r) {
  long long half = r.alpha_bal / 2;
  if (2 * half != r.alpha_bal) return false;
  if (r.g_bal != half * half) return false;
  if (r.h_bal != Rational(r.alpha_bal, 4)) return false;
  if (r.h_bal > r.h) return false;
  if (Rational(4) * r.h * r.h > Rational(r.g)) return false;  // h <= sqrt(g)/2
  long long a = r.alpha;
  if (4 * r.g > a * a) return false;  // sqrt(g)/2 <= alpha/4
  if (r.alpha_bal > r.alpha) return false;

  bool eq_h = r.h == Rational(r.alpha, 4);
  bool eq_g = 4 * r.g == a * a;
  bool eq_bal = r.alpha == r.alpha_bal;
  return eq_h == eq_g && eq_g == eq_bal;
}

// ---------------------------------------------------------------------------
// Gadget verification.

struct GadgetCheck {
  int omega = 0;
  bool omega_at_least_half = false;  // omega(G) >= |V(G)|/2
  int alpha = 0;                     // alpha(H_G)
  int alpha_bal = 0;                 // alpha_bal(H_G)
  bool alpha_equal = false;          // alpha(H_G) == alpha_bal(H_G)
  bool hypothesis = false;           // |V| even and |E| = |V|(|V|-2)/4
  bool equivalence_holds = false;    // hypothesis => (omega test <=> alpha test)
};

// Evaluates both sides of the gadget equivalence: omega(G) >= |V|/2 iff
// alpha(H_G) = alpha_bal(H_G), which is guaranteed whenever |V| is even and
// |E| = |V|(|V|-2)/4.
inline GadgetCheck verify_gadget_equivalence(const Graph& g,
                                             long long budget = kDefaultEnumerationBudget) {
  GadgetCheck out;
  out.omega = omega(g);
  out.omega_at_least_half = 2 * out.omega >= g.n();
  BipartiteGraph h = hardness_gadget(g);
  ExactReport rep = exact_bipartite_parameters(h, budget);
  out.alpha = rep.alpha;
  out.alpha_bal = rep.alpha_bal;
  out.alpha_equal = out.alpha == out.alpha_bal;
  long long n = g.n();
  out.hypothesis = n % 2 == 0 && 4 * static_cast<long long>(g.m()) == n * (n - 2);
  out.equivalence_holds = !out.hypothesis || (out.omega_at_least_half == out.alpha_equal);
  return out;
}

// ---------------------------------------------------------------------------
// Hypercube witnesses.

// a(0) = 0, a(r) = 2^r - C(r, r/2) for even r, a(r) = 2 a(r-1) for odd r.
inline long long a_sequence(int r) {
  if (r < 0 || r > 60) throw std::invalid_argument("a_sequence: r must be in 0..60");
  if (r == 0) return 0;
  if (r % 2 == 1) return 2 * a_sequence(r - 1);
  long long binom = 1;
  for (int i = 1; i <= r / 2; ++i) binom = binom * (r / 2 + i) / i;
  return (1LL << r) - binom;
}

// Hypercube Q_r as a general graph on bitmask vertices 0..2^r-1.
inline Graph hypercube_graph(int r) {
  if (r < 1 || r > 24) throw std::invalid_argument("hypercube_graph: r must be in 1..24");
  std::vector<Edge> e;
  for (int x = 0; x < (1 << r); ++x)
    for (int b = 0; b < r; ++b)
      if (x < (x ^ (1 << b))) e.emplace_back(x, x ^ (1 << b));
  return Graph(1 << r, std::move(e));
}

struct HypercubeWitnesses {
  int r = 0;
  // Sets L, U of bitmask vertices with no Q_r edge between them; |L| = |U| =
  // a(r)/2.  As a pair (L, U') they are biindependent in B0(hypercube_graph(r))
  // and witness h_bi(Q_r) >= a(r)/4.
  BiindependentPair double_pair;
  // Balanced pair in hypercube(r+1) (parity-part coordinates), obtained by
  // appending a parity bit to L and a flipped parity bit to U; witnesses
  // alpha_bal(Q_{r+1}) >= a(r).
  BiindependentPair balanced_pair;
};

namespace detail {

// L_r / U_r: for even r the Hamming balls |x| <= r/2 - 1 and |x| >= r/2 + 1;
// for odd r the even-case sets of r-1 extended by a free top bit.
inline void hypercube_levels(int r, std::vector<int>& low, std::vector<int>& up) {
  low.clear();
  up.clear();
  if (r <= 0) return;
  if (r % 2 == 0) {
    for (int x = 0; x < (1 << r); ++x) {
      int w = __builtin_popcount(static_cast<unsigned>(x));
      if (w <= r / 2 - 1) low.push_back(x);
      if (w >= r / 2 + 1) up.push_back(x);
    }
  } else {
    std::vector<int> l0, u0;
    hypercube_levels(r - 1, l0, u0);
    for (int b = 0; b < 2; ++b) {
      for (int x : l0) low.push_back(x | (b << (r - 1)));
      for (int x : u0) up.push_back(x | (b << (r - 1)));
    }
    std::sort(low.begin(), low.end());
    std::sort(up.begin(), up.end());
  }
}

}  // namespace detail

inline HypercubeWitnesses hypercube_witnesses(int r) {
  if (r < 1 || r > 20) throw std::invalid_argument("hypercube_witnesses: r must be in 1..20");
  HypercubeWitnesses out;
  out.r = r;
  std::vector<int> low, up;
  detail::hypercube_levels(r, low, up);
  out.double_pair = BiindependentPair{low, up};

  // Parity augmentation into Q_{r+1}: low lands in the even part, up in the
  // odd part; translate bitmasks to the part-local numbering of hypercube().
  std::vector<int> even = hypercube_part_masks(r + 1, true);
  std::vector<int> odd = hypercube_part_masks(r + 1, false);
  auto index_in = [](const std::vector<int>& sorted, int mask) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), mask) - sorted.begin());
  };
  for (int x : low) {
    int w = __builtin_popcount(static_cast<unsigned>(x));
    out.balanced_pair.a.push_back(index_in(even, x | ((w % 2) << r)));
  }
  for (int x : up) {
    int w = __builtin_popcount(static_cast<unsigned>(x));
    out.balanced_pair.b.push_back(index_in(odd, x | (((w + 1) % 2) << r)));
  }
  std::sort(out.balanced_pair.a.begin(), out.balanced_pair.a.end());
  std::sort(out.balanced_pair.b.begin(), out.balanced_pair.b.end());
  return out;
}

}  // namespace bbp
