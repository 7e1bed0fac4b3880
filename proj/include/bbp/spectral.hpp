#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bbp/graph.hpp"

namespace bbp {

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

inline Eigen::MatrixXd biadjacency_matrix(const BipartiteGraph& g) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.n1(), g.n2());
  for (const auto& [i, j] : g.edges()) m(i, j) = 1.0;
  return m;
}

inline Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  auto deg = g.degrees();
  for (int v = 0; v < g.n(); ++v) l(v, v) = deg[v];
  return l;
}

struct SpectralSummary {
  bool regular = false;
  int degree = -1;                // common degree when regular
  std::vector<double> adjacency;  // descending
  std::vector<double> laplacian;  // ascending
  std::vector<double> singular;   // descending; filled for bipartite input
  double lambda2 = 0.0;           // second largest adjacency eigenvalue
};

inline SpectralSummary spectral_summary(const Graph& g) {
  SpectralSummary s;
  s.regular = g.n() > 0 && g.is_regular();
  if (s.regular) s.degree = g.degrees()[0];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> adj(adjacency_matrix(g));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lap(laplacian_matrix(g));
  for (int i = g.n() - 1; i >= 0; --i) s.adjacency.push_back(adj.eigenvalues()(i));
  for (int i = 0; i < g.n(); ++i) s.laplacian.push_back(lap.eigenvalues()(i));
  s.lambda2 = g.n() >= 2 ? s.adjacency[1] : 0.0;
  return s;
}

// For bipartite graphs the adjacency spectrum is +-(singular values of the
// biadjacency matrix) padded with |n1 - n2| zeros; building it that way keeps
// the spectrum exactly symmetric.
inline SpectralSummary spectral_summary(const BipartiteGraph& g) {
  SpectralSummary s;
  s.regular = g.n1() + g.n2() > 0 && g.is_regular();
  if (s.regular) s.degree = g.regularity();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(biadjacency_matrix(g));
  for (int i = 0; i < svd.singularValues().size(); ++i) s.singular.push_back(svd.singularValues()(i));
  std::vector<double> eig = s.singular;
  eig.resize(g.n1() + g.n2() - s.singular.size(), 0.0);
  for (auto it = s.singular.rbegin(); it != s.singular.rend(); ++it) eig.push_back(-*it);
  s.adjacency = eig;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lap(laplacian_matrix(g.flatten()));
  for (int i = 0; i < g.n1() + g.n2(); ++i) s.laplacian.push_back(lap.eigenvalues()(i));
  s.lambda2 = s.adjacency.size() >= 2 ? s.adjacency[1] : 0.0;
  return s;
}

namespace detail {

// Checks an r-regular balanced bipartite graph and returns (n, r, lambda2).
struct RegularBipartite {
  int n;
  int r;
  double lambda2;
};

inline RegularBipartite regular_balanced(const BipartiteGraph& g, const char* what) {
  if (g.n1() != g.n2()) throw std::invalid_argument(std::string(what) + ": parts must be balanced");
  if (g.n1() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
  if (!g.is_regular()) throw std::invalid_argument(std::string(what) + ": graph must be regular");
  RegularBipartite rb{g.n1(), g.regularity(), 0.0};
  if (rb.n >= 2) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(biadjacency_matrix(g));
    rb.lambda2 = svd.singularValues()(1);
  }
  return rb;
}

}  // namespace detail

struct HHatBounds {
  double value = 0.0;      // (n/2) lambda2 / (r + lambda2)
  double vallentin = 0.0;  // (n/r) lambda2, the weaker eigenvalue bound
};

// Closed-form eigenvalue bound for r-regular balanced bipartite graphs.
// Complete bipartite graphs short-circuit to 0 (lambda2 is exactly 0 there);
// the edgeless graph is pinned to the exact value n/2 in both fields.
inline HHatBounds h_hat(const BipartiteGraph& g) {
  auto rb = detail::regular_balanced(g, "h_hat");
  if (g.is_complete_bipartite()) return {0.0, 0.0};
  if (rb.r == 0) return {rb.n / 2.0, rb.n / 2.0};
  return {(rb.n / 2.0) * rb.lambda2 / (rb.r + rb.lambda2), (static_cast<double>(rb.n) / rb.r) * rb.lambda2};
}

// Closed-form bound for g: n^2 lambda2^2 / (lambda2 + r)^2 when r <= 3*lambda2,
// n^2 lambda2 / (8 (r - lambda2)) otherwise.  Edgeless input is pinned to the
// exact value n^2.
inline double g_hat(const BipartiteGraph& g) {
  auto rb = detail::regular_balanced(g, "g_hat");
  if (g.is_complete_bipartite()) return 0.0;
  if (rb.r == 0) return static_cast<double>(rb.n) * rb.n;
  double n = rb.n, r = rb.r, l = rb.lambda2;
  if (r <= 3.0 * l) return n * n * l * l / ((l + r) * (l + r));
  return n * n * l / (8.0 * (r - l));
}

// Hoffman's ratio bound on alpha for regular graphs; the edgeless graph
// (r = lambda_min = 0) returns n.
inline double hoffman_bound(const Graph& g) {
  if (g.n() == 0) return 0.0;
  int r = g.regularity();
  if (r == 0) return static_cast<double>(g.n());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
  double lmin = es.eigenvalues()(0);
  return g.n() * (-lmin) / (r - lmin);
}

// Laplacian bound (n/2)(1 - mu_2 / mu_n); edgeless input returns n/2.
inline double haemers_phi_H(const Graph& g) {
  if (g.n() == 0) return 0.0;
  if (g.m() == 0) return g.n() / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian_matrix(g));
  double mu2 = es.eigenvalues()(1);
  double mun = es.eigenvalues()(g.n() - 1);
  return (g.n() / 2.0) * (1.0 - mu2 / mun);
}

// Bound comparison on the doubles of a regular graph G:
//   phi_H(G)/2  vs  h_hat(B0(G)) = (n/2) mu / (mu + r + 1),
//     mu = max(lambda2 + 1, -lambda_min - 1),
// with equality exactly when lambda2 = r or lambda2 + lambda_min + 2 = 0,
// plus the Hoffman-chain value 2 h_hat(B(G)) = n lambda2(B) / (r + lambda2(B))
// with lambda2(B) = max(lambda2, -lambda_min).
struct DoubleBoundsReport {
  double half_phi_h = 0.0;
  double h_hat_b0 = 0.0;
  bool equality_expected = false;
  double hoffman = 0.0;
  double two_h_hat_b = 0.0;
};

inline DoubleBoundsReport compare_double_bounds(const Graph& g) {
  int r = g.regularity();
  int n = g.n();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
  double l2 = n >= 2 ? es.eigenvalues()(n - 2) : 0.0;
  double ln = es.eigenvalues()(0);
  DoubleBoundsReport out;
  out.half_phi_h = haemers_phi_H(g) / 2.0;
  double mu = std::max(l2 + 1.0, -ln - 1.0);
  out.h_hat_b0 = (n / 2.0) * mu / (mu + r + 1.0);
  out.equality_expected = std::abs(l2 - r) < 1e-8 || std::abs(l2 + ln + 2.0) < 1e-8;
  out.hoffman = hoffman_bound(g);
  double l2b = std::max(l2, -ln);
  out.two_h_hat_b = r + l2b > 0 ? n * l2b / (r + l2b) : static_cast<double>(n);
  return out;
}

// Eigenvalue bounds through the bipartite complement of a regular balanced
// bipartite graph:
//   h_hat(complement) = (n/2) lambda2 / (lambda2 + n - r)
//   phi_H(complement of flatten)/2 = (n/2)(lambda2 + r) / (2n - r + lambda2)
// The first is strictly smaller exactly when lambda2 < r < n.
struct ComplementBoundsReport {
  double h_hat_bc = 0.0;
  double half_phi_h_complement = 0.0;
  bool strict_expected = false;
};

inline ComplementBoundsReport bipartite_complement_bounds(const BipartiteGraph& g) {
  auto rb = detail::regular_balanced(g, "bipartite_complement_bounds");
  double n = rb.n, r = rb.r, l = rb.lambda2;
  ComplementBoundsReport out;
  out.h_hat_bc = rb.r == rb.n ? n / 2.0 : (n / 2.0) * l / (l + n - r);
  out.half_phi_h_complement = (n / 2.0) * (l + r) / (2.0 * n - r + l);
  out.strict_expected = l < r - 1e-12 && rb.r < rb.n;
  return out;
}

// Closed form for the symmetry-reduced balanced theta bound on regular
// balanced bipartite graphs: 2 n lambda2 / (r + lambda2) = 4 h_hat.
inline double theta_bal_hat_closed_form(const BipartiteGraph& g) {
  auto rb = detail::regular_balanced(g, "theta_bal_hat_closed_form");
  if (g.is_complete_bipartite()) return 0.0;
  if (rb.r == 0) return 2.0 * rb.n;
  return 2.0 * rb.n * rb.lambda2 / (rb.r + rb.lambda2);
}

}  // namespace bbp
