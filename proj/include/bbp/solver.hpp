#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bbp/sdp.hpp"

namespace bbp {

struct SolverConfig {
  double gap_tol = 1e-8;        // relative duality gap target
  double feas_tol = 1e-8;       // relative primal/dual residual target
  int max_iterations = 200;
  double step_fraction = 0.98;  // fraction of the step to the cone boundary
  int dim_cap = 400;            // largest admissible total block dimension
  bool verbose = false;
};

// Primal-dual interior-point solver on the homogeneous self-dual embedding
//   A(X) - tau b = 0,   sum_k y_k A_k - S - tau C = 0,   b'y - <C,X> - kappa = 0,
//   X, S in cone, tau, kappa >= 0,
// with Nesterov-Todd scaling and a Mehrotra-style predictor-corrector.
// tau -> positive recovers an optimal pair (X/tau, y/tau); kappa -> positive
// yields an infeasibility certificate (improving ray).  Fully deterministic:
// no randomness, no threading, so repeated runs are bit-identical.
namespace detail_ipm {

struct Entry {
  int i, j;
  double v;
};

struct SparseSym {
  std::vector<std::vector<Entry>> psd;      // per psd block
  std::vector<std::pair<int, double>> lin;  // (flattened scalar index, value)
};

class Ipm {
 public:
  Ipm(const SdpProblem& p, const SolverConfig& cfg) : prob_(p), cfg_(cfg) { preprocess(); }

  SolveResult run() {
    init_point();
    SolveResult res;
    double mu0 = mu();
    int stall = 0;

    for (iter_ = 0; iter_ < cfg_.max_iterations; ++iter_) {
      compute_residuals();
      if (check_convergence(res)) return finalize(res, SolveStatus::optimal, "converged");
      if (tau_ < 1e-10 * std::max(1.0, kappa_)) return classify_infeasible(res);
      if (mu() < 1e-14 * mu0 && tau_ < 1e-7) return classify_infeasible(res);

      prepare_scaling();
      if (!factor_schur()) return finalize(res, SolveStatus::iteration_limit, "singular Schur complement");

      // Predictor: pure affine step, used only to pick the centering weight.
      Direction aff = solve_direction(0.0, 0.0, Eigen::VectorXd::Zero(nn_));
      double a_aff = std::min(1.0, max_step(aff));
      double mu_aff = affine_mu(aff, a_aff);
      double sigma = std::pow(std::max(mu_aff, 0.0) / mu(), 3);
      sigma = std::clamp(sigma, 1e-10, 1.0);

      Eigen::VectorXd corr_n =
          nn_ > 0 ? (aff.dxn.array() * aff.dsn.array() * sn_.array().inverse()).matrix()
                  : Eigen::VectorXd(0);
      Direction dir = solve_direction(sigma * mu(), aff.dtau * aff.dkappa, corr_n);

      double alpha = std::min(1.0, cfg_.step_fraction * max_step(dir));
      if (!(alpha > 1e-10)) {
        if (++stall >= 3) return finalize(res, SolveStatus::iteration_limit, "step size collapsed");
      } else {
        stall = 0;
      }
      take_step(dir, alpha);
    }
    compute_residuals();
    if (check_convergence(res)) return finalize(res, SolveStatus::optimal, "converged");
    if (tau_ < 1e-8 * std::max(1.0, kappa_)) return classify_infeasible(res);
    return finalize(res, SolveStatus::iteration_limit, "iteration limit reached");
  }

 private:
  struct Direction {
    std::vector<Eigen::MatrixXd> dX, dS;
    Eigen::VectorXd dxn, dsn, dy;
    double dtau = 0.0, dkappa = 0.0;
  };

  // --- problem preprocessing -------------------------------------------------

  void preprocess() {
    prob_.validate();
    if (prob_.total_dim() > cfg_.dim_cap)
      throw std::invalid_argument("solve: total dimension exceeds dim_cap");
    int nb = static_cast<int>(prob_.blocks.size());
    psd_of_block_.assign(nb, -1);
    scal_base_.assign(nb, -1);
    for (int bidx = 0; bidx < nb; ++bidx) {
      if (prob_.blocks[bidx].kind == BlockKind::psd) {
        psd_of_block_[bidx] = static_cast<int>(dims_.size());
        dims_.push_back(prob_.blocks[bidx].dim);
      } else {
        scal_base_[bidx] = nn_;
        nn_ += prob_.blocks[bidx].dim;
      }
    }
    np_ = static_cast<int>(dims_.size());
    m_ = static_cast<int>(prob_.constraints.size());
    nu_ = nn_;
    for (int d : dims_) nu_ += d;

    auto scatter = [&](const std::vector<SymEntry>& entries, SparseSym& out) {
      out.psd.assign(np_, {});
      for (const auto& e : entries) {
        if (psd_of_block_[e.block] >= 0)
          out.psd[psd_of_block_[e.block]].push_back({e.row, e.col, e.value});
        else
          out.lin.emplace_back(scal_base_[e.block] + e.row, e.value);
      }
    };
    scatter(prob_.objective, C_);
    A_.resize(m_);
    b_.resize(m_);
    for (int k = 0; k < m_; ++k) {
      scatter(prob_.constraints[k].entries, A_[k]);
      b_(k) = prob_.constraints[k].rhs;
    }
    Cd_ = dense(C_);
    cn_ = dense_lin(C_);
    norm_b_ = b_.norm();
    norm_c_ = std::sqrt(inner_dense(Cd_, cn_, Cd_, cn_));
  }

  std::vector<Eigen::MatrixXd> dense(const SparseSym& s) const {
    std::vector<Eigen::MatrixXd> out;
    for (int p = 0; p < np_; ++p) {
      Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dims_[p], dims_[p]);
      for (const auto& e : s.psd[p]) {
        mat(e.i, e.j) += e.v;
        if (e.i != e.j) mat(e.j, e.i) += e.v;
      }
      out.push_back(std::move(mat));
    }
    return out;
  }

  Eigen::VectorXd dense_lin(const SparseSym& s) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(nn_);
    for (const auto& [idx, val] : s.lin) v(idx) += val;
    return v;
  }

  // --- block-value helpers ---------------------------------------------------

  double inner_sparse(const SparseSym& a, const std::vector<Eigen::MatrixXd>& Xb,
                      const Eigen::VectorXd& xn) const {
    double s = 0.0;
    for (int p = 0; p < np_; ++p)
      for (const auto& e : a.psd[p]) s += e.v * Xb[p](e.i, e.j) * (e.i == e.j ? 1.0 : 2.0);
    for (const auto& [idx, val] : a.lin) s += val * xn(idx);
    return s;
  }

  double inner_dense(const std::vector<Eigen::MatrixXd>& A, const Eigen::VectorXd& an,
                     const std::vector<Eigen::MatrixXd>& B, const Eigen::VectorXd& bn) const {
    double s = 0.0;
    for (int p = 0; p < np_; ++p) s += A[p].cwiseProduct(B[p]).sum();
    if (nn_ > 0) s += an.dot(bn);
    return s;
  }

  Eigen::VectorXd apply_A(const std::vector<Eigen::MatrixXd>& Xb, const Eigen::VectorXd& xn) const {
    Eigen::VectorXd out(m_);
    for (int k = 0; k < m_; ++k) out(k) = inner_sparse(A_[k], Xb, xn);
    return out;
  }

  void add_AT(const Eigen::VectorXd& y, std::vector<Eigen::MatrixXd>& Xb, Eigen::VectorXd& xn) const {
    for (int k = 0; k < m_; ++k) {
      if (y(k) == 0.0) continue;
      for (int p = 0; p < np_; ++p)
        for (const auto& e : A_[k].psd[p]) {
          Xb[p](e.i, e.j) += y(k) * e.v;
          if (e.i != e.j) Xb[p](e.j, e.i) += y(k) * e.v;
        }
      for (const auto& [idx, val] : A_[k].lin) xn(idx) += y(k) * val;
    }
  }

  // Clamped spectral functions keep the scaling computable right up against
  // the cone boundary.
  static Eigen::MatrixXd spectral_pow(const Eigen::MatrixXd& a, double expo) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(1e-300);
    Eigen::ArrayXd powd = d.array().pow(expo);
    return es.eigenvectors() * powd.matrix().asDiagonal() * es.eigenvectors().transpose();
  }

  // --- state -----------------------------------------------------------------

  void init_point() {
    X_.clear();
    S_.clear();
    for (int d : dims_) {
      X_.push_back(Eigen::MatrixXd::Identity(d, d));
      S_.push_back(Eigen::MatrixXd::Identity(d, d));
    }
    xn_ = Eigen::VectorXd::Ones(nn_);
    sn_ = Eigen::VectorXd::Ones(nn_);
    y_ = Eigen::VectorXd::Zero(m_);
    tau_ = 1.0;
    kappa_ = 1.0;
  }

  double mu() const {
    double s = tau_ * kappa_;
    for (int p = 0; p < np_; ++p) s += X_[p].cwiseProduct(S_[p]).sum();
    if (nn_ > 0) s += xn_.dot(sn_);
    return s / (nu_ + 1);
  }

  void compute_residuals() {
    rp_ = tau_ * b_ - apply_A(X_, xn_);
    Rd_.clear();
    for (int p = 0; p < np_; ++p) Rd_.push_back(tau_ * Cd_[p] + S_[p]);
    rdn_ = tau_ * cn_ + sn_;
    Eigen::VectorXd tmp_n = Eigen::VectorXd::Zero(nn_);
    std::vector<Eigen::MatrixXd> tmp;
    for (int d : dims_) tmp.push_back(Eigen::MatrixXd::Zero(d, d));
    add_AT(y_, tmp, tmp_n);
    for (int p = 0; p < np_; ++p) Rd_[p] -= tmp[p];
    rdn_ -= tmp_n;
    cx_ = inner_dense(Cd_, cn_, X_, xn_);
    by_ = b_.dot(y_);
    rg_ = kappa_ + cx_ - by_;
  }

  bool check_convergence(SolveResult& res) {
    double pv = cx_ / tau_;
    double dv = by_ / tau_;
    double gap = std::abs(pv - dv) / (1.0 + std::max(std::abs(pv), std::abs(dv)));
    double pres = (apply_A(X_, xn_) / tau_ - b_).norm() / (1.0 + norm_b_);
    double dres = 0.0;
    {
      std::vector<Eigen::MatrixXd> slack = Cd_;
      Eigen::VectorXd slack_n = cn_;
      for (int p = 0; p < np_; ++p) slack[p] = -slack[p] - S_[p] / tau_;
      slack_n = -slack_n - sn_ / tau_;
      add_AT(y_ / tau_, slack, slack_n);
      dres = std::sqrt(inner_dense(slack, slack_n, slack, slack_n)) / (1.0 + norm_c_);
    }
    res.primal_value = pv;
    res.dual_value = dv;
    res.gap_abs = std::abs(pv - dv);
    res.gap_rel = gap;
    res.primal_residual = pres;
    res.dual_residual = dres;
    return gap <= cfg_.gap_tol && pres <= cfg_.feas_tol && dres <= cfg_.feas_tol;
  }

  // --- per-iteration scaling -------------------------------------------------

  void prepare_scaling() {
    W_.clear();
    Sinv_.clear();
    for (int p = 0; p < np_; ++p) {
      Eigen::MatrixXd xh = spectral_pow(X_[p], 0.5);
      Eigen::MatrixXd t = xh * S_[p] * xh;
      W_.push_back(xh * spectral_pow(t, -0.5) * xh);
      Sinv_.push_back(spectral_pow(S_[p], -1.0));
    }
    if (nn_ > 0) {
      w2_ = xn_.array() / sn_.array();
      sninv_ = sn_.array().inverse();
    }

    // W A_k W for every constraint, exploiting sparsity of A_k.
    U_.assign(m_, {});
    for (int k = 0; k < m_; ++k) {
      for (int p = 0; p < np_; ++p) {
        Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dims_[p], dims_[p]);
        for (const auto& e : A_[k].psd[p]) {
          if (e.i == e.j) {
            u += e.v * (W_[p].col(e.i) * W_[p].col(e.i).transpose());
          } else {
            u += e.v * (W_[p].col(e.i) * W_[p].col(e.j).transpose() +
                        W_[p].col(e.j) * W_[p].col(e.i).transpose());
          }
        }
        U_[k].push_back(std::move(u));
      }
    }
    WCW_.clear();
    for (int p = 0; p < np_; ++p) WCW_.push_back(W_[p] * Cd_[p] * W_[p]);
    WRdW_.clear();
    for (int p = 0; p < np_; ++p) WRdW_.push_back(W_[p] * Rd_[p] * W_[p]);
    wrdn_ = nn_ > 0 ? Eigen::VectorXd((w2_.array() * rdn_.array()).matrix()) : Eigen::VectorXd(0);
    wcn_ = nn_ > 0 ? Eigen::VectorXd((w2_.array() * cn_.array()).matrix()) : Eigen::VectorXd(0);
  }

  bool factor_schur() {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m_, m_);
    for (int k = 0; k < m_; ++k)
      for (int l = k; l < m_; ++l) {
        double v = inner_sparse(A_[k], U_[l], Eigen::VectorXd(0));
        for (const auto& [idx, val] : A_[k].lin)
          for (const auto& [idx2, val2] : A_[l].lin)
            if (idx == idx2) v += val * w2_(idx) * val2;
        M(k, l) = v;
        M(l, k) = v;
      }
    what_.resize(m_);
    for (int k = 0; k < m_; ++k) what_(k) = inner_sparse(A_[k], WCW_, wcn_);
    q_ = inner_dense(Cd_, cn_, WCW_, wcn_);
    awrdw_ = apply_A(WRdW_, wrdn_);
    cwrdw_ = inner_dense(Cd_, cn_, WRdW_, wrdn_);

    schur_.compute(M);
    if (schur_.info() != Eigen::Success) {
      M.diagonal().array() += 1e-12 * (1.0 + M.diagonal().cwiseAbs().maxCoeff());
      schur_.compute(M);
      if (schur_.info() != Eigen::Success) return false;
    }
    my_v_ = schur_.solve(what_ - b_);
    denom_ = (b_ + what_).dot(my_v_) + kappa_ / tau_ - q_;
    return true;
  }

  // Inner sparse against a dense vector only needs the lin part; overload for
  // the scalar segment of U (kept implicitly as w2 .* a_l).
  double inner_sparse(const SparseSym& a, const std::vector<Eigen::MatrixXd>& Xb,
                      const Eigen::VectorXd&& unused) const {
    double s = 0.0;
    for (int p = 0; p < np_; ++p)
      for (const auto& e : a.psd[p]) s += e.v * Xb[p](e.i, e.j) * (e.i == e.j ? 1.0 : 2.0);
    return s;
  }

  Direction solve_direction(double sigma_mu, double corr_tk, const Eigen::VectorXd& corr_n) {
    Direction d;
    std::vector<Eigen::MatrixXd> R;
    for (int p = 0; p < np_; ++p) R.push_back(sigma_mu * Sinv_[p] - X_[p]);
    Eigen::VectorXd rn(nn_);
    if (nn_ > 0) rn = (sigma_mu * sninv_.array() - xn_.array()).matrix() - corr_n;

    Eigen::VectorXd u = apply_A(R, rn) + awrdw_ - rp_;
    double cc = sigma_mu - tau_ * kappa_ - corr_tk;
    double rhs2 = rg_ + inner_dense(Cd_, cn_, R, rn) + cwrdw_ + cc / tau_;

    Eigen::VectorXd my_u = schur_.solve(u);
    double dtau = 0.0;
    if (std::isfinite(denom_) && std::abs(denom_) > 1e-300)
      dtau = (rhs2 - (b_ + what_).dot(my_u)) / denom_;
    d.dtau = dtau;
    d.dy = my_u + dtau * my_v_;

    d.dS.clear();
    for (int p = 0; p < np_; ++p) d.dS.push_back(-dtau * Cd_[p] - Rd_[p]);
    d.dsn = nn_ > 0 ? Eigen::VectorXd(-dtau * cn_ - rdn_) : Eigen::VectorXd(0);
    add_AT(d.dy, d.dS, d.dsn);

    d.dX.clear();
    for (int p = 0; p < np_; ++p) {
      Eigen::MatrixXd dx = R[p] - W_[p] * d.dS[p] * W_[p];
      d.dX.push_back(0.5 * (dx + dx.transpose()));
    }
    d.dxn = nn_ > 0 ? Eigen::VectorXd(rn - (w2_.array() * d.dsn.array()).matrix()) : Eigen::VectorXd(0);
    d.dkappa = (cc - kappa_ * dtau) / tau_;
    return d;
  }

  // Largest step keeping every block inside its cone.
  double max_step(const Direction& d) const {
    double a = std::numeric_limits<double>::infinity();
    auto psd_bound = [&](const Eigen::MatrixXd& v, const Eigen::MatrixXd& dv) {
      Eigen::MatrixXd vis = spectral_pow(v, -0.5);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(vis * dv * vis);
      double lmin = es.eigenvalues()(0);
      if (lmin < 0) a = std::min(a, -1.0 / lmin);
    };
    for (int p = 0; p < np_; ++p) {
      psd_bound(X_[p], d.dX[p]);
      psd_bound(S_[p], d.dS[p]);
    }
    for (int i = 0; i < nn_; ++i) {
      if (d.dxn(i) < 0) a = std::min(a, -xn_(i) / d.dxn(i));
      if (d.dsn(i) < 0) a = std::min(a, -sn_(i) / d.dsn(i));
    }
    if (d.dtau < 0) a = std::min(a, -tau_ / d.dtau);
    if (d.dkappa < 0) a = std::min(a, -kappa_ / d.dkappa);
    return a;
  }

  double affine_mu(const Direction& d, double a) const {
    double s = (tau_ + a * d.dtau) * (kappa_ + a * d.dkappa);
    for (int p = 0; p < np_; ++p) s += (X_[p] + a * d.dX[p]).cwiseProduct(S_[p] + a * d.dS[p]).sum();
    if (nn_ > 0) s += (xn_ + a * d.dxn).dot(sn_ + a * d.dsn);
    return s / (nu_ + 1);
  }

  void take_step(const Direction& d, double a) {
    for (int p = 0; p < np_; ++p) {
      X_[p] += a * d.dX[p];
      S_[p] += a * d.dS[p];
      X_[p] = 0.5 * (X_[p] + X_[p].transpose());
      S_[p] = 0.5 * (S_[p] + S_[p].transpose());
    }
    if (nn_ > 0) {
      xn_ += a * d.dxn;
      sn_ += a * d.dsn;
    }
    y_ += a * d.dy;
    tau_ += a * d.dtau;
    kappa_ += a * d.dkappa;
  }

  // --- termination -----------------------------------------------------------

  SolveResult finalize(SolveResult res, SolveStatus status, const std::string& message) {
    res.status = status;
    res.iterations = iter_;
    res.message = message;
    fill_blocks(res, 1.0 / tau_);
    res.y = y_ / tau_;
    compute_min_eigs(res);
    return res;
  }

  SolveResult classify_infeasible(SolveResult res) {
    res.iterations = iter_;
    double xnorm = 1e-300;
    for (int p = 0; p < np_; ++p) xnorm = std::max(xnorm, X_[p].norm());
    if (nn_ > 0 && xn_.size() > 0) xnorm = std::max(xnorm, xn_.norm());
    double pray = apply_A(X_, xn_).norm();
    bool dual_inf = cx_ > 1e-8 && pray <= 1e-6 * std::max(1.0, cx_);
    bool primal_inf = by_ < -1e-8;
    res.primal_value = std::numeric_limits<double>::quiet_NaN();
    res.dual_value = std::numeric_limits<double>::quiet_NaN();
    res.gap_abs = res.gap_rel = std::numeric_limits<double>::quiet_NaN();
    if (dual_inf && !primal_inf) {
      res.status = SolveStatus::dual_infeasible;
      res.message = "improving primal ray: A(X) = 0, <C,X> = 1, X in cone";
      fill_blocks(res, 1.0 / cx_);
      res.y = Eigen::VectorXd::Zero(m_);
    } else if (primal_inf) {
      res.status = SolveStatus::primal_infeasible;
      res.message = "improving dual ray: sum y_k A_k in cone, b'y = -1";
      fill_blocks(res, 1.0 / std::max(xnorm, 1.0));
      res.y = y_ / (-by_);
    } else {
      res.status = SolveStatus::iteration_limit;
      res.message = "embedding degenerate: infeasibility suspected but unclassified";
      fill_blocks(res, 1.0 / std::max(tau_, 1e-300));
      res.y = y_ / std::max(tau_, 1e-300);
    }
    compute_min_eigs(res);
    return res;
  }

  void fill_blocks(SolveResult& res, double scale) const {
    res.x_blocks.clear();
    res.z_blocks.clear();
    int nb = static_cast<int>(prob_.blocks.size());
    for (int bidx = 0; bidx < nb; ++bidx) {
      if (psd_of_block_[bidx] >= 0) {
        int p = psd_of_block_[bidx];
        res.x_blocks.push_back(scale * X_[p]);
        res.z_blocks.push_back(scale * S_[p]);
      } else {
        int base = scal_base_[bidx];
        int d = prob_.blocks[bidx].dim;
        res.x_blocks.push_back(scale * xn_.segment(base, d));
        res.z_blocks.push_back(scale * sn_.segment(base, d));
      }
    }
  }

  void compute_min_eigs(SolveResult& res) const {
    double mx = std::numeric_limits<double>::infinity();
    double mz = mx;
    int nb = static_cast<int>(prob_.blocks.size());
    for (int bidx = 0; bidx < nb; ++bidx) {
      if (prob_.blocks[bidx].kind == BlockKind::psd) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(res.x_blocks[bidx]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ez(res.z_blocks[bidx]);
        mx = std::min(mx, ex.eigenvalues()(0));
        mz = std::min(mz, ez.eigenvalues()(0));
      } else if (res.x_blocks[bidx].size() > 0) {
        mx = std::min(mx, res.x_blocks[bidx].minCoeff());
        mz = std::min(mz, res.z_blocks[bidx].minCoeff());
      }
    }
    res.min_eig_x = std::isfinite(mx) ? mx : 0.0;
    res.min_eig_z = std::isfinite(mz) ? mz : 0.0;
  }

  // --- data ------------------------------------------------------------------

  SdpProblem prob_;
  SolverConfig cfg_;

  std::vector<int> psd_of_block_, scal_base_, dims_;
  int np_ = 0, nn_ = 0, m_ = 0, nu_ = 0;
  SparseSym C_;
  std::vector<SparseSym> A_;
  Eigen::VectorXd b_;
  std::vector<Eigen::MatrixXd> Cd_;
  Eigen::VectorXd cn_;
  double norm_b_ = 0.0, norm_c_ = 0.0;

  std::vector<Eigen::MatrixXd> X_, S_;
  Eigen::VectorXd xn_, sn_, y_;
  double tau_ = 1.0, kappa_ = 1.0;
  int iter_ = 0;

  Eigen::VectorXd rp_, rdn_;
  std::vector<Eigen::MatrixXd> Rd_;
  double cx_ = 0.0, by_ = 0.0, rg_ = 0.0;

  std::vector<Eigen::MatrixXd> W_, Sinv_, WCW_, WRdW_;
  std::vector<std::vector<Eigen::MatrixXd>> U_;
  Eigen::ArrayXd w2_, sninv_;
  Eigen::VectorXd wrdn_, wcn_, what_, awrdw_, my_v_;
  double q_ = 0.0, cwrdw_ = 0.0, denom_ = 0.0;
  Eigen::LDLT<Eigen::MatrixXd> schur_;
};

}  // namespace detail_ipm

inline SolveResult solve(const SdpProblem& problem, const SolverConfig& config = {}) {
  detail_ipm::Ipm ipm(problem, config);
  return ipm.run();
}

}  // namespace bbp
