#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbp {

// A problem instance always describes the primal-dual pair
//   (P)  max <C, X>   s.t.  <A_k, X> = b_k (k = 1..m),  X >= 0 blockwise,
//   (D)  min b'y      s.t.  sum_k y_k A_k - C >= 0,      y free,
// over a block-diagonal cone: PSD blocks plus nonnegative scalar blocks.
// `sense` records which side a model's quantity of interest lives on: bounds
// stated as maximization problems read their value from (P), bounds stated
// as minimization over free multipliers (lambda, t, s, v, ...) are encoded as
// (D) with one y-coordinate per multiplier.  The solver always solves the
// pair and reports both values.
enum class BlockKind { psd, nonneg };

struct Block {
  BlockKind kind = BlockKind::psd;
  int dim = 0;
};

// Entry of a symmetric coefficient matrix: block-local (row, col) with
// row <= col; an off-diagonal entry implies its mirror image.  For a nonneg
// block, row == col indexes the scalar.
struct SymEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;
};

struct LinearConstraint {
  std::vector<SymEntry> entries;
  double rhs = 0.0;
};

enum class Sense { maximize, minimize };

struct SdpProblem {
  std::vector<Block> blocks;
  std::vector<SymEntry> objective;
  std::vector<LinearConstraint> constraints;
  Sense sense = Sense::maximize;
  std::string name;
  std::string notes;         // mapping of matrices back to the modeled program
  std::string graph_digest;  // digest of the source graph, when applicable

  int total_dim() const {
    int d = 0;
    for (const auto& bl : blocks) d += bl.dim;
    return d;
  }

  void validate() const {
    if (blocks.empty()) throw std::invalid_argument("SdpProblem: no blocks");
    if (constraints.empty()) throw std::invalid_argument("SdpProblem: no constraints");
    for (const auto& bl : blocks)
      if (bl.dim < 1) throw std::invalid_argument("SdpProblem: block dimension must be >= 1");
    auto check = [&](const SymEntry& e) {
      if (e.block < 0 || e.block >= static_cast<int>(blocks.size()))
        throw std::invalid_argument("SdpProblem: entry block out of range");
      const Block& bl = blocks[e.block];
      if (e.row < 0 || e.col < e.row || e.col >= bl.dim)
        throw std::invalid_argument("SdpProblem: entry index out of range");
      if (bl.kind == BlockKind::nonneg && e.row != e.col)
        throw std::invalid_argument("SdpProblem: nonneg block entries must be diagonal");
      if (!std::isfinite(e.value)) throw std::invalid_argument("SdpProblem: non-finite entry");
    };
    for (const auto& e : objective) check(e);
    for (const auto& c : constraints) {
      if (!std::isfinite(c.rhs)) throw std::invalid_argument("SdpProblem: non-finite rhs");
      for (const auto& e : c.entries) check(e);
    }
  }
};

enum class SolveStatus { optimal, primal_infeasible, dual_infeasible, iteration_limit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::primal_infeasible: return "primal_infeasible";
    case SolveStatus::dual_infeasible: return "dual_infeasible";
    default: return "iteration_limit";
  }
}

struct SolveResult {
  SolveStatus status = SolveStatus::iteration_limit;
  double primal_value = 0.0;  // <C, X> of (P)
  double dual_value = 0.0;    // b'y of (D)
  double gap_abs = 0.0;
  double gap_rel = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double min_eig_x = 0.0;  // smallest eigenvalue over returned X blocks
  double min_eig_z = 0.0;  // smallest eigenvalue over returned slack blocks
  int iterations = 0;
  std::vector<Eigen::MatrixXd> x_blocks;  // psd: dim x dim; nonneg: dim x 1
  std::vector<Eigen::MatrixXd> z_blocks;
  Eigen::VectorXd y;
  std::string message;
};

// Value of the modeled bound: the side selected by the problem's sense.
inline double model_value(const SdpProblem& p, const SolveResult& r) {
  return p.sense == Sense::maximize ? r.primal_value : r.dual_value;
}

}  // namespace bbp
