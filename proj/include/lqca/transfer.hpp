#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "lqca/automaton.hpp"

namespace lqca {

/// M_a(w', w) = |[delta(xty)](a)|^2 when w = xt and w' = ty, else 0.
/// Rows are indexed by w', columns by w.
struct TransferOperator {
  StateIndex letter = 0;
  Eigen::MatrixXd matrix;
};

/// One operator per letter, in state-index order. Requires a simple
/// neighborhood of size at least two.
std::vector<TransferOperator> build_transfer_operators(const Automaton& a);

/// M_{b_s} ... M_{b_1} v. Throws std::out_of_range for letters without an
/// operator.
Eigen::VectorXd apply_word(std::span<const TransferOperator> ops, std::span<const StateIndex> word,
                           const Eigen::VectorXd& v);

/// <M_{d_j..d_k} l | r> over idom(d) = [j, k]: the squared norm of row d of
/// the evolution operator.
double row_norm_squared(std::span<const TransferOperator> ops, const Eigen::VectorXd& l,
                        const Eigen::VectorXd& r, const Configuration& d);

/// The word d_j..d_k spelled by a configuration (empty when quiescent).
Word configuration_word(const Configuration& d);

}  // namespace lqca
