#include "lqca/transfer.hpp"

#include <stdexcept>
#include <string>

namespace lqca {

std::vector<TransferOperator> build_transfer_operators(const Automaton& a) {
  if (!a.neighborhood().simple() || a.radius() < 2) {
    throw std::invalid_argument("transfer operators require a simple neighborhood of size >= 2");
  }
  const std::size_t k = a.alphabet_size();
  const auto m = static_cast<Eigen::Index>(a.border_dim());
  std::vector<TransferOperator> ops(k);
  for (StateIndex letter = 0; letter < k; ++letter) {
    ops[letter].letter = letter;
    ops[letter].matrix = Eigen::MatrixXd::Zero(m, m);
  }
  for (Eigen::Index w = 0; w < m; ++w) {
    for (StateIndex y = 0; y < k; ++y) {
      const std::size_t full = static_cast<std::size_t>(w) * k + y;
      const auto next = static_cast<Eigen::Index>(full % static_cast<std::size_t>(m));
      for (StateIndex letter = 0; letter < k; ++letter) {
        ops[letter].matrix(next, w) = std::norm(a.amplitude(full, letter));
      }
    }
  }
  return ops;
}

Eigen::VectorXd apply_word(std::span<const TransferOperator> ops, std::span<const StateIndex> word,
                           const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  for (StateIndex letter : word) {
    if (letter >= ops.size()) {
      throw std::out_of_range("no transfer operator for letter " + std::to_string(letter));
    }
    out = ops[letter].matrix * out;
  }
  return out;
}

Word configuration_word(const Configuration& d) { return d.cells(); }

double row_norm_squared(std::span<const TransferOperator> ops, const Eigen::VectorXd& l,
                        const Eigen::VectorXd& r, const Configuration& d) {
  return apply_word(ops, configuration_word(d), l).dot(r);
}

}  // namespace lqca
