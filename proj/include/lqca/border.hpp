#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "lqca/automaton.hpp"
#include "lqca/numerics.hpp"

namespace lqca {

/// Dense square matrix over the extended nonnegative reals.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n) : n_(n), w_(n * n) {}

  std::size_t size() const { return n_; }
  ExtReal& operator()(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }
  ExtReal operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  /// Number of W_k recursion stages applied so far (0 = raw adjacency).
  std::size_t stage = 0;

 private:
  std::size_t n_ = 0;
  std::vector<ExtReal> w_;
};

/// Finite border graph: vertices 0..m-1 are the words of length r-1 (in
/// the automaton's word encoding) and vertex m is the augmented vertex that
/// forces the first step out of the quiescent word.
///
/// Left graph: edge xt -> ty weighs |[delta(xty)](q)|^2 and the augmented
/// vertex has edges to q^(r-2)y, y != q, weighing like q^(r-1) -> q^(r-2)y.
/// Total weights from the augmented vertex to w give the left border vector.
///
/// Right graph: the left graph of the mirrored automaton with each vertex
/// relabeled to the reversal of its word. A path augmented -> w in it is a
/// rightward path from w that enters the quiescent tail, read backwards.
struct BorderGraph {
  enum class Side { left, right };

  Side side = Side::left;
  std::size_t words = 0;
  WeightMatrix adjacency;

  std::size_t augmented() const { return words; }
};

BorderGraph build_left_border_graph(const Automaton& a);
BorderGraph build_right_border_graph(const Automaton& a);

/// Total weight of all paths with at least one edge between every ordered
/// pair of vertices, via W_k(i,j) = W(i,j) + W(i,k) W(k,k)* W(k,j).
WeightMatrix kleene_all_pairs(const WeightMatrix& adjacency, const Tolerance& tol = {});
inline WeightMatrix kleene_all_pairs(const BorderGraph& g, const Tolerance& tol = {}) {
  return kleene_all_pairs(g.adjacency, tol);
}

struct BorderVectors {
  /// Indexed by word of length r-1; infinite components are IEEE inf.
  Eigen::VectorXd l;
  Eigen::VectorXd r;
  bool any_infinite = false;
  /// Human-readable names of the infinite components, e.g. "l[ab]".
  std::vector<std::string> infinite_components;
};

/// Requires a simple neighborhood of size at least two.
BorderVectors border_vectors(const Automaton& a, const Tolerance& tol = {});

}  // namespace lqca
