#include "lqca/border.hpp"

#include <limits>
#include <stdexcept>

namespace lqca {

namespace {

void require_border_input(const Automaton& a) {
  if (!a.neighborhood().simple()) {
    throw std::invalid_argument("border graph requires a simple neighborhood");
  }
  if (a.radius() < 2) {
    throw std::invalid_argument("border graph requires a neighborhood of size at least two");
  }
}

double quiescent_weight(const Automaton& a, std::size_t word) {
  return std::norm(a.amplitude(word, a.quiescent()));
}

}  // namespace

BorderGraph build_left_border_graph(const Automaton& a) {
  require_border_input(a);
  const std::size_t k = a.alphabet_size();
  const std::size_t m = a.border_dim();
  BorderGraph g;
  g.side = BorderGraph::Side::left;
  g.words = m;
  g.adjacency = WeightMatrix(m + 1);

  for (std::size_t w = 0; w < m; ++w) {
    for (StateIndex y = 0; y < k; ++y) {
      const std::size_t full = w * k + y;
      g.adjacency(w, full % m) = ExtReal(quiescent_weight(a, full));
    }
  }
  // q^(r-1) has index 0 and q^(r-2)y has index y
  for (StateIndex y = 1; y < k; ++y) {
    g.adjacency(m, y) = ExtReal(quiescent_weight(a, y));
  }
  return g;
}

BorderGraph build_right_border_graph(const Automaton& a) {
  require_border_input(a);
  const BorderGraph mirrored = build_left_border_graph(mirror(a));
  const std::size_t m = mirrored.words;
  const std::size_t len = a.radius() - 1;

  std::vector<std::size_t> rev(m + 1);
  for (std::size_t w = 0; w < m; ++w) rev[w] = a.reverse_index(w, len);
  rev[m] = m;

  BorderGraph g;
  g.side = BorderGraph::Side::right;
  g.words = m;
  g.adjacency = WeightMatrix(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) g.adjacency(i, j) = mirrored.adjacency(rev[i], rev[j]);
  }
  return g;
}

WeightMatrix kleene_all_pairs(const WeightMatrix& adjacency, const Tolerance& tol) {
  WeightMatrix w = adjacency;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const WeightMatrix prev = w;
    const ExtReal loop = ext_star(prev(k, k), tol);
    for (std::size_t i = 0; i < n; ++i) {
      const ExtReal into = ext_mul(prev(i, k), loop, tol);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) = ext_add(prev(i, j), ext_mul(into, prev(k, j), tol));
      }
    }
    w.stage = k + 1;
  }
  return w;
}

namespace {

Eigen::VectorXd read_border(const Automaton& a, const BorderGraph& g, const Tolerance& tol,
                            const char* name, BorderVectors& out) {
  const WeightMatrix w = kleene_all_pairs(g, tol);
  const std::size_t m = g.words;
  Eigen::VectorXd v(static_cast<Eigen::Index>(m));
  for (std::size_t word = 0; word < m; ++word) {
    ExtReal total = w(g.augmented(), word);
    if (word == 0) total = ext_add(total, ExtReal(1.0));
    if (total.is_infinite()) {
      out.any_infinite = true;
      out.infinite_components.push_back(std::string(name) + "[" +
                                        a.spell(a.decode_word(word, a.radius() - 1)) + "]");
    }
    v(static_cast<Eigen::Index>(word)) = total.to_double();
  }
  return v;
}

}  // namespace

BorderVectors border_vectors(const Automaton& a, const Tolerance& tol) {
  BorderVectors out;
  out.l = read_border(a, build_left_border_graph(a), tol, "l", out);
  out.r = read_border(a, build_right_border_graph(a), tol, "r", out);
  return out;
}

}  // namespace lqca
