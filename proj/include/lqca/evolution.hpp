#pragma once

// Brute-force evaluation of the global time evolution operator on finite
// superpositions. Everything here is exponential in the window width and is
// meant as ground truth for the polynomial-time decision procedure.

#include <cstddef>
#include <map>
#include <stdexcept>

#include "lqca/automaton.hpp"
#include "lqca/numerics.hpp"

namespace lqca {

struct OracleLimits {
  /// Widest cell window any enumeration may range over.
  std::size_t max_window = 22;
  /// Cap on k^width enumerations (predecessor and Gram sweeps).
  std::size_t max_configurations = std::size_t{1} << 22;
};

class OracleScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-support map from configurations to amplitudes.
class Superposition {
 public:
  using Terms = std::map<Configuration, Complex>;

  Superposition() = default;
  static Superposition pure(Configuration c, Complex amplitude = 1.0);

  void add(const Configuration& c, Complex amplitude);
  Complex amplitude(const Configuration& c) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  double norm() const;
  /// Drops terms with magnitude <= threshold.
  void prune(double threshold);

  Superposition& operator+=(const Superposition& other);
  Superposition& operator*=(Complex factor);

 private:
  Terms terms_;
};

/// Cells whose new state can depend on idom(c): [j - a_r, k - a_1].
/// Empty for the all-quiescent configuration.
Interval reach(const Automaton& a, const Configuration& c);

/// U_A(d, c): product of [delta(c_{i+N})](d_i) over every cell where the
/// factor can differ from one. Cells outside reach(c) see an all-quiescent
/// neighborhood and contribute [d_i = q].
Complex transition_amplitude(const Automaton& a, const Configuration& d, const Configuration& c);

/// U_A applied to a finite superposition. The image of each basis
/// configuration factorizes over the cells of reach(c), so successors are
/// enumerated as a product of per-cell superpositions with zero branches cut.
Superposition step(const Automaton& a, const Superposition& u, const Tolerance& tol = {},
                   const OracleLimits& limits = {});

struct GramReport {
  Interval window;
  /// max over c of | ||U e_c||^2 - 1 |
  double max_norm_deviation = 0.0;
  /// max over c != c' of |<U e_c, U e_c'>|
  double max_offdiag = 0.0;
  Configuration worst_norm;
  std::pair<Configuration, Configuration> worst_pair;
  std::size_t columns = 0;

  bool clean(double threshold) const {
    return max_norm_deviation <= threshold && max_offdiag <= threshold;
  }
};

/// Gram matrix of the columns of U_A indexed by every configuration with
/// support inside `window`. Columns have finite support so the entries are
/// exact; a clean report is necessary for well-formedness, not sufficient.
GramReport truncated_column_gram(const Automaton& a, Interval window,
                                 const OracleLimits& limits = {});

/// Sum of |U_A(d, c)|^2 over predecessors c supported inside `window`: a
/// lower bound on the squared norm of row d, nondecreasing in the window.
double truncated_row_norm(const Automaton& a, const Configuration& d, Interval window,
                          const OracleLimits& limits = {});

/// Calls `visit` on every configuration supported inside `window`.
template <class Visit>
void for_each_configuration(std::size_t alphabet, Interval window, Visit&& visit);

}  // namespace lqca

#include "lqca/detail/enumerate.hpp"
