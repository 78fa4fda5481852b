#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lqca/numerics.hpp"

namespace lqca {

using StateIndex = std::size_t;
using Word = std::vector<StateIndex>;
using CellIndex = std::int64_t;

/// Raised for malformed input: unknown symbols, wrong word lengths,
/// duplicate states and the like. Axiom violations of a well-typed table go
/// through ValidationReport instead.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  CellIndex lo = 0;
  CellIndex hi = -1;

  bool empty() const { return hi < lo; }
  CellIndex width() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(CellIndex i) const { return lo <= i && i <= hi; }
  bool contains(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
  bool operator==(const Interval&) const = default;
};

/// Smallest interval containing both (an empty operand is ignored).
Interval hull(const Interval& a, const Interval& b);

struct Neighborhood {
  std::vector<int> offsets;

  std::size_t size() const { return offsets.size(); }
  bool strictly_increasing() const;
  /// Offsets form a contiguous interval.
  bool simple() const;
  int first() const { return offsets.front(); }
  int last() const { return offsets.back(); }
  /// s = a_r - a_1 + 1
  int span() const { return last() - first() + 1; }
  bool operator==(const Neighborhood&) const = default;
};

/// A finite configuration: cells outside [start, start + size) are
/// quiescent (state index 0), and the stored range is trimmed so that its
/// first and last cells are non-quiescent. The all-quiescent configuration
/// has start 0 and no cells, giving the interval domain [0, -1].
class Configuration {
 public:
  Configuration() = default;
  Configuration(CellIndex start, std::vector<StateIndex> cells);

  bool quiescent() const { return cells_.empty(); }
  Interval idom() const;
  StateIndex at(CellIndex i) const;
  CellIndex start() const { return start_; }
  const std::vector<StateIndex>& cells() const { return cells_; }
  /// Same configuration moved `by` cells to the right.
  Configuration shifted(CellIndex by) const;

  auto operator<=>(const Configuration&) const = default;

 private:
  CellIndex start_ = 0;
  std::vector<StateIndex> cells_;
};

/// Linear quantum cellular automaton (alphabet, quiescent state,
/// neighborhood, local transition table).
///
/// States are dense indices with the quiescent state at index 0; `symbols()`
/// maps them back to their names. The local rule is stored densely: the
/// amplitude of output y for neighborhood word x_1..x_r lives at
/// `word_index(x) * k + y`, where words are read base k with x_1 most
/// significant. With that encoding the word xty of length r has index
/// `index(xt) * k + y`, and its right (r-1)-suffix ty has index
/// `(index(xt) * k + y) mod k^(r-1)`.
class Automaton {
 public:
  /// `symbols[0]` is the quiescent state. `table` has k^(r+1) entries and
  /// `listed` has k^r entries recording which words the input supplied.
  Automaton(std::vector<std::string> symbols, Neighborhood neighborhood,
            std::vector<Complex> table, std::vector<bool> listed);

  std::size_t alphabet_size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(StateIndex s) const { return symbols_.at(s); }
  static constexpr StateIndex quiescent() { return 0; }
  /// Throws InputError for unknown symbols.
  StateIndex state_index(std::string_view symbol) const;

  const Neighborhood& neighborhood() const { return neighborhood_; }
  /// r = |N|
  std::size_t radius() const { return neighborhood_.size(); }
  /// m = k^(r-1), the number of border words
  std::size_t border_dim() const { return pow_k(radius() - 1); }
  /// n = k^(r+1)
  std::size_t size() const { return pow_k(radius() + 1); }
  /// e = (s + 1) / (r + 1)
  double expansion_factor() const;

  /// k^e for this alphabet.
  std::size_t pow_k(std::size_t e) const;
  std::size_t word_index(std::span<const StateIndex> word) const;
  Word decode_word(std::size_t index, std::size_t length) const;
  /// Reversal of a word of the given length, in index form.
  std::size_t reverse_index(std::size_t index, std::size_t length) const;
  std::string spell(std::span<const StateIndex> word) const;

  Complex amplitude(std::size_t word_index, StateIndex y) const {
    return table_[word_index * symbols_.size() + y];
  }
  Complex amplitude(std::span<const StateIndex> word, StateIndex y) const {
    return amplitude(word_index(word), y);
  }
  bool listed(std::size_t word_index) const { return listed_[word_index]; }
  const std::vector<Complex>& table() const { return table_; }
  const std::vector<bool>& listed_words() const { return listed_; }

 private:
  std::vector<std::string> symbols_;
  Neighborhood neighborhood_;
  std::vector<Complex> table_;
  std::vector<bool> listed_;
};

/// [delta(word)](y) by symbol name. Throws InputError on unknown symbols or
/// a word of the wrong length.
Complex local_amplitude(const Automaton& a, std::span<const std::string> word,
                        std::string_view y);

enum class ViolationKind {
  neighborhood_order,
  incomplete_table,
  zero_superposition,
  quiescent_rule,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Non-fatal remarks (radius one, non-simple neighborhood).
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Automaton& a, const Tolerance& tol = {});

/// Relabels a simple neighborhood (j, ..., j+r-1) to (0, ..., r-1) with the
/// same rule table. The global operator changes only by a shift of j cells.
/// Throws std::invalid_argument for non-simple neighborhoods.
Automaton normalize_neighborhood(const Automaton& a);

/// Rewrites an arbitrary neighborhood as the contiguous one spanning
/// a_1..a_r; the new rule reads only the original offsets of each window,
/// so the global operator is unchanged. Simple input is returned as is.
Automaton expand_to_simple(const Automaton& a);

/// Space reflection: neighborhood (-a_r, ..., -a_1) and every rule word
/// reversed.
Automaton mirror(const Automaton& a);

}  // namespace lqca
