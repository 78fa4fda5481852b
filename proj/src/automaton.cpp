#include "lqca/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace lqca {

Interval hull(const Interval& a, const Interval& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool Neighborhood::strictly_increasing() const {
  if (offsets.empty()) return false;
  return std::adjacent_find(offsets.begin(), offsets.end(),
                            [](int x, int y) { return x >= y; }) == offsets.end();
}

bool Neighborhood::simple() const {
  return strictly_increasing() && last() == first() + static_cast<int>(size()) - 1;
}

Configuration::Configuration(CellIndex start, std::vector<StateIndex> cells)
    : start_(start), cells_(std::move(cells)) {
  auto first = std::find_if(cells_.begin(), cells_.end(), [](StateIndex s) { return s != 0; });
  if (first == cells_.end()) {
    cells_.clear();
    start_ = 0;
    return;
  }
  auto last = std::find_if(cells_.rbegin(), cells_.rend(), [](StateIndex s) { return s != 0; });
  start_ += first - cells_.begin();
  cells_ = std::vector<StateIndex>(first, last.base());
}

Interval Configuration::idom() const {
  if (cells_.empty()) return {};
  return {start_, start_ + static_cast<CellIndex>(cells_.size()) - 1};
}

StateIndex Configuration::at(CellIndex i) const {
  if (i < start_ || i >= start_ + static_cast<CellIndex>(cells_.size())) return 0;
  return cells_[static_cast<std::size_t>(i - start_)];
}

Configuration Configuration::shifted(CellIndex by) const {
  if (cells_.empty()) return *this;
  Configuration c = *this;
  c.start_ += by;
  return c;
}

Automaton::Automaton(std::vector<std::string> symbols, Neighborhood neighborhood,
                     std::vector<Complex> table, std::vector<bool> listed)
    : symbols_(std::move(symbols)),
      neighborhood_(std::move(neighborhood)),
      table_(std::move(table)),
      listed_(std::move(listed)) {
  if (symbols_.empty()) throw InputError("alphabet must be non-empty");
  if (neighborhood_.offsets.empty()) throw InputError("neighborhood must be non-empty");
  const std::size_t words = pow_k(radius());
  if (table_.size() != words * symbols_.size() || listed_.size() != words) {
    throw InputError("rule table size does not match alphabet and neighborhood");
  }
}

StateIndex Automaton::state_index(std::string_view symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) throw InputError("unknown state '" + std::string(symbol) + "'");
  return static_cast<StateIndex>(it - symbols_.begin());
}

double Automaton::expansion_factor() const {
  return static_cast<double>(neighborhood_.span() + 1) / static_cast<double>(radius() + 1);
}

std::size_t Automaton::pow_k(std::size_t e) const {
  std::size_t p = 1;
  for (std::size_t i = 0; i < e; ++i) p *= symbols_.size();
  return p;
}

std::size_t Automaton::word_index(std::span<const StateIndex> word) const {
  std::size_t index = 0;
  for (StateIndex s : word) index = index * symbols_.size() + s;
  return index;
}

Word Automaton::decode_word(std::size_t index, std::size_t length) const {
  Word w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = index % symbols_.size();
    index /= symbols_.size();
  }
  return w;
}

std::size_t Automaton::reverse_index(std::size_t index, std::size_t length) const {
  Word w = decode_word(index, length);
  std::reverse(w.begin(), w.end());
  return word_index(w);
}

std::string Automaton::spell(std::span<const StateIndex> word) const {
  const bool single_char = std::all_of(symbols_.begin(), symbols_.end(),
                                       [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char && i > 0) out += ' ';
    out += symbols_.at(word[i]);
  }
  return out;
}

Complex local_amplitude(const Automaton& a, std::span<const std::string> word,
                        std::string_view y) {
  if (word.size() != a.radius()) {
    throw InputError("word has length " + std::to_string(word.size()) + ", expected " +
                     std::to_string(a.radius()));
  }
  Word w;
  w.reserve(word.size());
  for (const auto& s : word) w.push_back(a.state_index(s));
  return a.amplitude(w, a.state_index(y));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::neighborhood_order: return "neighborhood order";
    case ViolationKind::incomplete_table: return "incomplete table";
    case ViolationKind::zero_superposition: return "zero superposition";
    case ViolationKind::quiescent_rule: return "quiescent rule";
  }
  return "unknown";
}

ValidationReport validate(const Automaton& a, const Tolerance& tol) {
  ValidationReport report;
  const auto& n = a.neighborhood();
  if (!n.strictly_increasing()) {
    report.violations.push_back(
        {ViolationKind::neighborhood_order, "neighborhood offsets must be strictly increasing"});
  } else if (!n.simple()) {
    report.notes.push_back("neighborhood is not an interval; expansion factor " +
                           std::to_string(a.expansion_factor()));
  }
  if (a.radius() == 1) {
    report.notes.push_back(
        "neighborhood of size one: cells evolve independently, decided by the local matrix");
  }

  const std::size_t k = a.alphabet_size();
  const std::size_t words = a.pow_k(a.radius());
  for (std::size_t w = 0; w < words; ++w) {
    const Word word = a.decode_word(w, a.radius());
    if (!a.listed(w)) {
      report.violations.push_back(
          {ViolationKind::incomplete_table, "missing rule for word '" + a.spell(word) + "'"});
      continue;
    }
    double mass = 0.0;
    for (StateIndex y = 0; y < k; ++y) mass = std::max(mass, std::norm(a.amplitude(w, y)));
    if (mass <= tol.zero_abs) {
      report.violations.push_back({ViolationKind::zero_superposition,
                                   "all amplitudes vanish for word '" + a.spell(word) + "'"});
    }
  }

  // word q^r has index 0
  if (a.listed(0)) {
    bool ok = std::abs(a.amplitude(0, a.quiescent()) - Complex(1.0)) <= tol.zero_abs;
    for (StateIndex y = 1; y < k; ++y) ok = ok && std::abs(a.amplitude(0, y)) <= tol.zero_abs;
    if (!ok) {
      report.violations.push_back(
          {ViolationKind::quiescent_rule,
           "the all-quiescent neighborhood must map to the quiescent state with amplitude 1"});
    }
  }
  return report;
}

Automaton normalize_neighborhood(const Automaton& a) {
  if (!a.neighborhood().simple()) {
    throw std::invalid_argument("normalize_neighborhood: neighborhood is not simple");
  }
  Neighborhood n;
  for (std::size_t i = 0; i < a.radius(); ++i) n.offsets.push_back(static_cast<int>(i));
  return Automaton(a.symbols(), std::move(n), a.table(), a.listed_words());
}

Automaton expand_to_simple(const Automaton& a) {
  const auto& n = a.neighborhood();
  if (!n.strictly_increasing()) {
    throw std::invalid_argument("expand_to_simple: neighborhood is not strictly increasing");
  }
  if (n.simple()) return a;

  const std::size_t k = a.alphabet_size();
  const auto span = static_cast<std::size_t>(n.span());
  Neighborhood wide;
  for (int o = n.first(); o <= n.last(); ++o) wide.offsets.push_back(o);

  const std::size_t words = a.pow_k(span);
  std::vector<Complex> table(words * k);
  std::vector<bool> listed(words);
  Word inner(a.radius());
  for (std::size_t w = 0; w < words; ++w) {
    const Word window = a.decode_word(w, span);
    for (std::size_t j = 0; j < a.radius(); ++j) {
      inner[j] = window[static_cast<std::size_t>(n.offsets[j] - n.first())];
    }
    const std::size_t src = a.word_index(inner);
    listed[w] = a.listed(src);
    for (StateIndex y = 0; y < k; ++y) table[w * k + y] = a.amplitude(src, y);
  }
  return Automaton(a.symbols(), std::move(wide), std::move(table), std::move(listed));
}

Automaton mirror(const Automaton& a) {
  const std::size_t k = a.alphabet_size();
  Neighborhood n;
  for (auto it = a.neighborhood().offsets.rbegin(); it != a.neighborhood().offsets.rend(); ++it) {
    n.offsets.push_back(-*it);
  }
  const std::size_t words = a.pow_k(a.radius());
  std::vector<Complex> table(words * k);
  std::vector<bool> listed(words);
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t src = a.reverse_index(w, a.radius());
    listed[w] = a.listed(src);
    for (StateIndex y = 0; y < k; ++y) table[w * k + y] = a.amplitude(src, y);
  }
  return Automaton(a.symbols(), std::move(n), std::move(table), std::move(listed));
}

}  // namespace lqca
