#include "lqca/evolution.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace lqca {

Superposition Superposition::pure(Configuration c, Complex amplitude) {
  Superposition s;
  s.add(c, amplitude);
  return s;
}

void Superposition::add(const Configuration& c, Complex amplitude) {
  terms_[c] += amplitude;
}

Complex Superposition::amplitude(const Configuration& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Complex{} : it->second;
}

double Superposition::norm() const {
  double sum = 0.0;
  for (const auto& [c, amp] : terms_) sum += std::norm(amp);
  return std::sqrt(sum);
}

void Superposition::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& t) { return std::abs(t.second) <= threshold; });
}

Superposition& Superposition::operator+=(const Superposition& other) {
  for (const auto& [c, amp] : other.terms_) add(c, amp);
  return *this;
}

Superposition& Superposition::operator*=(Complex factor) {
  for (auto& [c, amp] : terms_) amp *= factor;
  return *this;
}

Interval reach(const Automaton& a, const Configuration& c) {
  if (c.quiescent()) return {};
  const Interval dom = c.idom();
  return {dom.lo - a.neighborhood().last(), dom.hi - a.neighborhood().first()};
}

namespace {

std::size_t neighborhood_word(const Automaton& a, const Configuration& c, CellIndex i) {
  std::size_t index = 0;
  for (int off : a.neighborhood().offsets) index = index * a.alphabet_size() + c.at(i + off);
  return index;
}

void check_window(const Automaton& a, Interval window, const OracleLimits& limits,
                  bool enumerates) {
  if (static_cast<std::size_t>(window.width()) > limits.max_window) {
    throw OracleScaleError("oracle window of " + std::to_string(window.width()) +
                           " cells exceeds the limit of " + std::to_string(limits.max_window));
  }
  if (!enumerates) return;
  double count = std::pow(static_cast<double>(a.alphabet_size()), static_cast<double>(window.width()));
  if (count > static_cast<double>(limits.max_configurations)) {
    throw OracleScaleError("oracle enumeration of " + std::to_string(static_cast<long long>(count)) +
                           " configurations exceeds the limit of " +
                           std::to_string(limits.max_configurations));
  }
}

// Visits (successor, amplitude) for every d with U(d, c) != 0.
template <class Visit>
void for_each_successor(const Automaton& a, const Configuration& c, const OracleLimits& limits,
                        Visit&& visit) {
  const Interval cells = reach(a, c);
  if (cells.empty()) {
    visit(Configuration{}, Complex(1.0));
    return;
  }
  check_window(a, cells, limits, false);

  const std::size_t k = a.alphabet_size();
  const auto width = static_cast<std::size_t>(cells.width());
  std::vector<std::vector<std::pair<StateIndex, Complex>>> local(width);
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t w = neighborhood_word(a, c, cells.lo + static_cast<CellIndex>(i));
    for (StateIndex y = 0; y < k; ++y) {
      Complex amp = a.amplitude(w, y);
      if (amp != Complex{}) local[i].emplace_back(y, amp);
    }
    if (local[i].empty()) return;
  }

  std::vector<StateIndex> out(width);
  auto descend = [&](auto&& self, std::size_t depth, Complex prefix) -> void {
    if (depth == width) {
      visit(Configuration(cells.lo, out), prefix);
      return;
    }
    for (const auto& [y, amp] : local[depth]) {
      out[depth] = y;
      self(self, depth + 1, prefix * amp);
    }
  };
  descend(descend, 0, Complex(1.0));
}

}  // namespace

Complex transition_amplitude(const Automaton& a, const Configuration& d, const Configuration& c) {
  const Interval cells = hull(reach(a, c), d.idom());
  Complex product = 1.0;
  for (CellIndex i = cells.lo; i <= cells.hi; ++i) {
    product *= a.amplitude(neighborhood_word(a, c, i), d.at(i));
    if (product == Complex{}) break;
  }
  return product;
}

Superposition step(const Automaton& a, const Superposition& u, const Tolerance& tol,
                   const OracleLimits& limits) {
  Superposition next;
  for (const auto& [c, amp] : u.terms()) {
    for_each_successor(a, c, limits, [&](const Configuration& d, Complex t) { next.add(d, amp * t); });
  }
  next.prune(tol.zero_abs);
  return next;
}

GramReport truncated_column_gram(const Automaton& a, Interval window, const OracleLimits& limits) {
  check_window(a, window, limits, true);
  GramReport report;
  report.window = window;

  std::vector<Configuration> sources;
  for_each_configuration(a.alphabet_size(), window,
                         [&](const Configuration& c) { sources.push_back(c); });
  report.columns = sources.size();

  // Invert the columns: successor -> (column, amplitude). Two columns can
  // only overlap through a shared successor.
  std::map<Configuration, std::vector<std::pair<std::size_t, Complex>>> rows;
  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    for_each_successor(a, sources[idx], limits, [&](const Configuration& d, Complex amp) {
      rows[d].emplace_back(idx, amp);
    });
  }

  std::map<std::pair<std::size_t, std::size_t>, Complex> gram;
  std::vector<double> diag(sources.size(), 0.0);
  for (const auto& [d, entries] : rows) {
    for (std::size_t x = 0; x < entries.size(); ++x) {
      diag[entries[x].first] += std::norm(entries[x].second);
      for (std::size_t y = x + 1; y < entries.size(); ++y) {
        auto key = std::minmax(entries[x].first, entries[y].first);
        Complex v = std::conj(entries[x].second) * entries[y].second;
        if (key.first != entries[x].first) v = std::conj(v);
        gram[key] += v;
      }
    }
  }

  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    const double dev = std::abs(diag[idx] - 1.0);
    if (dev > report.max_norm_deviation) {
      report.max_norm_deviation = dev;
      report.worst_norm = sources[idx];
    }
  }
  for (const auto& [key, v] : gram) {
    if (std::abs(v) > report.max_offdiag) {
      report.max_offdiag = std::abs(v);
      report.worst_pair = {sources[key.first], sources[key.second]};
    }
  }
  return report;
}

double truncated_row_norm(const Automaton& a, const Configuration& d, Interval window,
                          const OracleLimits& limits) {
  if (!window.contains(d.idom())) {
    throw std::invalid_argument("truncated_row_norm: idom(d) must lie inside the window");
  }
  check_window(a, window, limits, true);
  double sum = 0.0;
  for_each_configuration(a.alphabet_size(), window, [&](const Configuration& c) {
    sum += std::norm(transition_amplitude(a, d, c));
  });
  return sum;
}

}  // namespace lqca
