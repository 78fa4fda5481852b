#include "lqca/check.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "lqca/document.hpp"
#include "lqca/transfer.hpp"

namespace lqca {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::unitary: return "UNITARY";
    case Verdict::not_unitary: return "NOT_UNITARY";
    case Verdict::not_well_formed: return "NOT_WELL_FORMED";
    case Verdict::invalid_input: return "INVALID_INPUT";
  }
  return "INVALID_INPUT";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::unitary: return 0;
    case Verdict::not_unitary: return 1;
    case Verdict::not_well_formed: return 2;
    case Verdict::invalid_input: return 3;
  }
  return 3;
}

namespace {

class StageTimer {
 public:
  StageTimer(VerdictReport& report, std::string name)
      : report_(report), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.timings_ms[name_] += std::chrono::duration<double, std::milli>(elapsed).count();
  }

 private:
  VerdictReport& report_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string interval_text(Interval w) {
  return "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
}

// r = 1: every cell evolves by the same k x k matrix U(y, x) = [delta(x)](y),
// so the global operator is unitary iff U is.
void decide_single_cell(const Automaton& a, const Tolerance& tol, VerdictReport& report) {
  const std::size_t k = a.alphabet_size();
  double worst = 0.0;
  for (StateIndex x = 0; x < k; ++x) {
    for (StateIndex x2 = 0; x2 < k; ++x2) {
      Complex g{};
      for (StateIndex y = 0; y < k; ++y) g += std::conj(a.amplitude(x, y)) * a.amplitude(x2, y);
      worst = std::max(worst, std::abs(g - (x == x2 ? Complex(1.0) : Complex{})));
    }
  }
  if (worst <= tol.membership_rel) {
    report.verdict = Verdict::unitary;
    report.well_formedness = "implied (local matrix is unitary)";
  } else {
    report.verdict = Verdict::not_well_formed;
    report.diagnostics.push_back("local transition matrix is not unitary (max |U*U - I| = " +
                                 format_number(worst) + ")");
  }
}

}  // namespace

VerdictReport check(const Automaton& input, const CheckOptions& options) {
  VerdictReport report;
  const Tolerance& tol = options.tol;
  report.symbols = input.symbols();
  report.neighborhood = input.neighborhood().offsets;
  report.radius = input.radius();
  report.tolerance = tol.membership_rel;
  if (input.neighborhood().strictly_increasing()) {
    report.span = input.neighborhood().span();
    report.expansion_factor = input.expansion_factor();
  }

  {
    StageTimer t(report, "validate");
    const ValidationReport v = validate(input, tol);
    report.notes = v.notes;
    for (const auto& violation : v.violations) {
      report.diagnostics.push_back(std::string(to_string(violation.kind)) + ": " + violation.message);
    }
    if (!v.ok()) {
      report.verdict = Verdict::invalid_input;
      return report;
    }
  }
  const Automaton expanded = expand_to_simple(input);
  report.expanded = !input.neighborhood().simple();

  if (options.oracle_window) {
    StageTimer t(report, "oracle");
    if (*options.oracle_window == 0) {
      report.diagnostics.push_back("oracle window must contain at least one cell");
      report.verdict = Verdict::invalid_input;
      return report;
    }
    const Interval window{0, static_cast<CellIndex>(*options.oracle_window) - 1};
    try {
      report.gram = truncated_column_gram(expanded, window, options.limits);
    } catch (const OracleScaleError& e) {
      report.diagnostics.push_back(e.what());
      report.verdict = Verdict::invalid_input;
      return report;
    }
    if (report.gram->clean(tol.membership_rel)) {
      report.well_formedness = "partial check PASS on window " + interval_text(window);
    } else {
      // a finite-window Gram defect is already a certificate
      report.well_formedness = "partial check FAIL on window " + interval_text(window);
      report.diagnostics.push_back("columns of the evolution operator are not orthonormal");
      report.verdict = Verdict::not_well_formed;
      return report;
    }
  }

  const Automaton a = normalize_neighborhood(expanded);
  if (a.alphabet_size() == 1) {
    report.notes.push_back("single-state alphabet: the evolution operator is the identity");
    report.verdict = Verdict::unitary;
    return report;
  }
  if (a.radius() == 1) {
    decide_single_cell(a, tol, report);
    return report;
  }

  for (std::size_t w = 0; w < a.border_dim(); ++w) {
    report.border_words.push_back(a.spell(a.decode_word(w, a.radius() - 1)));
  }
  {
    StageTimer t(report, "borders");
    report.borders = border_vectors(a, tol);
  }
  const BorderVectors& b = *report.borders;
  if (b.any_infinite) {
    for (const auto& c : b.infinite_components) {
      report.diagnostics.push_back("infinite border component " + c);
    }
    report.verdict = Verdict::not_well_formed;
    return report;
  }
  report.inner_lr = b.l.dot(b.r);
  if (std::abs(*report.inner_lr - 1.0) > tol.membership_rel) {
    report.diagnostics.push_back("<l|r> = " + format_number(*report.inner_lr) + " differs from 1");
    report.verdict = Verdict::not_well_formed;
    return report;
  }

  {
    StageTimer t(report, "closure");
    const auto ops = build_transfer_operators(a);
    report.closure = decide_closed(b.l, b.r, ops, tol, options.update);
  }
  if (report.closure->closed) {
    report.verdict = Verdict::unitary;
  } else {
    report.verdict = Verdict::not_unitary;
    std::vector<std::string> symbols;
    for (StateIndex s : *report.closure->witness_word) symbols.push_back(a.symbol(s));
    report.witness = std::move(symbols);
    report.witness_spelled = a.spell(*report.closure->witness_word);
  }
  return report;
}

VerdictReport check_document_text(std::string_view text, const CheckOptions& options) {
  try {
    return check(to_automaton(parse_document(text)), options);
  } catch (const InputError& e) {
    VerdictReport report;
    report.diagnostics.push_back(e.what());
    return report;
  }
}

VerdictReport check_file(const std::filesystem::path& path, const CheckOptions& options) {
  try {
    return check(to_automaton(load_document(path)), options);
  } catch (const InputError& e) {
    VerdictReport report;
    report.diagnostics.push_back(e.what());
    return report;
  }
}

namespace {

nlohmann::ordered_json border_json(const std::vector<std::string>& words, const Eigen::VectorXd& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const double x = v(static_cast<Eigen::Index>(i));
    if (std::isinf(x)) {
      out[words[i]] = "inf";
    } else {
      out[words[i]] = x;
    }
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const VerdictReport& report) {
  nlohmann::ordered_json out;
  out["verdict"] = std::string(to_string(report.verdict));
  out["exit_code"] = exit_code(report.verdict);
  out["tolerance"] = report.tolerance;
  if (!report.symbols.empty()) {
    out["automaton"] = {{"states", report.symbols},
                        {"neighborhood", report.neighborhood},
                        {"radius", report.radius},
                        {"span", report.span},
                        {"expansion_factor", report.expansion_factor},
                        {"expanded", report.expanded}};
  }
  if (report.borders) {
    out["border_vectors"] = {{"l", border_json(report.border_words, report.borders->l)},
                             {"r", border_json(report.border_words, report.borders->r)},
                             {"any_infinite", report.borders->any_infinite}};
  }
  if (report.inner_lr) out["inner_lr"] = *report.inner_lr;
  if (report.closure) {
    out["closure"] = {{"closed", report.closure->closed},
                      {"final_dimension", report.closure->final_dimension},
                      {"iterations", report.closure->iterations}};
  }
  if (report.witness) {
    out["witness"] = report.witness_spelled;
    out["witness_symbols"] = *report.witness;
  } else {
    out["witness"] = nullptr;
  }
  out["well_formedness"] = report.well_formedness;
  if (report.gram) {
    const GramReport& g = *report.gram;
    out["gram"] = {{"window", {g.window.lo, g.window.hi}},
                   {"columns", g.columns},
                   {"max_norm_deviation", g.max_norm_deviation},
                   {"max_offdiag", g.max_offdiag}};
  }
  out["diagnostics"] = report.diagnostics;
  out["notes"] = report.notes;
  return out;
}

std::string to_text(const VerdictReport& report) {
  std::ostringstream os;
  os << "verdict: " << to_string(report.verdict) << "\n";
  if (!report.symbols.empty()) {
    os << "automaton: " << report.symbols.size() << " states, neighborhood (";
    for (std::size_t i = 0; i < report.neighborhood.size(); ++i) {
      os << (i ? "," : "") << report.neighborhood[i];
    }
    os << "), r=" << report.radius << ", s=" << report.span
       << ", expansion factor e=" << format_number(report.expansion_factor);
    if (report.expanded) os << " (expanded to a contiguous neighborhood)";
    os << "\n";
  }
  if (report.borders) {
    for (const auto& [name, v] : {std::pair{"l", &report.borders->l}, std::pair{"r", &report.borders->r}}) {
      os << name << ":";
      for (std::size_t i = 0; i < report.border_words.size(); ++i) {
        os << " " << report.border_words[i] << "=" << format_number((*v)(static_cast<Eigen::Index>(i)));
      }
      os << "\n";
    }
  }
  if (report.inner_lr) os << "<l|r> = " << format_number(*report.inner_lr) << "\n";
  if (report.closure) {
    os << "closure: " << (report.closure->closed ? "closed" : "not closed") << ", dimension "
       << report.closure->final_dimension << ", " << report.closure->iterations << " iterations\n";
  }
  if (report.witness) os << "witness: \"" << report.witness_spelled << "\"\n";
  os << "well-formedness: " << report.well_formedness << "\n";
  if (report.gram) {
    os << "gram: " << report.gram->columns << " columns, max norm deviation "
       << format_number(report.gram->max_norm_deviation) << ", max off-diagonal "
       << format_number(report.gram->max_offdiag) << "\n";
  }
  for (const auto& d : report.diagnostics) os << "error: " << d << "\n";
  for (const auto& n : report.notes) os << "note: " << n << "\n";
  if (!report.timings_ms.empty()) {
    os << "timings:";
    for (const auto& [stage, ms] : report.timings_ms) os << " " << stage << "=" << format_number(ms) << "ms";
    os << "\n";
  }
  return os.str();
}

std::string render_configuration(const Automaton& a, const Configuration& c) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < c.cells().size(); ++i) {
    if (c.cells()[i] == a.quiescent()) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(c.start() + static_cast<CellIndex>(i)) + ":" + a.symbol(c.cells()[i]);
  }
  return out + "}";
}

Configuration parse_configuration(const Automaton& a, std::string_view text) {
  std::map<CellIndex, StateIndex> cells;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
      throw InputError("configuration entry '" + token + "' must look like index:state");
    }
    CellIndex index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(token.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InputError("bad cell index in '" + token + "'");
    }
    if (cells.contains(index)) throw InputError("cell " + std::to_string(index) + " given twice");
    cells[index] = a.state_index(token.substr(colon + 1));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '{' || ch == '}') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  if (cells.empty()) return {};
  const CellIndex lo = cells.begin()->first;
  std::vector<StateIndex> row(static_cast<std::size_t>(cells.rbegin()->first - lo + 1), 0);
  for (const auto& [i, s] : cells) row[static_cast<std::size_t>(i - lo)] = s;
  return Configuration(lo, std::move(row));
}

}  // namespace lqca
