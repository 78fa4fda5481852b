// lqca: decide unitarity of linear quantum cellular automata.
//
//   lqca check FILE [--window W]      verdict, exit 0/1/2/3
//   lqca borders FILE                 left/right border vectors
//   lqca oracle FILE [--window W]     truncated column-Gram evidence
//   lqca rownorm FILE --word B        squared norm of a row of U_A
//   lqca step FILE --config C [--steps T]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lqca/check.hpp"
#include "lqca/document.hpp"
#include "lqca/transfer.hpp"

namespace {

using lqca::Automaton;
using nlohmann::ordered_json;

struct GlobalOptions {
  double tolerance = 1e-8;
  std::string format = "text";
  std::size_t oracle_limit = lqca::OracleLimits{}.max_window;

  bool json() const { return format == "json"; }
  lqca::Tolerance tol() const { return lqca::Tolerance::from_membership(tolerance); }
  lqca::OracleLimits limits() const {
    lqca::OracleLimits l;
    l.max_window = oracle_limit;
    return l;
  }
};

std::string num(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int fail_input(const GlobalOptions& g, const std::string& message) {
  if (g.json()) {
    ordered_json out;
    out["verdict"] = "INVALID_INPUT";
    out["exit_code"] = 3;
    out["diagnostics"] = {message};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return 3;
}

// Parse, validate, expand and normalize; throws InputError on any defect.
Automaton load_normalized(const std::string& path, const lqca::Tolerance& tol) {
  const Automaton raw = lqca::to_automaton(lqca::load_document(path));
  const auto report = lqca::validate(raw, tol);
  if (!report.ok()) {
    throw lqca::InputError(std::string(lqca::to_string(report.violations.front().kind)) + ": " +
                           report.violations.front().message);
  }
  return lqca::normalize_neighborhood(lqca::expand_to_simple(raw));
}

int run_check(const GlobalOptions& g, const std::string& path, std::size_t window) {
  lqca::CheckOptions options;
  options.tol = g.tol();
  options.limits = g.limits();
  if (window > 0) options.oracle_window = window;
  const lqca::VerdictReport report = lqca::check_file(path, options);
  if (g.json()) {
    std::cout << lqca::to_json(report).dump(2) << "\n";
  } else {
    std::cout << lqca::to_text(report);
  }
  return lqca::exit_code(report.verdict);
}

int run_borders(const GlobalOptions& g, const std::string& path) {
  const auto tol = g.tol();
  const Automaton a = load_normalized(path, tol);
  if (a.radius() < 2 || a.alphabet_size() < 2) {
    return fail_input(g, "border vectors need at least two states and a neighborhood of size two");
  }
  const lqca::BorderVectors b = lqca::border_vectors(a, tol);
  std::vector<std::string> words;
  for (std::size_t w = 0; w < a.border_dim(); ++w) words.push_back(a.spell(a.decode_word(w, a.radius() - 1)));

  if (g.json()) {
    ordered_json out;
    for (const auto& [name, v] : {std::pair{"l", &b.l}, std::pair{"r", &b.r}}) {
      ordered_json side = ordered_json::object();
      for (std::size_t i = 0; i < words.size(); ++i) {
        const double x = (*v)(static_cast<Eigen::Index>(i));
        if (std::isinf(x)) side[words[i]] = "inf";
        else side[words[i]] = x;
      }
      out[name] = side;
    }
    out["any_infinite"] = b.any_infinite;
    out["inner_lr"] = b.any_infinite ? ordered_json("inf") : ordered_json(b.l.dot(b.r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : {std::pair{"l", &b.l}, std::pair{"r", &b.r}}) {
      std::cout << name << ":";
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::cout << " " << words[i] << "=" << num((*v)(static_cast<Eigen::Index>(i)));
      }
      std::cout << "\n";
    }
    for (const auto& c : b.infinite_components) std::cout << "infinite: " << c << "\n";
  }
  return b.any_infinite ? 2 : 0;
}

int run_oracle(const GlobalOptions& g, const std::string& path, std::size_t width) {
  const auto tol = g.tol();
  const Automaton raw = lqca::to_automaton(lqca::load_document(path));
  const auto validation = lqca::validate(raw, tol);
  if (!raw.neighborhood().strictly_increasing()) {
    return fail_input(g, "neighborhood offsets must be strictly increasing");
  }
  if (width == 0) return fail_input(g, "window must contain at least one cell");
  const lqca::Interval window{0, static_cast<lqca::CellIndex>(width) - 1};
  lqca::GramReport report;
  try {
    report = lqca::truncated_column_gram(raw, window, g.limits());
  } catch (const lqca::OracleScaleError& e) {
    return fail_input(g, e.what());
  }
  const bool pass = report.clean(tol.membership_rel);
  if (g.json()) {
    ordered_json out;
    out["result"] = pass ? "PASS" : "FAIL";
    out["check"] = "partial";
    out["window"] = {window.lo, window.hi};
    out["columns"] = report.columns;
    out["max_norm_deviation"] = report.max_norm_deviation;
    out["max_offdiag"] = report.max_offdiag;
    out["worst_norm"] = lqca::render_configuration(raw, report.worst_norm);
    out["worst_pair"] = {lqca::render_configuration(raw, report.worst_pair.first),
                         lqca::render_configuration(raw, report.worst_pair.second)};
    std::vector<std::string> warnings;
    for (const auto& v : validation.violations) warnings.push_back(v.message);
    out["validation"] = warnings;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& v : validation.violations) std::cout << "warning: " << v.message << "\n";
    std::cout << "column Gram on window [" << window.lo << "," << window.hi << "] (partial check), "
              << report.columns << " columns\n"
              << "max | ||col||^2 - 1 | = " << num(report.max_norm_deviation) << " at "
              << lqca::render_configuration(raw, report.worst_norm) << "\n"
              << "max |<col, col'>|     = " << num(report.max_offdiag) << " at "
              << lqca::render_configuration(raw, report.worst_pair.first) << " / "
              << lqca::render_configuration(raw, report.worst_pair.second) << "\n"
              << (pass ? "PASS" : "FAIL") << " (tolerance " << num(tol.membership_rel) << ")\n";
  }
  return pass ? 0 : 2;
}

int run_rownorm(const GlobalOptions& g, const std::string& path, const std::string& word_text) {
  const auto tol = g.tol();
  const Automaton a = load_normalized(path, tol);
  if (a.radius() < 2 || a.alphabet_size() < 2) {
    return fail_input(g, "row norms via border vectors need a neighborhood of size two");
  }
  lqca::Word word;
  for (const auto& s : lqca::split_word(word_text, a.symbols())) word.push_back(a.state_index(s));

  const lqca::BorderVectors b = lqca::border_vectors(a, tol);
  const auto ops = lqca::build_transfer_operators(a);
  const double exact = b.any_infinite ? INFINITY : lqca::apply_word(ops, word, b.l).dot(b.r);

  // brute-force lower bound: d spells the word on cells [0, |b| - 1]
  const lqca::Configuration d(0, word);
  std::optional<double> bound;
  lqca::Interval window;
  const double per_cell = std::log2(static_cast<double>(a.alphabet_size()));
  const auto budget = std::min<std::size_t>(g.oracle_limit, static_cast<std::size_t>(18.0 / per_cell));
  const auto needed = static_cast<std::size_t>(word.size() + a.radius() - 1);
  if (needed <= budget) {
    const auto extra = static_cast<lqca::CellIndex>(budget - needed);
    window = {-(extra - extra / 2), static_cast<lqca::CellIndex>(needed) - 1 + extra / 2};
    bound = lqca::truncated_row_norm(a, d, window, g.limits());
  }

  if (g.json()) {
    ordered_json out;
    out["word"] = a.spell(word);
    out["row_norm_squared"] = std::isinf(exact) ? ordered_json("inf") : ordered_json(exact);
    if (bound) {
      out["truncated_lower_bound"] = *bound;
      out["window"] = {window.lo, window.hi};
    } else {
      out["truncated_lower_bound"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "<M_b l|r> = " << num(exact) << "\n";
    if (bound) {
      std::cout << "brute-force lower bound on window [" << window.lo << "," << window.hi
                << "] = " << num(*bound) << "\n";
    } else {
      std::cout << "brute-force lower bound: word too long for the oracle window\n";
    }
  }
  return 0;
}

int run_step(const GlobalOptions& g, const std::string& path, const std::string& config,
             std::size_t steps) {
  const auto tol = g.tol();
  const Automaton a = lqca::to_automaton(lqca::load_document(path));
  const auto validation = lqca::validate(a, tol);
  if (!validation.ok()) return fail_input(g, validation.violations.front().message);

  lqca::Superposition u = lqca::Superposition::pure(lqca::parse_configuration(a, config));
  try {
    for (std::size_t t = 0; t < steps; ++t) u = lqca::step(a, u, tol, g.limits());
  } catch (const lqca::OracleScaleError& e) {
    return fail_input(g, e.what());
  }

  std::vector<std::pair<lqca::Configuration, lqca::Complex>> terms(u.terms().begin(), u.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return std::abs(x.second) > std::abs(y.second); });
  if (g.json()) {
    ordered_json out;
    out["steps"] = steps;
    out["norm"] = u.norm();
    ordered_json list = ordered_json::array();
    for (const auto& [c, amp] : terms) {
      list.push_back({{"configuration", lqca::render_configuration(a, c)},
                      {"amplitude", {amp.real(), amp.imag()}}});
    }
    out["terms"] = list;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [c, amp] : terms) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%+.9f%+.9fi  |%.9f|  ", amp.real(), amp.imag(), std::abs(amp));
      std::cout << buf << lqca::render_configuration(a, c) << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "norm %.6f\n", u.norm());
    std::cout << terms.size() << " terms, " << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitarity checker for linear quantum cellular automata"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--tolerance", g.tolerance, "membership tolerance; zero and star thresholds scale with it")
      ->envname("LQCA_TOLERANCE")
      ->check(CLI::Range(1e-15, 0.5));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--oracle-limit", g.oracle_limit, "widest cell window for brute-force oracles")
      ->check(CLI::Range(1, 64));

  std::string path;
  std::size_t window = 0;
  std::size_t oracle_window = 4;
  std::string word;
  std::string config;
  std::size_t steps = 1;

  auto* check = app.add_subcommand("check", "decide whether the automaton is unitary");
  check->add_option("file", path, "automaton JSON document")->required();
  check->add_option("--window", window, "attach column-Gram evidence on cells [0, W-1]");

  auto* borders = app.add_subcommand("borders", "print the border vectors l and r");
  borders->add_option("file", path)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force column-Gram check on a finite window");
  oracle->add_option("file", path)->required();
  oracle->add_option("--window", oracle_window, "window width in cells")->capture_default_str();

  auto* rownorm = app.add_subcommand("rownorm", "squared norm of the row indexed by a word");
  rownorm->add_option("file", path)->required();
  rownorm->add_option("--word", word, "non-quiescent part of the row configuration")->required();

  auto* stepcmd = app.add_subcommand("step", "evolve a pure configuration with the brute-force oracle");
  stepcmd->add_option("file", path)->required();
  stepcmd->add_option("--config", config, "cells as index:state pairs, e.g. \"-1:b,0:b\"")->required();
  stepcmd->add_option("--steps", steps, "number of time steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*check) return run_check(g, path, window);
    if (*borders) return run_borders(g, path);
    if (*oracle) return run_oracle(g, path, oracle_window);
    if (*rownorm) return run_rownorm(g, path, word);
    if (*stepcmd) return run_step(g, path, config, steps);
  } catch (const lqca::InputError& e) {
    return fail_input(g, e.what());
  } catch (const lqca::OracleScaleError& e) {
    return fail_input(g, e.what());
  } catch (const std::exception& e) {
    return fail_input(g, e.what());
  }
  return 3;
}
