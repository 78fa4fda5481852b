#pragma once

// End-to-end unitarity decision: validation, neighborhood reductions,
// border vectors, and the affine closure test.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lqca/affine.hpp"
#include "lqca/automaton.hpp"
#include "lqca/border.hpp"
#include "lqca/evolution.hpp"

namespace lqca {

enum class Verdict { unitary, not_unitary, not_well_formed, invalid_input };

std::string_view to_string(Verdict v);
/// 0 unitary, 1 not unitary, 2 not well-formed, 3 invalid input.
int exit_code(Verdict v);

struct CheckOptions {
  Tolerance tol;
  OracleLimits limits;
  /// When set, the column-Gram oracle runs on cells [0, window - 1] and its
  /// result is attached to the report.
  std::optional<std::size_t> oracle_window;
  BasisUpdate update = BasisUpdate::householder;
};

struct VerdictReport {
  Verdict verdict = Verdict::invalid_input;
  std::vector<std::string> diagnostics;
  std::vector<std::string> notes;
  double tolerance = Tolerance{}.membership_rel;

  std::vector<std::string> symbols;
  std::vector<int> neighborhood;
  /// |N| and contiguous span s of the input neighborhood.
  std::size_t radius = 0;
  int span = 0;
  double expansion_factor = 1.0;
  bool expanded = false;

  std::vector<std::string> border_words;
  std::optional<BorderVectors> borders;
  std::optional<double> inner_lr;
  std::optional<ClosureVerdict> closure;
  std::optional<std::vector<std::string>> witness;
  std::string witness_spelled;

  std::string well_formedness = "assumed (oracle evidence only)";
  std::optional<GramReport> gram;

  /// Wall-clock milliseconds per stage; text output only.
  std::map<std::string, double> timings_ms;
};

VerdictReport check(const Automaton& a, const CheckOptions& options = {});
VerdictReport check_document_text(std::string_view text, const CheckOptions& options = {});
VerdictReport check_file(const std::filesystem::path& path, const CheckOptions& options = {});

/// Deterministic machine-readable report (no timings).
nlohmann::ordered_json to_json(const VerdictReport& report);
std::string to_text(const VerdictReport& report);

/// "{-1:b, 0:a}" style rendering; "{}" for the all-quiescent configuration.
std::string render_configuration(const Automaton& a, const Configuration& c);
/// Parses "index:state" pairs separated by commas or whitespace.
Configuration parse_configuration(const Automaton& a, std::string_view text);

}  // namespace lqca
