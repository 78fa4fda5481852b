#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lqca/automaton.hpp"

namespace lqca {

/// On-disk form of an automaton:
///
///   {
///     "states": ["a", "b"],
///     "quiescent": "a",
///     "neighborhood": [0, 1],
///     "rules": { "ab": { "a": [0.7071, 0], "b": [0.7071, 0] }, ... }
///   }
///
/// Rule keys are words of |neighborhood| symbols, written back to back when
/// every symbol is one character and separated by spaces otherwise.
/// Amplitudes are [re, im] pairs (a bare number is read as real); omitted
/// entries are zero.
struct AutomatonDocument {
  std::vector<std::string> states;
  std::string quiescent;
  std::vector<int> neighborhood;
  std::map<std::vector<std::string>, std::map<std::string, Complex>> rules;

  bool operator==(const AutomatonDocument&) const = default;
};

/// Throws InputError with a line/column (syntax) or JSON-pointer (content)
/// location.
AutomatonDocument parse_document(std::string_view text);
AutomatonDocument load_document(const std::filesystem::path& path);
std::string serialize(const AutomatonDocument& doc);

Automaton to_automaton(const AutomatonDocument& doc);
/// Lists every word the automaton marks as listed, omitting zero amplitudes.
AutomatonDocument to_document(const Automaton& a);

/// Splits a word written in document notation into symbols: on whitespace
/// or commas when present, else per character when every symbol is one
/// character, else as a single symbol.
std::vector<std::string> split_word(std::string_view text, const std::vector<std::string>& states);

}  // namespace lqca
