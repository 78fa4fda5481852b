#include "lqca/document.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lqca {

using nlohmann::json;

namespace {

bool single_char_states(const std::vector<std::string>& states) {
  return std::all_of(states.begin(), states.end(), [](const std::string& s) { return s.size() == 1; });
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

Complex parse_amplitude(const json& v, const std::string& where) {
  double re = 0.0;
  double im = 0.0;
  if (v.is_number()) {
    re = v.get<double>();
  } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    re = v[0].get<double>();
    im = v[1].get<double>();
  } else {
    fail(where, "amplitude must be [re, im] or a number");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) fail(where, "amplitude must be finite");
  return {re, im};
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

std::vector<std::string> split_word(std::string_view text, const std::vector<std::string>& states) {
  std::vector<std::string> out;
  if (text.find_first_of(" \t\n,") != std::string_view::npos) {
    std::string token;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == ',') {
        if (!token.empty()) out.push_back(std::move(token));
        token.clear();
      } else {
        token += c;
      }
    }
    if (!token.empty()) out.push_back(std::move(token));
  } else if (single_char_states(states)) {
    for (char c : text) out.emplace_back(1, c);
  } else if (!text.empty()) {
    out.emplace_back(text);
  }
  return out;
}

AutomatonDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  if (!root.is_object()) fail("/", "document must be a JSON object");
  for (const char* key : {"states", "quiescent", "neighborhood", "rules"}) {
    if (!root.contains(key)) fail("/", std::string("missing field '") + key + "'");
  }

  AutomatonDocument doc;
  const json& states = root["states"];
  if (!states.is_array() || states.empty()) fail("/states", "must be a non-empty array");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "/states/" + std::to_string(i);
    if (!states[i].is_string()) fail(where, "state symbols must be strings");
    auto s = states[i].get<std::string>();
    if (s.empty() || s.find_first_of(" \t\n,") != std::string::npos) {
      fail(where, "state symbols must be non-empty and free of whitespace and commas");
    }
    if (!seen.insert(s).second) fail(where, "duplicate state '" + s + "'");
    doc.states.push_back(std::move(s));
  }

  if (!root["quiescent"].is_string()) fail("/quiescent", "must be a string");
  doc.quiescent = root["quiescent"].get<std::string>();
  if (!seen.contains(doc.quiescent)) fail("/quiescent", "'" + doc.quiescent + "' is not a state");

  const json& nb = root["neighborhood"];
  if (!nb.is_array() || nb.empty()) fail("/neighborhood", "must be a non-empty array");
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (!nb[i].is_number_integer()) fail("/neighborhood/" + std::to_string(i), "must be an integer");
    doc.neighborhood.push_back(nb[i].get<int>());
  }

  const json& rules = root["rules"];
  if (!rules.is_object()) fail("/rules", "must be an object");
  for (const auto& [key, row] : rules.items()) {
    const std::string where = "/rules/" + escape_pointer(key);
    std::vector<std::string> word = split_word(key, doc.states);
    if (word.size() != doc.neighborhood.size()) {
      fail(where, "word has " + std::to_string(word.size()) + " symbols, neighborhood has " +
                      std::to_string(doc.neighborhood.size()));
    }
    for (const auto& s : word) {
      if (!seen.contains(s)) fail(where, "unknown state '" + s + "'");
    }
    if (!row.is_object()) fail(where, "must map output states to amplitudes");
    if (doc.rules.contains(word)) fail(where, "duplicate rule for the same word");
    auto& out = doc.rules[word];
    for (const auto& [y, amp] : row.items()) {
      const std::string at = where + "/" + escape_pointer(y);
      if (!seen.contains(y)) fail(at, "unknown state '" + y + "'");
      out[y] = parse_amplitude(amp, at);
    }
  }
  return doc;
}

AutomatonDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string serialize(const AutomatonDocument& doc) {
  const bool compact = single_char_states(doc.states);
  nlohmann::ordered_json root;
  root["states"] = doc.states;
  root["quiescent"] = doc.quiescent;
  root["neighborhood"] = doc.neighborhood;
  json rules = json::object();
  for (const auto& [word, row] : doc.rules) {
    std::string key;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!compact && i > 0) key += ' ';
      key += word[i];
    }
    json out = json::object();
    for (const auto& [y, amp] : row) out[y] = {amp.real(), amp.imag()};
    rules[key] = std::move(out);
  }
  root["rules"] = std::move(rules);
  return root.dump(2) + "\n";
}

Automaton to_automaton(const AutomatonDocument& doc) {
  std::vector<std::string> symbols{doc.quiescent};
  for (const auto& s : doc.states) {
    if (s != doc.quiescent) symbols.push_back(s);
  }
  const std::size_t k = symbols.size();
  const std::size_t r = doc.neighborhood.size();
  std::size_t words = 1;
  for (std::size_t i = 0; i < r; ++i) words *= k;

  auto index_of = [&](const std::string& s) {
    return static_cast<StateIndex>(std::find(symbols.begin(), symbols.end(), s) - symbols.begin());
  };
  std::vector<Complex> table(words * k);
  std::vector<bool> listed(words, false);
  for (const auto& [word, row] : doc.rules) {
    std::size_t w = 0;
    for (const auto& s : word) w = w * k + index_of(s);
    listed[w] = true;
    for (const auto& [y, amp] : row) table[w * k + index_of(y)] = amp;
  }
  return Automaton(std::move(symbols), Neighborhood{doc.neighborhood}, std::move(table),
                   std::move(listed));
}

AutomatonDocument to_document(const Automaton& a) {
  AutomatonDocument doc;
  doc.states = a.symbols();
  doc.quiescent = a.symbol(a.quiescent());
  doc.neighborhood = a.neighborhood().offsets;
  const std::size_t words = a.pow_k(a.radius());
  for (std::size_t w = 0; w < words; ++w) {
    if (!a.listed(w)) continue;
    std::vector<std::string> word;
    for (StateIndex s : a.decode_word(w, a.radius())) word.push_back(a.symbol(s));
    auto& row = doc.rules[word];
    for (StateIndex y = 0; y < a.alphabet_size(); ++y) {
      const Complex amp = a.amplitude(w, y);
      if (amp != Complex{}) row[a.symbol(y)] = amp;
    }
  }
  return doc;
}

}  // namespace lqca
