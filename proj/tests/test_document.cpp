#include <string>

#include "doctest.h"
#include "lqca/document.hpp"
#include "test_support.hpp"

using namespace lqca;
using namespace lqca::testing;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trip through serialize") {
  for (const char* name : {"qflip", "xor", "local_hadamard", "qflip_gap", "leaky"}) {
    CAPTURE(name);
    const AutomatonDocument doc = load_document(fixture_path(name));
    const std::string text = serialize(doc);
    CHECK(parse_document(text) == doc);
    CHECK(serialize(parse_document(text)) == text);
  }
}

TEST_CASE("document to automaton and back") {
  const Automaton a = fixture("qflip");
  const Automaton b = to_automaton(to_document(a));
  CHECK(a.table() == b.table());
  CHECK(a.symbols() == b.symbols());
  CHECK(a.neighborhood() == b.neighborhood());
}

TEST_CASE("quiescent state moves to index zero") {
  const std::string text = R"({"states":["x","q"],"quiescent":"q","neighborhood":[0,1],
    "rules":{"qq":{"q":1},"qx":{"x":1},"xq":{"q":1},"xx":{"x":[0,1]}}})";
  const Automaton a = to_automaton(parse_document(text));
  CHECK(a.symbols() == std::vector<std::string>{"q", "x"});
  CHECK(a.amplitude(3, 1) == Complex(0.0, 1.0));
}

TEST_CASE("multi-character symbols use separated words") {
  const std::string text = R"({"states":["q0","up"],"quiescent":"q0","neighborhood":[0,1],
    "rules":{"q0 q0":{"q0":1},"q0 up":{"up":1},"up q0":{"q0":1},"up up":{"up":1}}})";
  const AutomatonDocument doc = parse_document(text);
  CHECK(doc.rules.size() == 4);
  CHECK(serialize(doc).find("\"up q0\"") != std::string::npos);
  CHECK(split_word("up,q0", doc.states) == std::vector<std::string>{"up", "q0"});
}

TEST_CASE("errors carry a location") {
  CHECK(error_of("{\"states\": [}").find("syntax error") != std::string::npos);
  CHECK(error_of("[]").find("JSON object") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"a","neighborhood":[0]})").find("rules") !=
        std::string::npos);
  CHECK(error_of(R"({"states":["a","a"],"quiescent":"a","neighborhood":[0],"rules":{}})")
            .find("/states/1") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"b","neighborhood":[0],"rules":{}})")
            .find("/quiescent") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"a","neighborhood":[0,1],"rules":{"a":{"a":1}}})")
            .find("/rules/a") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"a","neighborhood":[0],"rules":{"a":{"z":1}}})")
            .find("/rules/a/z") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"a","neighborhood":[0],"rules":{"a":{"a":"x"}}})")
            .find("amplitude") != std::string::npos);
  CHECK(error_of(R"({"states":["a"],"quiescent":"a","neighborhood":[1.5],"rules":{}})")
            .find("/neighborhood/0") != std::string::npos);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), InputError);
}
