#pragma once

// Random DSL inputs: raw bytes, grammar-token soup, and mutations of valid
// documents. Used by the unit tests and by the acceptance run.

#include "loopspace/dsl.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace fuzz {

inline const std::vector<std::string>& seeds() {
  static const std::vector<std::string> s{
      "model m { generator u2:2; generator u3:3; d u3 = u2^2; }",
      "model signs { generator x: 3; generator y: 3; generator z: 2; generator w: 5;\n"
      "  d w = 1/2*z^3 - x*y + y*x; }",
      "spaceform { n = 3; r = 8; ord = 2; }",
      "bott { disc = 1/4, 3/4; arcs = 1, 0; points = 0, 0; }",
      "# comment\nbott {\n  disc = ;\n  arcs = 2;\n  points = ;\n}\n",
  };
  return s;
}

inline std::string random_bytes(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 80), byte(0, 255);
  std::string out(static_cast<std::size_t>(len(rng)), '\0');
  for (auto& c : out) c = static_cast<char>(byte(rng));
  return out;
}

inline std::string token_soup(std::mt19937_64& rng) {
  static const std::array<const char*, 38> tokens{
      "model", "generator", "d", "spaceform", "bott", "disc", "arcs", "points", "n", "r", "ord", "{", "}",
      ";", ":", "=", "+", "-", "*", "^", "/", ",", "0", "1", "2", "3", "7", "99999999999", "1/4", "3/4",
      "u2", "u3", "x", "\n", " ", "#c\n", "//c\n", "-1"};
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  std::string out;
  for (int i = len(rng); i > 0; --i) out += tokens[pick(rng)], out += ' ';
  return out;
}

inline std::string mutate(std::mt19937_64& rng, std::string s) {
  std::uniform_int_distribution<int> edits(1, 4), kind(0, 2);
  static const std::string alphabet = "{};:=+-*^/,0123456789abdu \n#\t\"\x80\xff";
  std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
  for (int e = edits(rng); e > 0; --e) {
    std::uniform_int_distribution<std::size_t> pos(0, s.size());
    const std::size_t p = pos(rng);
    switch (kind(rng)) {
      case 0: s.insert(s.begin() + static_cast<std::ptrdiff_t>(p), alphabet[ch(rng)]); break;
      case 1: if (p < s.size()) s.erase(p, 1); break;
      default: if (p < s.size()) s[p] = alphabet[ch(rng)]; break;
    }
  }
  return s;
}

inline std::string random_input(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_int_distribution<std::size_t> seed(0, seeds().size() - 1);
  switch (mode(rng)) {
    case 0: return random_bytes(rng);
    case 1: return token_soup(rng);
    default: return mutate(rng, seeds()[seed(rng)]);
  }
}

/// True when every diagnostic points at an existing line and at most one
/// column past its end.
inline bool located(const std::string& text, const loopspace::dsl::Diagnostic& d) {
  std::vector<std::size_t> lengths{0};
  for (char c : text) {
    if (c == '\n') lengths.push_back(0);
    else ++lengths.back();
  }
  if (d.location.line < 1 || static_cast<std::size_t>(d.location.line) > lengths.size()) return false;
  const auto len = lengths[static_cast<std::size_t>(d.location.line - 1)];
  return d.location.column >= 1 && static_cast<std::size_t>(d.location.column) <= len + 1;
}

struct Outcome {
  bool threw = false;
  bool all_located = true;
  bool errors_without_value = true;  // a document with errors yields no value
};

inline Outcome run_one(const std::string& text) {
  Outcome o;
  try {
    const auto result = loopspace::dsl::parse(loopspace::dsl::SourceSpec::inline_text(text));
    for (const auto& d : result.diagnostics) o.all_located = o.all_located && located(text, d) && !d.message.empty();
    o.errors_without_value = !(result.has_errors() && result.ok());
    if (!result.ok() && result.diagnostics.empty()) o.all_located = false;
  } catch (...) {
    o.threw = true;
  }
  return o;
}

}  // namespace fuzz
