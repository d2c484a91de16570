#pragma once

// Text format for DGA models, space-form data and Bott functions:
//
//   model m { generator u2: 2; generator u3: 3; d u3 = u2^2; }
//   spaceform { n = 3; r = 8; ord = 2; }
//   bott { disc = 1/4, 3/4; arcs = 1, 0; points = 0, 0; }
//
// Comments run from '#' or "//" to the end of the line.

#include "loopspace/bott.hpp"
#include "loopspace/gca.hpp"
#include "loopspace/spaceform.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace loopspace::dsl {

enum class SourceKind { dga, spaceform, bott };

std::string to_string(SourceKind kind);

struct SourceSpec {
  std::string text;
  std::string origin = "<inline>";
  /// When set, a document of another kind is rejected.
  std::optional<SourceKind> expected;

  static SourceSpec inline_text(std::string text, std::optional<SourceKind> expected = std::nullopt);
  /// Throws std::runtime_error when the file cannot be read.
  static SourceSpec from_file(const std::string& path, std::optional<SourceKind> expected = std::nullopt);
};

struct SourceLocation {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  SourceLocation location;
  std::string message;

  /// "origin:line:col: error: message"
  std::string format(const std::string& origin) const;
};

using ParsedValue = std::variant<DgaModel, SpaceFormSpec, BottFunction>;

struct ParseResult {
  std::optional<ParsedValue> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  bool has_errors() const;
};

/// Never throws on malformed input; a document with any error yields no value.
ParseResult parse(const SourceSpec& source);

std::string print(const DgaModel& model);
std::string print(const SpaceFormSpec& spec);
std::string print(const BottFunction& f);
std::string print(const ParsedValue& value);
std::string print_poly(const PolySpec& poly);

}  // namespace loopspace::dsl
