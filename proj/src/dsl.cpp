#include "loopspace/dsl.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace loopspace::dsl {

std::string to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::dga: return "dga";
    case SourceKind::spaceform: return "spaceform";
    case SourceKind::bott: return "bott";
  }
  return "unknown";
}

SourceSpec SourceSpec::inline_text(std::string text, std::optional<SourceKind> expected) {
  return SourceSpec{std::move(text), "<inline>", expected};
}

SourceSpec SourceSpec::from_file(const std::string& path, std::optional<SourceKind> expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return SourceSpec{os.str(), path, expected};
}

std::string Diagnostic::format(const std::string& origin) const {
  return origin + ":" + std::to_string(location.line) + ":" + std::to_string(location.column) + ": " +
         (severity == Severity::error ? "error" : "warning") + ": " + message;
}

bool ParseResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

namespace {

constexpr std::size_t kMaxIntegerDigits = 9;
constexpr long kMaxSmallInteger = 100000;  // degrees, exponents, group orders, Bott values

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceLocation loc;
};

// Thrown internally to abandon a document after a syntax error.
struct SyntaxError {
  Diagnostic diagnostic;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      const SourceLocation loc{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", loc});
        return out;
      }
      const char c = text_[pos_];
      if (is_alpha(c)) {
        std::string s;
        while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) s += advance();
        out.push_back({Tok::ident, s, loc});
      } else if (is_digit(c)) {
        std::string s;
        while (pos_ < text_.size() && is_digit(text_[pos_])) s += advance();
        out.push_back({Tok::integer, s, loc});
      } else if (std::string_view("{}:;=+-*^/,").find(c) != std::string_view::npos) {
        out.push_back({Tok::punct, std::string(1, advance()), loc});
      } else {
        const auto byte = static_cast<unsigned char>(c);
        std::string shown = byte >= 0x20 && byte < 0x7f ? "'" + std::string(1, c) + "'" : "byte 0x" + hex(byte);
        throw SyntaxError{{Severity::error, loc, "unexpected character " + shown}};
      }
    }
  }

 private:
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static std::string hex(unsigned char b) {
    const char* digits = "0123456789abcdef";
    return {digits[b >> 4], digits[b & 15]};
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct ParsedFactor {
  Factor factor;
  SourceLocation loc;
};
struct ParsedTerm {
  TermSpec term;
  std::vector<SourceLocation> factor_locs;
  SourceLocation loc;
};
struct ParsedDiff {
  std::string generator;
  SourceLocation loc;
  std::vector<ParsedTerm> terms;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags) : toks_(std::move(tokens)), diags_(diags) {}

  std::optional<ParsedValue> document(std::optional<SourceKind> expected) {
    const Token& head = peek();
    if (head.kind != Tok::ident || (head.text != "model" && head.text != "spaceform" && head.text != "bott"))
      fail(head, "expected 'model', 'spaceform' or 'bott'");
    const SourceKind kind = head.text == "model"       ? SourceKind::dga
                            : head.text == "spaceform" ? SourceKind::spaceform
                                                       : SourceKind::bott;
    if (expected && *expected != kind)
      fail(head, "expected a " + to_string(*expected) + " document, found '" + head.text + "'");

    std::optional<ParsedValue> value;
    switch (kind) {
      case SourceKind::dga: value = model_block(); break;
      case SourceKind::spaceform: value = spaceform_block(); break;
      case SourceKind::bott: value = bott_block(); break;
    }
    if (peek().kind != Tok::end) fail(peek(), "only one block is allowed per document");
    return value;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw SyntaxError{{Severity::error, t.loc, msg + (t.kind == Tok::end ? " at end of input" : "")}};
  }
  void error(SourceLocation loc, std::string msg) { diags_.push_back({Severity::error, loc, std::move(msg)}); }
  void warning(SourceLocation loc, std::string msg) { diags_.push_back({Severity::warning, loc, std::move(msg)}); }

  const Token& expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "'");
    return next();
  }
  const Token& expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::ident) fail(peek(), std::string("expected ") + what);
    return next();
  }

  // Small non-negative integer (degrees, exponents, orders, values).
  long small_integer(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::integer) fail(t, std::string("expected ") + what);
    next();
    if (t.text.size() > kMaxIntegerDigits || std::stol(t.text) > kMaxSmallInteger)
      fail(t, std::string(what) + " " + t.text.substr(0, 12) + (t.text.size() > 12 ? "..." : "") + " is out of range");
    return std::stol(t.text);
  }

  Rational rational_literal() {
    const Token& num = peek();
    if (num.kind != Tok::integer) fail(num, "expected a number");
    if (num.text.size() > 1000) fail(num, "number is too long");
    next();
    std::string text = num.text;
    if (at_punct('/')) {
      next();
      const Token& den = peek();
      if (den.kind != Tok::integer) fail(den, "expected a denominator");
      if (den.text.size() > 1000) fail(den, "number is too long");
      next();
      if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; }))
        fail(den, "zero denominator");
      text += "/" + den.text;
    }
    return parse_rational(text);
  }

  // --- model -------------------------------------------------------------

  DgaModel model_block() {
    const Token& kw = expect_word("model");
    const std::string name = expect_ident("a model name").text;
    expect_punct('{');

    std::vector<Generator> gens;
    std::map<std::string, SourceLocation> gen_locs;
    std::vector<ParsedDiff> diffs;
    while (!at_punct('}')) {
      if (at_word("generator")) {
        next();
        const Token& n = expect_ident("a generator name");
        expect_punct(':');
        const Token& dt = peek();
        const long degree = small_integer("a degree");
        expect_punct(';');
        if (gen_locs.count(n.text)) {
          error(n.loc, "generator " + n.text + " declared twice");
          continue;
        }
        if (degree < 1) error(dt.loc, "generator " + n.text + " must have degree >= 1");
        gen_locs.emplace(n.text, n.loc);
        gens.push_back({n.text, static_cast<int>(std::max(degree, 1L))});
      } else if (at_word("d")) {
        next();
        const Token& target = expect_ident("a generator name after 'd'");
        expect_punct('=');
        ParsedDiff diff{target.text, target.loc, poly()};
        expect_punct(';');
        diffs.push_back(std::move(diff));
      } else {
        fail(peek(), "expected 'generator', 'd' or '}'");
      }
    }
    expect_punct('}');

    std::map<std::string, int> degree_of;
    for (const auto& g : gens) degree_of[g.name] = g.degree;
    std::set<std::string> seen_diff;
    std::vector<DifferentialSpec> specs;
    for (const auto& diff : diffs) {
      const auto target = degree_of.find(diff.generator);
      if (target == degree_of.end()) error(diff.loc, "undeclared generator " + diff.generator);
      if (!seen_diff.insert(diff.generator).second) error(diff.loc, "differential of " + diff.generator + " declared twice");
      PolySpec poly;
      for (const auto& pt : diff.terms) {
        int degree = 0;
        bool known = true;
        std::map<std::string, unsigned> odd_uses;
        for (std::size_t i = 0; i < pt.term.factors.size(); ++i) {
          const Factor& f = pt.term.factors[i];
          const auto it = degree_of.find(f.generator);
          if (it == degree_of.end()) {
            error(pt.factor_locs[i], "undeclared generator " + f.generator);
            known = false;
            continue;
          }
          degree += it->second * static_cast<int>(f.exponent);
          if (it->second % 2 == 1) odd_uses[f.generator] += f.exponent;
        }
        if (known && target != degree_of.end() && degree != target->second + 1)
          error(pt.loc, "degree mismatch: term has degree " + std::to_string(degree) + " but d" + diff.generator +
                            " must have degree " + std::to_string(target->second + 1));
        for (const auto& [g, count] : odd_uses)
          if (count > 1) warning(pt.loc, "odd generator " + g + " appears squared; the term vanishes");
        poly.push_back(pt.term);
      }
      specs.push_back({diff.generator, std::move(poly)});
    }
    if (has_errors()) throw Abandon{};
    try {
      return DgaModel(name, std::move(gens), std::move(specs));
    } catch (const std::exception& e) {
      error(kw.loc, e.what());
      throw Abandon{};
    }
  }

  std::vector<ParsedTerm> poly() {
    std::vector<ParsedTerm> terms;
    if (peek().kind == Tok::integer && peek().text.find_first_not_of('0') == std::string::npos &&
        toks_[pos_ + 1].kind == Tok::punct && toks_[pos_ + 1].text == ";") {
      next();
      return terms;
    }
    bool negate = false;
    if (at_punct('-')) {
      next();
      negate = true;
    }
    while (true) {
      ParsedTerm t = term();
      if (negate) t.term.coefficient = -t.term.coefficient;
      terms.push_back(std::move(t));
      if (at_punct('+')) {
        negate = false;
      } else if (at_punct('-')) {
        negate = true;
      } else {
        return terms;
      }
      next();
    }
  }

  ParsedTerm term() {
    ParsedTerm t;
    t.loc = peek().loc;
    if (peek().kind == Tok::integer) {
      t.term.coefficient = rational_literal();
      expect_punct('*');
    }
    while (true) {
      const Token& name = expect_ident("a generator name");
      Factor f{name.text, 1};
      if (at_punct('^')) {
        next();
        const Token& et = peek();
        const long e = small_integer("an exponent");
        if (e < 1) fail(et, "exponents must be >= 1");
        f.exponent = static_cast<unsigned>(e);
      }
      t.term.factors.push_back(f);
      t.factor_locs.push_back(name.loc);
      if (!at_punct('*')) return t;
      next();
    }
  }

  // --- spaceform ---------------------------------------------------------

  SpaceFormSpec spaceform_block() {
    const Token& kw = expect_word("spaceform");
    expect_punct('{');
    auto field = [this](std::string_view key) {
      expect_word(key);
      expect_punct('=');
      const long v = small_integer("an integer");
      expect_punct(';');
      return static_cast<int>(v);
    };
    const int n = field("n");
    const int r = field("r");
    const int ord = field("ord");
    expect_punct('}');
    try {
      return SpaceFormSpec(n, r, ord);
    } catch (const std::exception& e) {
      error(kw.loc, e.what());
      throw Abandon{};
    }
  }

  // --- bott --------------------------------------------------------------

  BottFunction bott_block() {
    const Token& kw = expect_word("bott");
    expect_punct('{');
    expect_word("disc");
    expect_punct('=');
    std::vector<Angle> disc;
    if (!at_punct(';')) {
      while (true) {
        const Token& at = peek();
        const Rational q = rational_literal();
        if (q < 0 || q >= 1) error(at.loc, "angle " + q.get_str() + " must lie in [0, 1) turns");
        disc.emplace_back(q);
        if (!at_punct(',')) break;
        next();
      }
    }
    expect_punct(';');
    const Token& arcs_kw = expect_word("arcs");
    expect_punct('=');
    std::vector<int> arcs = int_list();
    expect_punct(';');
    const Token& points_kw = expect_word("points");
    expect_punct('=');
    std::vector<int> points = int_list();
    expect_punct(';');
    expect_punct('}');

    const std::size_t want_arcs = disc.empty() ? 1 : disc.size();
    if (arcs.size() != want_arcs)
      error(arcs_kw.loc, "expected " + std::to_string(want_arcs) + " arc value(s), got " + std::to_string(arcs.size()));
    if (points.size() != disc.size())
      error(points_kw.loc,
            "expected " + std::to_string(disc.size()) + " point value(s), got " + std::to_string(points.size()));
    if (has_errors()) throw Abandon{};
    try {
      return BottFunction(std::move(disc), std::move(arcs), std::move(points));
    } catch (const std::exception& e) {
      error(kw.loc, e.what());
      throw Abandon{};
    }
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    if (at_punct(';')) return out;
    while (true) {
      out.push_back(static_cast<int>(small_integer("a non-negative integer")));
      if (!at_punct(',')) return out;
      next();
    }
  }

  bool has_errors() const {
    return std::any_of(diags_.begin(), diags_.end(), [](const Diagnostic& d) { return d.severity == Severity::error; });
  }

 public:
  struct Abandon {};

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

}  // namespace

ParseResult parse(const SourceSpec& source) {
  ParseResult result;
  try {
    Parser parser(Lexer(source.text).run(), result.diagnostics);
    result.value = parser.document(source.expected);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  } catch (const Parser::Abandon&) {
  } catch (const std::exception& e) {
    result.diagnostics.push_back({Severity::error, {1, 1}, std::string("internal error: ") + e.what()});
  }
  if (result.has_errors()) result.value.reset();
  return result;
}

std::string print_poly(const PolySpec& poly) {
  if (poly.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const TermSpec& t = poly[i];
    const bool negative = sgn(t.coefficient) < 0;
    if (i == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const Rational mag = abs(t.coefficient);
    if (t.factors.empty()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    for (std::size_t j = 0; j < t.factors.size(); ++j) {
      if (j) s += "*";
      s += t.factors[j].generator;
      if (t.factors[j].exponent != 1) s += "^" + std::to_string(t.factors[j].exponent);
    }
  }
  return s;
}

std::string print(const DgaModel& model) {
  std::string s = "model " + model.name() + " {\n";
  for (const auto& g : model.algebra().declared()) s += "  generator " + g.name + ": " + std::to_string(g.degree) + ";\n";
  for (const auto& d : model.declared_differentials()) s += "  d " + d.generator + " = " + print_poly(d.value) + ";\n";
  return s + "}\n";
}

std::string print(const SpaceFormSpec& spec) {
  return "spaceform {\n  n = " + std::to_string(spec.n()) + ";\n  r = " + std::to_string(spec.centralizer_order()) +
         ";\n  ord = " + std::to_string(spec.element_order()) + ";\n}\n";
}

std::string print(const BottFunction& f) {
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
  };
  std::string disc;
  for (std::size_t i = 0; i < f.discontinuities().size(); ++i)
    disc += (i ? ", " : "") + to_fraction_string(f.discontinuities()[i].turns());
  return "bott {\n  disc = " + disc + ";\n  arcs = " + join_ints(f.arc_values()) + ";\n  points = " +
         join_ints(f.point_values()) + ";\n}\n";
}

std::string print(const ParsedValue& value) {
  return std::visit([](const auto& v) { return print(v); }, value);
}

}  // namespace loopspace::dsl
