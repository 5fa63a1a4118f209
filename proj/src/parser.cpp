#include "mdeg/parser.hpp"

#include <optional>
#include <sstream>

namespace mdeg {

namespace {

struct Failure {
  ParseError error;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_label_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '.' || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ManifoldExpression expression() {
    ManifoldExpression out;
    out.factors.push_back(piece());
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '#') fail_here("expected '#' or end of input");
      ++pos_;
      out.factors.push_back(piece());
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  SourceSpan span(std::size_t offset, std::size_t length) const {
    if (offset > text_.size()) offset = text_.size();
    if (offset + length > text_.size()) length = text_.size() - offset;
    SourceSpan out;
    out.offset = offset;
    out.length = length;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text_[i] == '\n') {
        ++out.line;
        out.column = 1;
      } else {
        ++out.column;
      }
    }
    return out;
  }

  [[noreturn]] void fail(ParseErrorKind kind, std::size_t offset, std::size_t length,
                         std::string message, std::string constraint = {}) const {
    throw Failure{ParseError{span(offset, length), kind, std::move(message), std::move(constraint)}};
  }

  [[noreturn]] void fail_here(std::string message) const {
    fail(ParseErrorKind::UnexpectedToken, pos_, at_end() ? 0 : 1, std::move(message));
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail_here(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !is_alpha(peek())) return {};
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    std::size_t digits_start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == digits_start) {
      if (digits_start != start) fail(ParseErrorKind::BadNumber, start, 1, "sign without digits");
      fail_here("expected integer");
    }
    if (!at_end() && (is_alpha(peek()) || peek() == '_')) {
      std::size_t end = pos_;
      while (end < text_.size() && (is_alpha(text_[end]) || is_digit(text_[end]) || text_[end] == '_'))
        ++end;
      fail(ParseErrorKind::BadNumber, start, end - start, "malformed number");
    }
    Integer value(std::string(text_.substr(digits_start, pos_ - digits_start)), 10);
    return negative ? Integer(-value) : value;
  }

  std::string label() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && is_label_char(peek())) ++pos_;
    if (pos_ == start) fail_here("expected label");
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer cyclic_suffix() {
    if (!accept('*')) return 1;
    skip_space();
    std::size_t start = pos_;
    std::string_view name = word();
    if (name.empty()) fail_here("expected 'cyclic'");
    if (name != "cyclic")
      fail(ParseErrorKind::UnknownPiece, start, name.size(),
           "unknown factor '" + std::string(name) + "', expected 'cyclic'");
    expect('(');
    Integer m = integer();
    expect(')');
    return m;
  }

  template <typename Build>
  PrimeDescriptor checked(std::size_t start, Build&& build) {
    try {
      PrimeDescriptor out = build();
      validate(out);
      return out;
    } catch (const InvalidInput& e) {
      fail(ParseErrorKind::ConstraintViolation, start, pos_ - start,
           e.constraint() + ": " + e.what(), e.constraint());
    }
  }

  PrimeDescriptor piece() {
    skip_space();
    std::size_t start = pos_;
    std::string_view name = word();
    if (name.empty()) fail_here("expected a prime piece");

    if (name == "S2xS1") return S2xS1{};
    if (name == "lens") {
      expect('(');
      Integer p = integer();
      expect(',');
      Integer q = integer();
      expect(')');
      Integer m = cyclic_suffix();
      return checked(start, [&] { return SphericalFamily::lens(p, q, m); });
    }
    if (name == "prism") {
      expect('(');
      Integer n = integer();
      expect(')');
      Integer m = cyclic_suffix();
      return checked(start, [&] { return SphericalFamily::prism(n, m); });
    }
    if (name == "tet" || name == "oct" || name == "ico") {
      SphericalKind kind = name == "tet"   ? SphericalKind::BinaryTetrahedral
                           : name == "oct" ? SphericalKind::BinaryOctahedral
                                           : SphericalKind::BinaryIcosahedral;
      Integer m = cyclic_suffix();
      return checked(start, [&] { return SphericalFamily::binary(kind, m); });
    }
    if (name == "sfs") return seifert(start);
    if (name == "tb") {
      expect('[');
      expect('[');
      Integer a = integer();
      expect(',');
      Integer b = integer();
      expect(']');
      expect(',');
      expect('[');
      Integer c = integer();
      expect(',');
      Integer d = integer();
      expect(']');
      expect(']');
      return checked(start, [&] { return MonodromyMatrix::make(a, b, c, d); });
    }
    if (name == "tsb" || name == "hyp" || name == "psl" || name == "graph" || name == "mixed" ||
        name == "nilother") {
      expect('(');
      std::string tag = label();
      expect(')');
      if (name == "tsb") return TorusSemiBundle{tag};
      if (name == "hyp") return Hyperbolic{tag};
      if (name == "psl") return PSLtilde{tag};
      if (name == "graph") return NontrivialGraph{tag};
      if (name == "mixed") return MixedHyperbolicPieces{tag};
      return NilOther{tag};
    }
    fail(ParseErrorKind::UnknownPiece, start, name.size(),
         "unknown piece '" + std::string(name) + "'");
  }

  PrimeDescriptor seifert(std::size_t start) {
    expect('(');
    skip_space();
    if (at_end() || (peek() != 'o' && peek() != 'n')) fail_here("expected base type 'o' or 'n'");
    bool orientable = peek() == 'o';
    ++pos_;
    Integer genus = integer();
    expect(';');
    Integer euler_b = integer();
    std::vector<ExceptionalFiber> fibers;
    while (accept(';')) {
      if (accept(')')) return finish_seifert(start, orientable, genus, euler_b, fibers);
      expect('(');
      Integer a = integer();
      expect(',');
      Integer b = integer();
      expect(')');
      fibers.push_back({a, b});
    }
    expect(')');
    return finish_seifert(start, orientable, genus, euler_b, fibers);
  }

  PrimeDescriptor finish_seifert(std::size_t start, bool orientable, const Integer& genus,
                                 const Integer& euler_b, const std::vector<ExceptionalFiber>& fibers) {
    return checked(start, [&] {
      return SeifertInvariants::make(orientable, genus, euler_b, fibers);
    });
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string spherical_text(const SphericalFamily& s) {
  std::string out;
  switch (s.kind) {
    case SphericalKind::Lens: out = "lens(" + to_string(s.p) + "," + to_string(s.q) + ")"; break;
    case SphericalKind::Prism: out = "prism(" + to_string(s.n) + ")"; break;
    case SphericalKind::BinaryTetrahedral: out = "tet"; break;
    case SphericalKind::BinaryOctahedral: out = "oct"; break;
    case SphericalKind::BinaryIcosahedral: out = "ico"; break;
  }
  if (s.cyclic_factor != 1) out += "*cyclic(" + to_string(s.cyclic_factor) + ")";
  return out;
}

}  // namespace

ParseResult parse(std::string_view text) {
  try {
    return Parser(text).expression();
  } catch (const Failure& failure) {
    return failure.error;
  }
}

std::string render(const PrimeDescriptor& piece) {
  struct Visitor {
    std::string operator()(const SphericalFamily& s) const { return spherical_text(s); }
    std::string operator()(const SeifertInvariants& s) const {
      std::string out = std::string("sfs(") + (s.base_orientable() ? "o " : "n ") +
                        to_string(s.base_genus()) + "; " + to_string(s.euler_b());
      for (const auto& f : s.fibers())
        out += "; (" + to_string(f.index) + "," + to_string(f.twist) + ")";
      return out + ")";
    }
    std::string operator()(const MonodromyMatrix& m) const {
      return "tb[[" + to_string(m.m11) + "," + to_string(m.m12) + "],[" + to_string(m.m21) +
             "," + to_string(m.m22) + "]]";
    }
    std::string operator()(const TorusSemiBundle& t) const { return "tsb(" + t.label + ")"; }
    std::string operator()(const NilOther& t) const { return "nilother(" + t.label + ")"; }
    std::string operator()(const S2xS1&) const { return "S2xS1"; }
    std::string operator()(const Hyperbolic& t) const { return "hyp(" + t.label + ")"; }
    std::string operator()(const PSLtilde& t) const { return "psl(" + t.label + ")"; }
    std::string operator()(const NontrivialGraph& t) const { return "graph(" + t.label + ")"; }
    std::string operator()(const MixedHyperbolicPieces& t) const { return "mixed(" + t.label + ")"; }
  };
  return std::visit(Visitor{}, piece);
}

std::string render(const ManifoldExpression& m) {
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i > 0) out += " # ";
    out += render(m.factors[i]);
  }
  return out;
}

std::string_view kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::BadNumber: return "BadNumber";
    case ParseErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ParseErrorKind::UnknownPiece: return "UnknownPiece";
  }
  return "UnexpectedToken";
}

std::string format_error(std::string_view text, const ParseError& error) {
  std::ostringstream out;
  out << error.span.line << ":" << error.span.column << ": " << kind_name(error.kind) << ": "
      << error.message << "\n";
  std::size_t line_start = error.span.offset - (error.span.column - 1);
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::string_view line = text.substr(line_start, line_end - line_start);
  out << "  " << line << "\n  " << std::string(error.span.column - 1, ' ') << '^';
  std::size_t marks = std::min(error.span.length, line.size() - (error.span.column - 1));
  if (marks > 1) out << std::string(marks - 1, '~');
  out << "\n";
  return out.str();
}

}  // namespace mdeg
