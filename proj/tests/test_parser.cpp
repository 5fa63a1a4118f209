#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "mdeg/parser.hpp"

using namespace mdeg;

namespace {

ManifoldExpression ok(std::string_view text) {
  ParseResult r = parse(text);
  if (auto* e = std::get_if<ParseError>(&r)) FAIL("unexpected parse error: " << format_error(text, *e));
  return std::get<ManifoldExpression>(r);
}

ParseError bad(std::string_view text) {
  ParseResult r = parse(text);
  REQUIRE(std::holds_alternative<ParseError>(r));
  return std::get<ParseError>(r);
}

bool in_bounds(std::string_view text, const SourceSpan& span) {
  if (span.line < 1 || span.column < 1) return false;
  if (span.offset + span.length > text.size()) return false;
  // line/column agree with the byte offset
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < span.offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line == span.line && column == span.column;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(ok("lens(5,1) # S2xS1") ==
        ManifoldExpression{{SphericalFamily::lens(5, 1), S2xS1{}}});
  CHECK(ok("tb[[1,0],[0,1]]") == ManifoldExpression{{MonodromyMatrix::make(1, 0, 0, 1)}});

  ParseError e = bad("lens(4,2)");
  CHECK(e.kind == ParseErrorKind::ConstraintViolation);
  CHECK(e.constraint == "gcd(p,q)=1");
  CHECK(e.span.line == 1);
  CHECK(e.span.column == 1);
  CHECK(e.span.length == 9);
}

TEST_CASE("every piece form parses") {
  auto m = ok("S2xS1 # lens(7,2)*cyclic(3) # prism(2) # tet*cyclic(5) # oct # ico # "
              "sfs(n 2; 1) # sfs(o 0; -2; (2,1); (2,1); (3,1); (3,2)) # tb[[2,1],[1,1]] # "
              "tsb(k) # hyp(m004) # psl(p) # graph(g) # mixed(x) # nilother(v1)");
  REQUIRE(m.factors.size() == 15);
  CHECK(std::get<SphericalFamily>(m.factors[1]).cyclic_factor == 3);
  CHECK(std::get<SphericalFamily>(m.factors[3]).kind == SphericalKind::BinaryTetrahedral);
  CHECK(std::holds_alternative<TorusSemiBundle>(m.factors[9]));
  CHECK(std::get<NilOther>(m.factors[14]).label == "v1");
  CHECK(render(m) ==
        "S2xS1 # lens(7,2)*cyclic(3) # prism(2) # tet*cyclic(5) # oct # ico # sfs(n 2; 1) # "
        "sfs(o 0; -2; (2,1); (2,1); (3,1); (3,2)) # tb[[2,1],[1,1]] # tsb(k) # hyp(m004) # "
        "psl(p) # graph(g) # mixed(x) # nilother(v1)");
}

TEST_CASE("whitespace is insignificant between tokens") {
  CHECK(ok(" lens ( 5 , 1 )\n#\tS2xS1 ") == ok("lens(5,1)#S2xS1"));
  CHECK(ok("tb [ [ 1 , 0 ] , [ 0 , 1 ] ]") == ok("tb[[1,0],[0,1]]"));
  CHECK(ok("sfs( o 1 ; 0 ; ( 2 , 1 ) ; ( 2 , 1 ) )") == ok("sfs(o1;0;(2,1);(2,1))"));
  CHECK(ok("ico * cyclic ( 7 )") == ok("ico*cyclic(7)"));
}

TEST_CASE("Seifert twists are normalized at parse time") {
  auto m = ok("sfs(o 1; 0; (2,3))");
  CHECK(render(m) == "sfs(o 1; 1; (2,1))");
  CHECK(render(ok("sfs(o 1; 0;)")) == "sfs(o 1; 0)");
  CHECK(render(ok("sfs(o 1; -1; (2,-1); (2,1))")) == "sfs(o 1; -2; (2,1); (2,1))");
}

TEST_CASE("render examples") {
  CHECK(render(ManifoldExpression{{S2xS1{}}}) == "S2xS1");
  CHECK(render(ManifoldExpression{{SphericalFamily::lens(5, 1), S2xS1{}}}) == "lens(5,1) # S2xS1");
  CHECK(render(ManifoldExpression{{SeifertInvariants::make(true, 0, 1, {{2, 1}, {3, 1}, {6, 1}})}}) ==
        "sfs(o 0; 1; (2,1); (3,1); (6,1))");
}

TEST_CASE("error kinds and spans") {
  ParseError e = bad("foo(1)");
  CHECK(e.kind == ParseErrorKind::UnknownPiece);
  CHECK(e.span.column == 1);
  CHECK(e.span.length == 3);

  e = bad("lens(-,1)");
  CHECK(e.kind == ParseErrorKind::BadNumber);
  CHECK(e.span.column == 6);

  e = bad("lens(5x,1)");
  CHECK(e.kind == ParseErrorKind::BadNumber);
  CHECK(e.span.length == 2);

  e = bad("lens(5 1)");
  CHECK(e.kind == ParseErrorKind::UnexpectedToken);
  CHECK(e.span.column == 8);

  e = bad("lens(5,");
  CHECK(e.kind == ParseErrorKind::UnexpectedToken);
  CHECK(e.span.column == 8);
  CHECK(e.span.length == 0);

  e = bad("");
  CHECK(e.kind == ParseErrorKind::UnexpectedToken);
  CHECK(e.span == SourceSpan{1, 1, 0, 0});

  e = bad("S2xS1 #\n  foo");
  CHECK(e.kind == ParseErrorKind::UnknownPiece);
  CHECK(e.span.line == 2);
  CHECK(e.span.column == 3);

  e = bad("S2xS1 S2xS1");
  CHECK(e.kind == ParseErrorKind::UnexpectedToken);
  CHECK(e.span.column == 7);

  e = bad("tet*cyc(5)");
  CHECK(e.kind == ParseErrorKind::UnknownPiece);

  e = bad("ico*cyclic(5)");
  CHECK(e.constraint == "gcd(m,|pi1|)=1");

  e = bad("lens(5,1) # sfs(o 0; 1; (2,1); (3,1))");
  CHECK(e.kind == ParseErrorKind::ConstraintViolation);
  CHECK(e.constraint == "spherical-seifert");
  CHECK(e.span.column == 13);

  CHECK(bad("sfs(n 1; 0)").constraint == "non-prime-seifert");
  CHECK(bad("tb[[2,0],[0,2]]").constraint == "det=1");
  CHECK(bad("sfs(o 0; 0; (1,0))").constraint == "a>=2");
  CHECK(bad("hyp()").kind == ParseErrorKind::UnexpectedToken);
  CHECK(bad("hyp(a b)").kind == ParseErrorKind::UnexpectedToken);
  CHECK(bad("sfs(x 0; 0)").kind == ParseErrorKind::UnexpectedToken);
}

TEST_CASE("integers are arbitrary precision") {
  std::string big = "123456789012345678901234567890123";
  auto m = ok("lens(" + big + ",1)");
  CHECK(pi1_order(std::get<SphericalFamily>(m.factors[0])) == Integer(big));
}

TEST_CASE("format_error marks the span") {
  std::string text = "lens(4,2)";
  std::string shown = format_error(text, bad(text));
  CHECK(shown.find("1:1: ConstraintViolation") == 0);
  CHECK(shown.find("  lens(4,2)\n  ^~~~~~~~~\n") != std::string::npos);
  std::string eof = "lens(5,";
  CHECK(format_error(eof, bad(eof)).find("  lens(5,\n         ^\n") != std::string::npos);
}

TEST_CASE("round trip parse(render(m)) == normalize(m)") {
  gen::Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    ManifoldExpression m = gen::random_expression(rng);
    std::string text = render(m);
    ParseResult r = parse(text);
    REQUIRE_MESSAGE(std::holds_alternative<ManifoldExpression>(r), text);
    CHECK(normalize(std::get<ManifoldExpression>(r)) == normalize(m));
    CHECK(std::get<ManifoldExpression>(r) == m);
  }
}

TEST_CASE("random bytes produce structured errors") {
  gen::Rng rng(22);
  const std::string alphabet = "lensprimtcoyfbhgxd()[],;#*-+0123456789 \n";
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    int length = static_cast<int>(gen::uniform(rng, 0, 40));
    for (int k = 0; k < length; ++k)
      text += i % 2 == 0 ? static_cast<char>(gen::uniform(rng, 0, 255))
                         : alphabet[gen::uniform(rng, 0, alphabet.size() - 1)];
    ParseResult r = parse(text);
    if (auto* e = std::get_if<ParseError>(&r)) {
      CHECK(in_bounds(text, e->span));
      CHECK_FALSE(e->message.empty());
    } else {
      const auto& m = std::get<ManifoldExpression>(r);
      CHECK(std::get<ManifoldExpression>(parse(render(m))) == m);
    }
  }
}
