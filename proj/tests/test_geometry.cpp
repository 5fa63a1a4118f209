#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "mdeg/geometry.hpp"
#include "mdeg/parser.hpp"

using namespace mdeg;

namespace {

PrimeDescriptor piece(std::string_view text) {
  ParseResult r = parse(text);
  REQUIRE_MESSAGE(std::holds_alternative<ManifoldExpression>(r), text);
  return std::get<ManifoldExpression>(r).factors.at(0);
}

GeometryClass geometry(std::string_view text) { return classify_geometry(piece(text)); }
DegreeClass degree(std::string_view text) { return degree_class(piece(text)); }

}  // namespace

TEST_CASE("classify_geometry examples") {
  CHECK(geometry("tb[[1,0],[0,1]]") == GeometryClass::E3);
  CHECK(geometry("sfs(o 1; 0)") == GeometryClass::E3);
  CHECK(geometry("tb[[2,1],[1,1]]") == GeometryClass::Sol);

  // b = -1 with (2,1),(3,2),(7,6): e = -(-42 + 21 + 28 + 36)/42 = -43/42
  auto s = SeifertInvariants::make(true, 0, -1, {{2, 1}, {3, 2}, {7, 6}});
  CHECK(euler_number(s) == Rational(-43, 42));
  CHECK(classify_geometry(s) == GeometryClass::PSLtilde);
}

TEST_CASE("torus bundles split by trace") {
  CHECK(geometry("tb[[-1,0],[0,-1]]") == GeometryClass::E3);
  CHECK(geometry("tb[[0,-1],[1,0]]") == GeometryClass::E3);    // trace 0, order 4
  CHECK(geometry("tb[[0,-1],[1,1]]") == GeometryClass::E3);    // trace 1, order 6
  CHECK(geometry("tb[[-1,-1],[1,0]]") == GeometryClass::E3);   // trace -1, order 3
  CHECK(geometry("tb[[1,1],[0,1]]") == GeometryClass::Nil);
  CHECK(geometry("tb[[-1,1],[0,-1]]") == GeometryClass::Nil);
  CHECK(geometry("tb[[3,2],[1,1]]") == GeometryClass::Sol);
  CHECK(geometry("tb[[-2,1],[-1,0]]") == GeometryClass::Nil);  // trace -2, not -I
  CHECK(geometry("tb[[-3,1],[-1,0]]") == GeometryClass::Sol);
}

TEST_CASE("Seifert geometry table") {
  CHECK(geometry("sfs(o 0; -1; (2,1); (2,1))") == GeometryClass::S2xE1);
  CHECK(geometry("sfs(o 0; 0)") == GeometryClass::S2xE1);
  CHECK(geometry("sfs(o 1; 1)") == GeometryClass::Nil);
  CHECK(geometry("sfs(n 2; 0)") == GeometryClass::E3);
  CHECK(geometry("sfs(o 2; 0)") == GeometryClass::H2xE1);
  CHECK(geometry("sfs(o 2; 1)") == GeometryClass::PSLtilde);
  CHECK_THROWS_AS(classify_geometry(SeifertInvariants::make(true, 0, 1, {{2, 1}, {3, 1}})),
                  UnsupportedInput);
}

TEST_CASE("degree_class examples") {
  CHECK(degree("lens(5,1)") == DegreeClass{DegreeClassKind::Spherical, 5});
  CHECK(degree("ico*cyclic(7)").parameter == 840);

  // chi = 2 - 1/2 - 1/2 - 2/3 - 2/3 = -1/3, e = -(-2 + 1/2 + 1/2 + 1/3 + 2/3) = 0
  DegreeClass c = degree("sfs(o 0; -2; (2,1); (2,1); (3,1); (3,2))");
  CHECK(c.kind == DegreeClassKind::H2xE1);
  CHECK(c.parameter == 2 * 2 * 3 * 3);
  CHECK(degree("sfs(o 1; -1; (2,1); (2,1))") == DegreeClass{DegreeClassKind::H2xE1, 4});
  CHECK(degree("sfs(o 3; 0)") == DegreeClass{DegreeClassKind::H2xE1, 1});

  c = degree("hyp(weeks)");
  CHECK(c.is_finite());
  CHECK(c.reason == FiniteReason::Hyperbolic);
  CHECK(degree("psl(x)").reason == FiniteReason::PSLGeometry);
  CHECK(degree("sfs(o 0; -1; (2,1); (3,1); (7,1))").reason == FiniteReason::PSLGeometry);
  CHECK(degree("graph(x)").reason == FiniteReason::NontrivialGraph);
  CHECK(degree("mixed(x)").reason == FiniteReason::HyperbolicPiece);

  CHECK(degree("tb[[2,1],[1,1]]").kind == DegreeClassKind::TorusBundleOrSemi);
  CHECK(degree("tb[[1,1],[0,1]]").kind == DegreeClassKind::TorusBundleOrSemi);
  CHECK(degree("tsb(k)").kind == DegreeClassKind::TorusBundleOrSemi);
  CHECK(degree("nilother(v)").kind == DegreeClassKind::NilOther);
  CHECK(degree("S2xS1").kind == DegreeClassKind::S2xS1);
  CHECK(degree("sfs(o 0; -1; (3,1); (3,2))").kind == DegreeClassKind::S2xS1);
}

TEST_CASE("Seifert-presented Nil pieces are bucketed by base orbifold") {
  auto nil = [](std::string_view text) {
    DegreeClass c = degree(text);
    CHECK(classify_geometry(piece(text)) == GeometryClass::Nil);
    CHECK(c.heuristic);
    return c.kind;
  };
  CHECK(nil("sfs(o 1; 1)") == DegreeClassKind::TorusBundleOrSemi);                       // T2
  CHECK(nil("sfs(n 2; 1)") == DegreeClassKind::TorusBundleOrSemi);                       // Klein bottle
  CHECK(nil("sfs(o 0; 0; (2,1); (2,1); (2,1); (2,1))") == DegreeClassKind::TorusBundleOrSemi);
  CHECK(nil("sfs(n 1; 0; (2,1); (2,1))") == DegreeClassKind::TorusBundleOrSemi);         // P2(2,2)
  CHECK(nil("sfs(o 0; 0; (2,1); (3,1); (6,1))") == DegreeClassKind::NilOther);
  CHECK(nil("sfs(o 0; 0; (2,1); (4,1); (4,1))") == DegreeClassKind::NilOther);
  CHECK(nil("sfs(o 0; 0; (3,1); (3,1); (3,1))") == DegreeClassKind::NilOther);

  // flat manifolds over the same triangle bases are torus bundles
  CHECK(degree("sfs(o 0; -1; (3,1); (3,1); (3,1))").kind == DegreeClassKind::TorusBundleOrSemi);
  CHECK_FALSE(degree("sfs(o 0; -1; (3,1); (3,1); (3,1))").heuristic);
}

TEST_CASE("Seifert sweep assigns exactly one geometry per sign pattern") {
  gen::Rng rng(31);
  for (int i = 0; i < 3000; ++i) {
    SeifertInvariants s = gen::random_seifert(rng);
    int chi = sgn(chi_orb(s));
    bool flat = euler_number(s) == 0;
    if (chi > 0 && !flat) {
      CHECK_THROWS_AS(classify_geometry(s), UnsupportedInput);
      continue;
    }
    GeometryClass g = classify_geometry(s);
    GeometryClass expected = chi > 0    ? GeometryClass::S2xE1
                             : chi == 0 ? (flat ? GeometryClass::E3 : GeometryClass::Nil)
                                        : (flat ? GeometryClass::H2xE1 : GeometryClass::PSLtilde);
    CHECK(g == expected);
  }
}

TEST_CASE("classes are total and consistent with geometry") {
  gen::Rng rng(32);
  for (int i = 0; i < 3000; ++i) {
    PrimeDescriptor p = gen::random_piece(rng);
    GeometryClass g = classify_geometry(p);
    DegreeClass c = degree_class(p);
    bool finite_geometry = g == GeometryClass::H3 || g == GeometryClass::PSLtilde ||
                           g == GeometryClass::NontrivialGraph ||
                           g == GeometryClass::MixedWithHyperbolic;
    CHECK(c.is_finite() == finite_geometry);
    CHECK(c.is_finite() == (c.reason != FiniteReason::None));
    if (c.kind == DegreeClassKind::Spherical) CHECK(c.parameter == pi1_order(std::get<SphericalFamily>(p)));
    if (c.kind == DegreeClassKind::H2xE1) CHECK(c.parameter == alpha(std::get<SeifertInvariants>(p)));
  }
}

TEST_CASE("normal form buckets partition the factors") {
  gen::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    ManifoldExpression m = gen::random_expression(rng, 8);
    NormalForm n = normal_form(m);
    std::size_t total = n.spherical.size() + n.h2xe1.size() + n.torus_class.size() +
                        n.nil_other.size() + n.s2xs1_count + n.finite.size();
    CHECK(total == m.factors.size());
    for (const auto& p : n.spherical) CHECK(degree_class(p).kind == DegreeClassKind::Spherical);
    for (const auto& p : n.h2xe1) CHECK(degree_class(p).kind == DegreeClassKind::H2xE1);
    for (const auto& p : n.torus_class) CHECK(degree_class(p).kind == DegreeClassKind::TorusBundleOrSemi);
    for (const auto& p : n.nil_other) CHECK(degree_class(p).kind == DegreeClassKind::NilOther);
    for (const auto& p : n.finite) CHECK(degree_class(p).is_finite());
    std::size_t s2 = 0;
    for (const auto& p : m.factors) s2 += degree_class(p).kind == DegreeClassKind::S2xS1;
    CHECK(n.s2xs1_count == s2);
  }
}

TEST_CASE("report notes") {
  CHECK(geometry_note(piece("tsb(k)")) == "unresolved (tag-level input)");
  CHECK(geometry_note(piece("sfs(o 1; 1)")).find("heuristic") == 0);
  CHECK(geometry_note(piece("lens(5,1)")).empty());
}
