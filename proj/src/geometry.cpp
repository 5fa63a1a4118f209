#include "mdeg/geometry.hpp"

#include <algorithm>

namespace mdeg {

namespace {

GeometryClass seifert_geometry(const SeifertInvariants& s) {
  int chi_sign = sgn(chi_orb(s));
  bool flat = euler_number(s) == 0;
  if (chi_sign > 0) {
    if (!flat)
      throw UnsupportedInput("Seifert data with S3 geometry: use lens/prism/tet/oct/ico syntax");
    return GeometryClass::S2xE1;
  }
  if (chi_sign == 0) return flat ? GeometryClass::E3 : GeometryClass::Nil;
  return flat ? GeometryClass::H2xE1 : GeometryClass::PSLtilde;
}

GeometryClass bundle_geometry(const MonodromyMatrix& m) {
  Integer t = abs(m.trace());
  if (t > 2) return GeometryClass::Sol;
  if (m.is_plus_minus_identity() || t <= 1) return GeometryClass::E3;
  return GeometryClass::Nil;
}

// Euclidean base orbifolds S2(2,3,6), S2(2,4,4), S2(3,3,3).
bool triangle_base(const SeifertInvariants& s) {
  if (!s.base_orientable() || s.base_genus() != 0 || s.fibers().size() != 3) return false;
  const auto& f = s.fibers();
  auto is = [&](int a, int b, int c) { return f[0].index == a && f[1].index == b && f[2].index == c; };
  return is(2, 3, 6) || is(2, 4, 4) || is(3, 3, 3);
}

}  // namespace

GeometryClass classify_geometry(const PrimeDescriptor& piece) {
  struct Visitor {
    GeometryClass operator()(const SphericalFamily&) const { return GeometryClass::S3; }
    GeometryClass operator()(const SeifertInvariants& s) const { return seifert_geometry(s); }
    GeometryClass operator()(const MonodromyMatrix& m) const { return bundle_geometry(m); }
    GeometryClass operator()(const TorusSemiBundle&) const { return GeometryClass::Sol; }
    GeometryClass operator()(const NilOther&) const { return GeometryClass::Nil; }
    GeometryClass operator()(const S2xS1&) const { return GeometryClass::S2xE1; }
    GeometryClass operator()(const Hyperbolic&) const { return GeometryClass::H3; }
    GeometryClass operator()(const PSLtilde&) const { return GeometryClass::PSLtilde; }
    GeometryClass operator()(const NontrivialGraph&) const { return GeometryClass::NontrivialGraph; }
    GeometryClass operator()(const MixedHyperbolicPieces&) const {
      return GeometryClass::MixedWithHyperbolic;
    }
  };
  return std::visit(Visitor{}, piece);
}

DegreeClass degree_class(const PrimeDescriptor& piece) {
  GeometryClass geometry = classify_geometry(piece);
  DegreeClass out;
  switch (geometry) {
    case GeometryClass::H3: out.reason = FiniteReason::Hyperbolic; return out;
    case GeometryClass::PSLtilde: out.reason = FiniteReason::PSLGeometry; return out;
    case GeometryClass::NontrivialGraph: out.reason = FiniteReason::NontrivialGraph; return out;
    case GeometryClass::MixedWithHyperbolic: out.reason = FiniteReason::HyperbolicPiece; return out;
    case GeometryClass::S3:
      out.kind = DegreeClassKind::Spherical;
      out.parameter = pi1_order(std::get<SphericalFamily>(piece));
      return out;
    case GeometryClass::S2xE1: out.kind = DegreeClassKind::S2xS1; return out;
    case GeometryClass::H2xE1:
      out.kind = DegreeClassKind::H2xE1;
      out.parameter = alpha(std::get<SeifertInvariants>(piece));
      return out;
    case GeometryClass::E3:
    case GeometryClass::Sol:
      out.kind = DegreeClassKind::TorusBundleOrSemi;
      return out;
    case GeometryClass::Nil:
      if (std::holds_alternative<NilOther>(piece)) {
        out.kind = DegreeClassKind::NilOther;
      } else if (const auto* s = std::get_if<SeifertInvariants>(&piece)) {
        out.kind = triangle_base(*s) ? DegreeClassKind::NilOther : DegreeClassKind::TorusBundleOrSemi;
        out.heuristic = true;
      } else {
        out.kind = DegreeClassKind::TorusBundleOrSemi;
      }
      return out;
  }
  return out;
}

std::vector<Integer> NormalForm::orders() const {
  std::vector<Integer> out;
  for (const auto& p : spherical) out.push_back(pi1_order(std::get<SphericalFamily>(p)));
  return out;
}

std::vector<Integer> NormalForm::alphas() const {
  std::vector<Integer> out;
  for (const auto& q : h2xe1) out.push_back(alpha(std::get<SeifertInvariants>(q)));
  return out;
}

NormalForm normal_form(const ManifoldExpression& m) {
  NormalForm out;
  for (const auto& piece : m.factors) {
    switch (degree_class(piece).kind) {
      case DegreeClassKind::Spherical: out.spherical.push_back(piece); break;
      case DegreeClassKind::H2xE1: out.h2xe1.push_back(piece); break;
      case DegreeClassKind::TorusBundleOrSemi: out.torus_class.push_back(piece); break;
      case DegreeClassKind::NilOther: out.nil_other.push_back(piece); break;
      case DegreeClassKind::S2xS1: ++out.s2xs1_count; break;
      case DegreeClassKind::Finite: out.finite.push_back(piece); break;
    }
  }
  return out;
}

std::string_view geometry_name(GeometryClass g) {
  switch (g) {
    case GeometryClass::H3: return "H3";
    case GeometryClass::PSLtilde: return "PSLtilde";
    case GeometryClass::H2xE1: return "H2xE1";
    case GeometryClass::Sol: return "Sol";
    case GeometryClass::Nil: return "Nil";
    case GeometryClass::E3: return "E3";
    case GeometryClass::S3: return "S3";
    case GeometryClass::S2xE1: return "S2xE1";
    case GeometryClass::NontrivialGraph: return "NontrivialGraph";
    case GeometryClass::MixedWithHyperbolic: return "MixedWithHyperbolic";
  }
  return "";
}

std::string_view class_name(DegreeClassKind k) {
  switch (k) {
    case DegreeClassKind::Spherical: return "C1_Spherical";
    case DegreeClassKind::H2xE1: return "C2_H2xE1";
    case DegreeClassKind::TorusBundleOrSemi: return "C3_TorusBundleOrSemi";
    case DegreeClassKind::NilOther: return "C4_NilOther";
    case DegreeClassKind::S2xS1: return "C5_S2xS1";
    case DegreeClassKind::Finite: return "Finite";
  }
  return "";
}

std::string_view reason_tag(FiniteReason r) {
  switch (r) {
    case FiniteReason::None: return "";
    case FiniteReason::Hyperbolic: return "hyperbolic";
    case FiniteReason::HyperbolicPiece: return "hyperbolic-piece";
    case FiniteReason::PSLGeometry: return "psl-geometry";
    case FiniteReason::NontrivialGraph: return "nontrivial-graph";
  }
  return "";
}

std::string_view reason_text(FiniteReason r) {
  switch (r) {
    case FiniteReason::None: return "";
    case FiniteReason::Hyperbolic:
      return "hyperbolic target: simplicial volume bounds |deg| (Milnor-Thurston)";
    case FiniteReason::HyperbolicPiece:
      return "prime factor with a hyperbolic piece: simplicial volume bounds |deg|";
    case FiniteReason::PSLGeometry:
      return "PSL~(2,R) factor: Seifert volume bounds |deg|";
    case FiniteReason::NontrivialGraph:
      return "non-trivial graph manifold: a finite cover has positive Seifert volume";
  }
  return "";
}

std::string_view geometry_note(const PrimeDescriptor& piece) {
  if (std::holds_alternative<TorusSemiBundle>(piece)) return "unresolved (tag-level input)";
  if (const auto* s = std::get_if<SeifertInvariants>(&piece)) {
    if (chi_orb(*s) == 0 && euler_number(*s) != 0)
      return "heuristic: Nil class chosen from the base orbifold";
  }
  return "";
}

}  // namespace mdeg
