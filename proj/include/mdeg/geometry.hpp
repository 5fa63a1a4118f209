#pragma once

// Thurston geometry of each prime piece and its degree class: which of the
// five infinite self-degree families applies, or why the degree set is finite.

#include <string_view>
#include <vector>

#include "mdeg/manifold.hpp"

namespace mdeg {

enum class GeometryClass {
  H3,
  PSLtilde,
  H2xE1,
  Sol,
  Nil,
  E3,
  S3,
  S2xE1,
  NontrivialGraph,
  MixedWithHyperbolic,
};

enum class DegreeClassKind { Spherical, H2xE1, TorusBundleOrSemi, NilOther, S2xS1, Finite };

/// Why a target has finite degree sets from every domain.
enum class FiniteReason {
  None,
  Hyperbolic,           // positive simplicial volume
  HyperbolicPiece,      // a hyperbolic piece in the geometric decomposition
  PSLGeometry,          // positive Seifert volume
  NontrivialGraph,      // a finite cover has positive Seifert volume
};

struct DegreeClass {
  DegreeClassKind kind = DegreeClassKind::Finite;
  Integer parameter = 0;  // |pi_1| for Spherical, alpha for H2xE1, otherwise 0
  FiniteReason reason = FiniteReason::None;
  bool heuristic = false;  // Seifert-presented Nil pieces: bucket chosen by base orbifold

  bool is_finite() const { return kind == DegreeClassKind::Finite; }
  bool operator==(const DegreeClass&) const = default;
};

/// Throws UnsupportedInput for Seifert data with S3 geometry.
GeometryClass classify_geometry(const PrimeDescriptor& piece);

DegreeClass degree_class(const PrimeDescriptor& piece);

/// Prime pieces bucketed by degree class, each bucket in input order.
struct NormalForm {
  std::vector<PrimeDescriptor> spherical;       // P_i
  std::vector<PrimeDescriptor> h2xe1;           // Q_j
  std::vector<PrimeDescriptor> torus_class;     // U_k
  std::vector<PrimeDescriptor> nil_other;       // V_m
  std::size_t s2xs1_count = 0;
  std::vector<PrimeDescriptor> finite;

  std::vector<Integer> orders() const;
  std::vector<Integer> alphas() const;
};

NormalForm normal_form(const ManifoldExpression& m);

std::string_view geometry_name(GeometryClass g);
std::string_view class_name(DegreeClassKind k);
std::string_view reason_tag(FiniteReason r);
std::string_view reason_text(FiniteReason r);

/// Extra wording for reports where the geometry label is not derived from data.
std::string_view geometry_note(const PrimeDescriptor& piece);

}  // namespace mdeg
