#pragma once

// Value model for prime pieces of closed oriented 3-manifolds and the
// invariants the degree formulas consume.

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "mdeg/errors.hpp"
#include "mdeg/integer.hpp"

namespace mdeg {

enum class SphericalKind { Lens, Prism, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// A spherical space form given by name, optionally times a cyclic group of
/// coprime order. Build through the factories, which enforce the invariants.
struct SphericalFamily {
  SphericalKind kind = SphericalKind::Lens;
  Integer p = 1;  // lens only
  Integer q = 0;  // lens only
  Integer n = 0;  // prism only
  Integer cyclic_factor = 1;

  static SphericalFamily lens(Integer p, Integer q, Integer cyclic = 1);
  static SphericalFamily prism(Integer n, Integer cyclic = 1);
  static SphericalFamily binary(SphericalKind kind, Integer cyclic = 1);

  /// |pi_1| of the family with cyclic factor 1.
  Integer base_order() const;

  bool operator==(const SphericalFamily&) const = default;
};

struct ExceptionalFiber {
  Integer index;  // a >= 2
  Integer twist;  // 0 < b < a after normalization

  bool operator==(const ExceptionalFiber&) const = default;
};

/// Unnormalized Seifert data is accepted by make(); twists are reduced into
/// (0, a) by moving whole multiples into euler_b, and fibers are sorted.
class SeifertInvariants {
 public:
  static SeifertInvariants make(bool base_orientable, Integer base_genus, Integer euler_b,
                                std::vector<ExceptionalFiber> fibers);

  bool base_orientable() const { return base_orientable_; }
  const Integer& base_genus() const { return base_genus_; }
  const Integer& euler_b() const { return euler_b_; }
  const std::vector<ExceptionalFiber>& fibers() const { return fibers_; }

  bool operator==(const SeifertInvariants&) const = default;

 private:
  SeifertInvariants() = default;

  bool base_orientable_ = true;
  Integer base_genus_ = 0;
  Integer euler_b_ = 0;
  std::vector<ExceptionalFiber> fibers_;
};

/// Monodromy of a torus bundle, an element of SL(2,Z).
struct MonodromyMatrix {
  Integer m11 = 1, m12 = 0, m21 = 0, m22 = 1;

  static MonodromyMatrix make(Integer m11, Integer m12, Integer m21, Integer m22);

  Integer trace() const { return m11 + m22; }
  Integer determinant() const { return m11 * m22 - m12 * m21; }
  bool is_plus_minus_identity() const;

  bool operator==(const MonodromyMatrix&) const = default;
};

struct TorusSemiBundle {
  std::string label;
  bool operator==(const TorusSemiBundle&) const = default;
};
struct NilOther {
  std::string label;
  bool operator==(const NilOther&) const = default;
};
struct S2xS1 {
  bool operator==(const S2xS1&) const = default;
};
struct Hyperbolic {
  std::string label;
  bool operator==(const Hyperbolic&) const = default;
};
struct PSLtilde {
  std::string label;
  bool operator==(const PSLtilde&) const = default;
};
struct NontrivialGraph {
  std::string label;
  bool operator==(const NontrivialGraph&) const = default;
};
struct MixedHyperbolicPieces {
  std::string label;
  bool operator==(const MixedHyperbolicPieces&) const = default;
};

using PrimeDescriptor =
    std::variant<SphericalFamily, SeifertInvariants, MonodromyMatrix, TorusSemiBundle, NilOther,
                 S2xS1, Hyperbolic, PSLtilde, NontrivialGraph, MixedHyperbolicPieces>;

/// A connected sum N_1 # ... # N_k in input order.
struct ManifoldExpression {
  std::vector<PrimeDescriptor> factors;

  bool operator==(const ManifoldExpression&) const = default;
};

// Operations ---------------------------------------------------------------

Integer pi1_order(const SphericalFamily& family);

/// Product of the exceptional fiber indices; 1 with no exceptional fibers.
Integer alpha(const SeifertInvariants& s);

/// Orbifold Euler characteristic of the base.
Rational chi_orb(const SeifertInvariants& s);

/// e = -(b + sum b_i / a_i).
Rational euler_number(const SeifertInvariants& s);

/// Throws InvalidInput unless the label is a nonempty run of [A-Za-z0-9_.-].
void validate_label(const std::string& label);

/// Checks every invariant of a prime piece, including that Seifert data does
/// not describe a spherical manifold (those must use the named families) or
/// the non-prime RP3 # RP3.
void validate(const PrimeDescriptor& piece);

/// Total order used by normalize(): variant position first, then parameters.
std::strong_ordering compare(const PrimeDescriptor& a, const PrimeDescriptor& b);

/// Factors sorted by compare(); Seifert data is already normalized on construction.
ManifoldExpression normalize(ManifoldExpression m);

}  // namespace mdeg
