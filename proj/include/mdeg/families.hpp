#pragma once

// Symbolic infinite subsets of Z that appear as self-degree families, with
// exact membership and bounded enumeration. Families are never materialized.

#include <optional>
#include <variant>
#include <vector>

#include "mdeg/geometry.hpp"

namespace mdeg {

struct AllIntegers {
  bool operator==(const AllIntegers&) const = default;
};
/// {l * modulus + 1 : l in Z}
struct APPlusOne {
  Integer modulus = 1;
  bool operator==(const APPlusOne&) const = default;
};
/// {(2l + 1)^2 : l in Z}
struct OddSquares {
  bool operator==(const OddSquares&) const = default;
};
/// {l^4 : l = 1 mod 12}
struct FourthPowersMod12 {
  bool operator==(const FourthPowersMod12&) const = default;
};
/// {(base * l + 1)^4 : l in Z}, base a positive multiple of 12
struct WitnessFourth {
  Integer base = 12;
  bool operator==(const WitnessFourth&) const = default;
};

using BaseFamily = std::variant<AllIntegers, APPlusOne, OddSquares, FourthPowersMod12, WitnessFourth>;

/// A base family translated by offset (offset 0 is the family itself). The
/// single translation level is the only nesting the witness needs.
struct DegreeFamily {
  BaseFamily base;
  Integer offset = 0;

  bool shifted() const { return offset != 0; }
  bool operator==(const DegreeFamily&) const = default;
};

DegreeFamily make_ap_plus_one(Integer modulus);
DegreeFamily make_witness_fourth(Integer base);

struct Membership {
  bool member = false;
  std::optional<Integer> parameter;  // the l that produces d
  std::optional<Integer> root;       // square or fourth root used, for power families
};

/// Throws NoFamily for the Finite class.
DegreeFamily family_for_class(const DegreeClass& c);

Membership member(const DegreeFamily& family, const Integer& d);

/// The `count` smallest nonnegative members, increasing.
std::vector<Integer> enumerate(const DegreeFamily& family, std::size_t count);

/// B = 12 * prod |pi_1(P_i)| * prod alpha(Q_j). Throws NoWitness if the
/// normal form has a finite-class factor.
Integer combined_base(const NormalForm& n);

/// {(B l + 1)^4 + 1 : l in Z}
DegreeFamily witness_family(const NormalForm& n);

/// Witness degree before the +1 shift: (B l + 1)^4.
Integer witness_power(const Integer& base, const Integer& l);

std::string_view family_kind(const DegreeFamily& family);

class NoWitness : public Error {
 public:
  NoWitness(std::vector<PrimeDescriptor> blockers, const std::string& message)
      : Error(message), blockers_(std::move(blockers)) {}
  const std::vector<PrimeDescriptor>& blockers() const noexcept { return blockers_; }

 private:
  std::vector<PrimeDescriptor> blockers_;
};

}  // namespace mdeg
