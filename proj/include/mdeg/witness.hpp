#pragma once

// Decision procedures for infinite degree sets and the explicit witness
// family d(N,l) + 1 realized by pi_1-surjective maps N # N -> N, with
// degree-bookkeeping certificates.

#include <optional>
#include <string>
#include <vector>

#include "mdeg/families.hpp"

namespace mdeg {

struct FactorVerdict {
  PrimeDescriptor piece;
  GeometryClass geometry = GeometryClass::S3;
  DegreeClass degree_class;
};

struct Verdict {
  bool exists_infinite = false;  // some M has |D(M,N)| infinite
  bool self_infinite = false;    // |D(N)| infinite
  std::vector<FactorVerdict> per_factor;
  std::vector<FactorVerdict> blocking_factors;
};

/// Classifies every factor and fills both decisions. exists_infinite holds
/// iff no factor is in the Finite class.
Verdict decide_exists_infinite(const ManifoldExpression& m);

/// |D(N)| is infinite iff N is prime with an infinite class, or every prime
/// factor is spherical or S2xS1.
bool decide_self_infinite(const ManifoldExpression& m);

/// d = quotient * modulus + 1; quotient is empty when modulus does not divide d - 1.
struct AffineForm {
  Integer modulus;
  std::optional<Integer> quotient;
};

/// The four presentations of one degree. Forms that do not hold are empty.
struct FourForms {
  Integer d;
  std::vector<AffineForm> c1_list;  // per spherical factor
  std::vector<AffineForm> c2_list;  // per H2xE1 factor
  std::optional<Integer> c3;        // d = (2 c3 + 1)^2
  std::optional<Integer> c4;        // d = (12 c4 + 1)^4
};

/// What a degree has to satisfy to lie in every factor's family at once.
struct FormRequirements {
  std::vector<Integer> orders;
  std::vector<Integer> alphas;
  bool need_square = false;  // torus (semi-)bundle factors present
  bool need_fourth = false;  // Nil factors outside the bundle class present

  static FormRequirements of(const NormalForm& n);
};

/// Evaluates every form without failing; c3/c4 are reported whenever they hold.
FourForms evaluate_forms(const Integer& d, const FormRequirements& requirements);

/// Name and message of the first required form that does not hold.
std::optional<NotDecomposable> first_failure(const FourForms& forms,
                                             const FormRequirements& requirements);

/// Throws NotDecomposable naming the first form that fails.
FourForms four_forms(const Integer& d, const FormRequirements& requirements);
FourForms four_forms(const Integer& d, const NormalForm& n);

enum class RecipeKind { SelfMap, Pinch, ConnectedSum };

/// Construction certificate. SelfMap is a degree-d self-map of one factor
/// taken from its class family; Pinch is the quotient/wedge/fold map
/// R # R -> R of degree inner + 1; ConnectedSum glues equal-degree
/// pi_1-surjective maps factorwise.
struct MapRecipe {
  RecipeKind kind = RecipeKind::SelfMap;
  Integer degree;
  bool pi1_surjective = false;
  std::optional<PrimeDescriptor> factor;  // SelfMap only
  std::optional<Integer> parameter;       // SelfMap only: family parameter of degree
  std::vector<MapRecipe> children;

  static MapRecipe self_map(PrimeDescriptor factor, Integer degree, Integer parameter);
  static MapRecipe pinch(MapRecipe inner);
  static MapRecipe connected_sum(std::vector<MapRecipe> children);
};

struct RecipeCheck {
  bool valid = true;
  std::string path;  // "root", "root/0", "root/0/0", ...
  std::string message;
};

/// First violated invariant, depth first.
RecipeCheck validate_recipe(const MapRecipe& recipe);

struct WitnessSample {
  Integer l;
  Integer power;   // d(N,l) = (B l + 1)^4
  Integer degree;  // d(N,l) + 1
  FourForms forms;
};

struct WitnessPackage {
  ManifoldExpression source;
  ManifoldExpression domain;  // N # N
  Integer base;
  std::vector<WitnessSample> samples;
  Integer recipe_l;
  MapRecipe recipe;
};

std::vector<Integer> default_l_values();

/// Throws NoWitness when a factor has a finite degree class. An empty
/// l_values uses default_l_values().
WitnessPackage build_witness(const ManifoldExpression& m, std::vector<Integer> l_values = {});

std::string_view recipe_kind_name(RecipeKind kind);

}  // namespace mdeg
