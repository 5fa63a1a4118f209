#include "mdeg/witness.hpp"

#include "mdeg/parser.hpp"

namespace mdeg {

Verdict decide_exists_infinite(const ManifoldExpression& m) {
  Verdict out;
  for (const auto& piece : m.factors) {
    FactorVerdict row{piece, classify_geometry(piece), degree_class(piece)};
    if (row.degree_class.is_finite()) out.blocking_factors.push_back(row);
    out.per_factor.push_back(std::move(row));
  }
  out.exists_infinite = out.blocking_factors.empty();
  out.self_infinite = decide_self_infinite(m);
  return out;
}

bool decide_self_infinite(const ManifoldExpression& m) {
  if (m.factors.size() == 1) return !degree_class(m.factors.front()).is_finite();
  for (const auto& piece : m.factors) {
    auto kind = degree_class(piece).kind;
    if (kind != DegreeClassKind::Spherical && kind != DegreeClassKind::S2xS1) return false;
  }
  return !m.factors.empty();
}

FormRequirements FormRequirements::of(const NormalForm& n) {
  FormRequirements out;
  out.orders = n.orders();
  out.alphas = n.alphas();
  out.need_square = !n.torus_class.empty();
  out.need_fourth = !n.nil_other.empty();
  return out;
}

FourForms evaluate_forms(const Integer& d, const FormRequirements& requirements) {
  FourForms out;
  out.d = d;
  for (const auto& order : requirements.orders) out.c1_list.push_back({order, exact_div(d - 1, order)});
  for (const auto& a : requirements.alphas) out.c2_list.push_back({a, exact_div(d - 1, a)});
  if (auto r = exact_root(d, 2); r && mpz_odd_p(r->get_mpz_t()) != 0) out.c3 = (*r - 1) / 2;
  if (auto r = exact_root(d, 4)) {
    if (mod(*r, 12) == 1) {
      out.c4 = (*r - 1) / 12;
    } else if (mod(Integer(-*r), 12) == 1) {
      out.c4 = (-*r - 1) / 12;
    }
  }
  return out;
}

std::optional<NotDecomposable> first_failure(const FourForms& forms,
                                             const FormRequirements& requirements) {
  auto affine = [&forms](const std::vector<AffineForm>& list, const char* form) -> std::optional<NotDecomposable> {
    for (const auto& entry : list) {
      if (!entry.quotient)
        return NotDecomposable(form, std::string(form) + ": " + to_string(forms.d) +
                                         " - 1 is not divisible by " + to_string(entry.modulus));
    }
    return std::nullopt;
  };
  if (auto f = affine(forms.c1_list, "C1")) return f;
  if (auto f = affine(forms.c2_list, "C2")) return f;
  if (requirements.need_square && !forms.c3)
    return NotDecomposable("C3", "C3: " + to_string(forms.d) + " is not an odd square");
  if (requirements.need_fourth && !forms.c4)
    return NotDecomposable("C4", "C4: " + to_string(forms.d) +
                                     " is not the fourth power of an integer = 1 mod 12");
  return std::nullopt;
}

FourForms four_forms(const Integer& d, const FormRequirements& requirements) {
  FourForms out = evaluate_forms(d, requirements);
  if (auto failure = first_failure(out, requirements)) throw *failure;
  return out;
}

FourForms four_forms(const Integer& d, const NormalForm& n) {
  return four_forms(d, FormRequirements::of(n));
}

MapRecipe MapRecipe::self_map(PrimeDescriptor factor, Integer degree, Integer parameter) {
  MapRecipe out;
  out.kind = RecipeKind::SelfMap;
  out.degree = std::move(degree);
  out.factor = std::move(factor);
  out.parameter = std::move(parameter);
  return out;
}

MapRecipe MapRecipe::pinch(MapRecipe inner) {
  MapRecipe out;
  out.kind = RecipeKind::Pinch;
  out.degree = inner.degree + 1;
  out.pi1_surjective = true;
  out.children.push_back(std::move(inner));
  return out;
}

MapRecipe MapRecipe::connected_sum(std::vector<MapRecipe> children) {
  MapRecipe out;
  out.kind = RecipeKind::ConnectedSum;
  if (!children.empty()) out.degree = children.front().degree;
  out.pi1_surjective = true;
  out.children = std::move(children);
  return out;
}

namespace {

RecipeCheck violation(const std::string& path, std::string message) {
  return RecipeCheck{false, path, std::move(message)};
}

RecipeCheck check_node(const MapRecipe& node, const std::string& path) {
  switch (node.kind) {
    case RecipeKind::SelfMap: {
      if (!node.children.empty()) return violation(path, "self-map has children");
      if (node.pi1_surjective) return violation(path, "bare self-map carries a surjectivity claim");
      if (!node.factor) return violation(path, "self-map without a factor");
      DegreeClass c = degree_class(*node.factor);
      if (c.is_finite())
        return violation(path, "factor " + render(*node.factor) + " has no infinite degree family");
      Membership m = member(family_for_class(c), node.degree);
      if (!m.member)
        return violation(path, "degree " + to_string(node.degree) + " is not in the " +
                                   std::string(class_name(c.kind)) + " family of " +
                                   render(*node.factor));
      if (node.parameter && *node.parameter != *m.parameter)
        return violation(path, "family parameter " + to_string(*node.parameter) + " does not produce degree " +
                                   to_string(node.degree) + " (expected " + to_string(*m.parameter) + ")");
      return {};
    }
    case RecipeKind::Pinch: {
      if (node.children.size() != 1) return violation(path, "pinch needs exactly one inner map");
      if (!node.pi1_surjective) return violation(path, "pinch must be marked pi1-surjective");
      const Integer& inner = node.children.front().degree;
      if (node.degree != inner + 1)
        return violation(path, "pinch degree " + to_string(node.degree) + " != inner degree " +
                                   to_string(inner) + " + 1");
      return {};
    }
    case RecipeKind::ConnectedSum: {
      if (node.children.empty()) return violation(path, "connected sum without summands");
      if (!node.pi1_surjective) return violation(path, "connected sum must be marked pi1-surjective");
      const Integer& first = node.children.front().degree;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        const auto& child = node.children[i];
        if (!child.pi1_surjective)
          return violation(path + "/" + std::to_string(i), "summand is not pi1-surjective");
        if (child.degree != first)
          return violation(path, "unequal child degrees " + to_string(first) + " != " + to_string(child.degree));
      }
      if (node.degree != first)
        return violation(path, "connected sum degree " + to_string(node.degree) +
                                   " != common child degree " + to_string(first));
      return {};
    }
  }
  return violation(path, "unknown node kind");
}

RecipeCheck check_tree(const MapRecipe& node, const std::string& path) {
  if (auto here = check_node(node, path); !here.valid) return here;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (auto below = check_tree(node.children[i], path + "/" + std::to_string(i)); !below.valid)
      return below;
  }
  return {};
}

}  // namespace

RecipeCheck validate_recipe(const MapRecipe& recipe) { return check_tree(recipe, "root"); }

std::vector<Integer> default_l_values() { return {0, 1, 2, 3, 4}; }

WitnessPackage build_witness(const ManifoldExpression& m, std::vector<Integer> l_values) {
  if (l_values.empty()) l_values = default_l_values();
  NormalForm n = normal_form(m);
  FormRequirements requirements = FormRequirements::of(n);

  WitnessPackage out;
  out.source = m;
  out.domain = m;
  out.domain.factors.insert(out.domain.factors.end(), m.factors.begin(), m.factors.end());
  out.base = combined_base(n);

  for (const auto& l : l_values) {
    Integer power = witness_power(out.base, l);
    out.samples.push_back({l, power, power + 1, four_forms(power, requirements)});
  }

  out.recipe_l = l_values.front();
  const Integer& d = out.samples.front().power;
  std::vector<MapRecipe> summands;
  for (const auto& piece : m.factors) {
    Membership fit = member(family_for_class(degree_class(piece)), d);
    if (!fit.member)
      throw Error("internal: witness power " + to_string(d) + " missed the family of " + render(piece));
    summands.push_back(MapRecipe::pinch(MapRecipe::self_map(piece, d, *fit.parameter)));
  }
  out.recipe = MapRecipe::connected_sum(std::move(summands));
  return out;
}

std::string_view recipe_kind_name(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::SelfMap: return "SelfMap";
    case RecipeKind::Pinch: return "Pinch";
    case RecipeKind::ConnectedSum: return "ConnectedSum";
  }
  return "";
}

}  // namespace mdeg
