#include "mdeg/serialize.hpp"

#include <cstdint>
#include <cstdio>

namespace mdeg {

namespace {

Json optional_integer(const std::optional<Integer>& value) {
  return value ? Json(to_string(*value)) : Json(nullptr);
}

Json class_parameters(const DegreeClass& c) {
  Json out = Json::object();
  if (c.kind == DegreeClassKind::Spherical) out["order"] = to_string(c.parameter);
  if (c.kind == DegreeClassKind::H2xE1) out["alpha"] = to_string(c.parameter);
  return out;
}

}  // namespace

Json to_json(const DegreeFamily& family) {
  struct Visitor {
    Json operator()(const AllIntegers&) const { return Json::object(); }
    Json operator()(const APPlusOne& f) const { return {{"modulus", to_string(f.modulus)}}; }
    Json operator()(const OddSquares&) const { return Json::object(); }
    Json operator()(const FourthPowersMod12&) const { return Json::object(); }
    Json operator()(const WitnessFourth& f) const { return {{"base", to_string(f.base)}}; }
  };
  Json inner = {{"kind", family_kind(DegreeFamily{family.base, 0})},
                {"parameters", std::visit(Visitor{}, family.base)}};
  if (!family.shifted()) return inner;
  return {{"kind", "Shifted"},
          {"parameters", {{"offset", to_string(family.offset)}, {"inner", inner}}}};
}

Json to_json(const FourForms& forms) {
  auto affine = [](const std::vector<AffineForm>& list) {
    Json out = Json::array();
    for (const auto& entry : list)
      out.push_back({{"modulus", to_string(entry.modulus)}, {"quotient", optional_integer(entry.quotient)}});
    return out;
  };
  return {{"d", to_string(forms.d)},
          {"c1", affine(forms.c1_list)},
          {"c2", affine(forms.c2_list)},
          {"c3", optional_integer(forms.c3)},
          {"c4", optional_integer(forms.c4)}};
}

Json to_json(const MapRecipe& recipe) {
  Json out = {{"kind", recipe_kind_name(recipe.kind)},
              {"degree", to_string(recipe.degree)},
              {"pi1_surjective", recipe.pi1_surjective}};
  if (recipe.factor) out["factor"] = render(*recipe.factor);
  if (recipe.parameter) out["parameter"] = to_string(*recipe.parameter);
  Json children = Json::array();
  for (const auto& child : recipe.children) children.push_back(to_json(child));
  out["children"] = std::move(children);
  return out;
}

Json to_json(const ParseError& error) {
  Json out = {{"kind", kind_name(error.kind)},
              {"message", error.message},
              {"line", error.span.line},
              {"column", error.span.column},
              {"length", error.span.length}};
  if (!error.constraint.empty()) out["constraint"] = error.constraint;
  return out;
}

Json to_json(const FactorVerdict& row) {
  Json out = {{"piece", render(row.piece)},
              {"geometry", geometry_name(row.geometry)},
              {"degree_class", class_name(row.degree_class.kind)},
              {"parameters", class_parameters(row.degree_class)}};
  if (auto note = geometry_note(row.piece); !note.empty()) out["geometry_note"] = note;
  if (row.degree_class.is_finite()) {
    out["verdict"] = {{"tag", reason_tag(row.degree_class.reason)},
                      {"reason", reason_text(row.degree_class.reason)}};
    out["family"] = nullptr;
  } else {
    out["family"] = to_json(family_for_class(row.degree_class));
  }
  return out;
}

Json decisions_json(const Verdict& verdict) {
  Json blockers = Json::array();
  for (const auto& row : verdict.blocking_factors)
    blockers.push_back({{"piece", render(row.piece)},
                        {"verdict", reason_tag(row.degree_class.reason)},
                        {"reason", reason_text(row.degree_class.reason)}});
  return {{"exists_infinite", verdict.exists_infinite},
          {"self_infinite", verdict.self_infinite},
          {"blocking_factors", std::move(blockers)}};
}

Json to_json(const WitnessPackage& witness) {
  Json samples = Json::array();
  for (const auto& sample : witness.samples)
    samples.push_back({{"l", to_string(sample.l)},
                       {"power", to_string(sample.power)},
                       {"degree", to_string(sample.degree)},
                       {"four_forms", to_json(sample.forms)}});
  DegreeFamily family = make_witness_fourth(witness.base);
  family.offset = 1;
  return {{"target", render(witness.source)},
          {"domain", render(witness.domain)},
          {"base", to_string(witness.base)},
          {"family", to_json(family)},
          {"samples", std::move(samples)},
          {"recipe_l", to_string(witness.recipe_l)},
          {"recipe_digest", recipe_digest(witness.recipe)},
          {"recipe", to_json(witness.recipe)}};
}

std::string recipe_digest(const MapRecipe& recipe) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json(recipe).dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace mdeg
