#include "mdeg/report.hpp"

#include <sstream>

namespace mdeg {

namespace {

Json header(std::string_view command, std::string_view input) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}};
}

Json factor_rows(const Verdict& verdict) {
  Json rows = Json::array();
  for (const auto& row : verdict.per_factor) rows.push_back(to_json(row));
  return rows;
}

Json with_body(std::string_view command, std::string_view input, const ManifoldExpression& m,
               const Verdict& verdict, bool decisions) {
  Json out = header(command, input);
  out["normalized"] = render(normalize(m));
  out["factors"] = factor_rows(verdict);
  if (decisions) out["decisions"] = decisions_json(verdict);
  return out;
}

std::string trim(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Json& value, std::size_t indent, std::ostringstream& out);

void emit_entry(std::string_view key, const Json& value, std::size_t indent, std::ostringstream& out) {
  std::string pad(indent, ' ');
  if (is_scalar(value)) {
    out << pad << key << ": " << scalar_text(value) << "\n";
  } else if (value.empty()) {
    out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
  } else {
    out << pad << key << ":\n";
    emit(value, indent + 2, out);
  }
}

void emit(const Json& value, std::size_t indent, std::ostringstream& out) {
  std::string pad(indent, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) emit_entry(key, item, indent, out);
    return;
  }
  for (const auto& item : value) {
    if (is_scalar(item)) {
      out << pad << "- " << scalar_text(item) << "\n";
    } else if (item.empty()) {
      out << pad << "- " << (item.is_array() ? "[]" : "{}") << "\n";
    } else {
      std::ostringstream block;
      emit(item, indent + 2, block);
      out << pad << "- " << block.str().substr(indent + 2);
    }
  }
}

}  // namespace

Json parse_report(std::string_view input, const ManifoldExpression& m) {
  Json out = header("parse", input);
  out["normalized"] = render(normalize(m));
  Json factors = Json::array();
  for (const auto& piece : m.factors) factors.push_back(render(piece));
  out["factors"] = std::move(factors);
  return out;
}

Json classify_report(std::string_view input, const ManifoldExpression& m) {
  return with_body("classify", input, m, decide_exists_infinite(m), false);
}

Json decide_report(std::string_view input, const ManifoldExpression& m) {
  return with_body("decide", input, m, decide_exists_infinite(m), true);
}

Json witness_report(std::string_view input, const ManifoldExpression& m,
                    const std::vector<Integer>& l_values) {
  WitnessPackage package = build_witness(m, l_values);
  Json out = with_body("witness", input, m, decide_exists_infinite(m), true);
  Json witness = to_json(package);
  RecipeCheck check = validate_recipe(package.recipe);
  witness["recipe_check"] = {{"valid", check.valid}, {"path", check.path}, {"message", check.message}};
  out["witness"] = std::move(witness);
  return out;
}

Json blocked_witness_report(std::string_view input, const ManifoldExpression& m,
                            const NoWitness& error) {
  Json out = with_body("witness", input, m, decide_exists_infinite(m), true);
  out["witness"] = nullptr;
  Json blockers = Json::array();
  for (const auto& piece : error.blockers()) blockers.push_back(render(piece));
  out["error"] = {{"kind", "NoWitness"}, {"message", error.what()}, {"blockers", std::move(blockers)}};
  return out;
}

Json check_report(std::string_view input, const ManifoldExpression& m, const Integer& degree) {
  Verdict verdict = decide_exists_infinite(m);
  Json out = with_body("check", input, m, verdict, true);
  out["degree"] = to_string(degree);

  bool in_all = true;
  Json membership = Json::array();
  for (const auto& row : verdict.per_factor) {
    Json entry = {{"piece", render(row.piece)}, {"degree_class", class_name(row.degree_class.kind)}};
    if (row.degree_class.is_finite()) {
      entry["member"] = false;
      entry["family"] = nullptr;
      in_all = false;
    } else {
      DegreeFamily family = family_for_class(row.degree_class);
      Membership fit = member(family, degree);
      entry["member"] = fit.member;
      entry["family"] = to_json(family);
      if (fit.parameter) entry["parameter"] = to_string(*fit.parameter);
      if (fit.root) entry["root"] = to_string(*fit.root);
      in_all = in_all && fit.member;
    }
    membership.push_back(std::move(entry));
  }
  out["membership"] = std::move(membership);
  out["in_all_families"] = in_all;

  FormRequirements requirements = FormRequirements::of(normal_form(m));
  FourForms forms = evaluate_forms(degree, requirements);
  auto failure = first_failure(forms, requirements);
  out["four_forms"] = {{"holds", !failure.has_value()},
                       {"failed_form", failure ? Json(failure->form()) : Json(nullptr)},
                       {"message", failure ? Json(failure->what()) : Json(nullptr)},
                       {"forms", to_json(forms)}};
  return out;
}

Json enumerate_report(std::string_view input, const ManifoldExpression& m, std::size_t count) {
  Verdict verdict = decide_exists_infinite(m);
  Json out = with_body("enumerate", input, m, verdict, false);
  out["count"] = count;
  Json families = Json::array();
  for (const auto& row : verdict.per_factor) {
    Json entry = {{"piece", render(row.piece)}};
    if (row.degree_class.is_finite()) {
      entry["family"] = nullptr;
      entry["members"] = Json::array();
    } else {
      DegreeFamily family = family_for_class(row.degree_class);
      Json members = Json::array();
      for (const auto& v : enumerate(family, count)) members.push_back(to_string(v));
      entry["family"] = to_json(family);
      entry["members"] = std::move(members);
    }
    families.push_back(std::move(entry));
  }
  out["families"] = std::move(families);
  if (verdict.exists_infinite) {
    DegreeFamily witness = witness_family(normal_form(m));
    Json members = Json::array();
    for (const auto& v : enumerate(witness, count)) members.push_back(to_string(v));
    out["witness_family"] = {{"family", to_json(witness)}, {"members", std::move(members)}};
  } else {
    out["witness_family"] = nullptr;
  }
  return out;
}

Json parse_error_report(std::string_view command, std::string_view input, const ParseError& error) {
  Json out = header(command, input);
  out["error"] = to_json(error);
  return out;
}

Json batch_report(std::istream& lines) {
  Json reports = Json::array();
  std::size_t parsed = 0, errors = 0, infinite = 0, finite = 0;
  std::string raw;
  for (std::size_t number = 1; std::getline(lines, raw); ++number) {
    std::string text = trim(raw);
    if (text.empty() || text.rfind("--", 0) == 0) continue;
    Json entry = {{"line", number}, {"input", text}};
    ParseResult result = parse(text);
    if (const auto* error = std::get_if<ParseError>(&result)) {
      entry["error"] = to_json(*error);
      ++errors;
    } else {
      const auto& m = std::get<ManifoldExpression>(result);
      try {
        Verdict verdict = decide_exists_infinite(m);
        entry["normalized"] = render(normalize(m));
        entry["factors"] = factor_rows(verdict);
        entry["decisions"] = decisions_json(verdict);
        ++parsed;
        ++(verdict.exists_infinite ? infinite : finite);
      } catch (const std::exception& e) {
        entry["error"] = {{"kind", "Internal"}, {"message", e.what()}};
        ++errors;
      }
    }
    reports.push_back(std::move(entry));
  }
  Json out = {{"schema_version", kSchemaVersion}, {"command", "batch"}};
  out["reports"] = std::move(reports);
  out["summary"] = {{"reports", parsed + errors},
                    {"parsed", parsed},
                    {"errors", errors},
                    {"exists_infinite_true", infinite},
                    {"exists_infinite_false", finite}};
  return out;
}

std::string render_human(const Json& report) {
  std::ostringstream out;
  emit(report, 0, out);
  return out.str();
}

}  // namespace mdeg
