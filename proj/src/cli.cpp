#include "mdeg/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "mdeg/report.hpp"

namespace mdeg {

namespace {

std::optional<Integer> parse_integer(const std::string& text) {
  Integer value;
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || value.set_str(digits, 10) != 0) return std::nullopt;
  return value;
}

// "a..b", "a", or "a,b,c"
std::optional<std::vector<Integer>> parse_l_spec(const std::string& spec) {
  std::vector<Integer> out;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    auto lo = parse_integer(spec.substr(0, dots));
    auto hi = parse_integer(spec.substr(dots + 2));
    if (!lo || !hi || *lo > *hi || *hi - *lo > 10000) return std::nullopt;
    for (Integer l = *lo; l <= *hi; ++l) out.push_back(l);
    return out;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    auto piece = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto value = parse_integer(piece);
    if (!value) return std::nullopt;
    out.push_back(*value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Emitter {
  bool json;
  std::ostream& out;
  std::ostream& err;

  void report(const Json& doc) const {
    if (json) {
      out << doc.dump(2) << "\n";
    } else {
      out << render_human(doc);
    }
  }

  int parse_failure(const std::string& command, const std::string& input, const ParseError& error) const {
    if (json) out << parse_error_report(command, input, error).dump(2) << "\n";
    err << "error: " << format_error(input, error);
    return kExitParse;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mapping-degree finiteness for closed oriented 3-manifolds", "mdeg"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string l_spec;
  std::string degree_option;
  std::size_t max_enum = 5;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--l", l_spec, "Witness parameters: a..b, a, or a,b,c (default 0..4)");
  app.add_option("--degree", degree_option, "Degree to check");
  app.add_option("--max-enum", max_enum, "Members to list per family")->check(CLI::Range(1, 100000));

  std::string expr;
  std::string degree_arg;
  std::string path;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and print the normalized expression");
  auto* classify_cmd = app.add_subcommand("classify", "Geometry and degree class of each factor");
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether degree sets can be infinite");
  auto* witness_cmd = app.add_subcommand("witness", "Emit the witness degree family with certificate");
  auto* check_cmd = app.add_subcommand("check", "Test one degree against every factor family");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the smallest members of each family");
  auto* batch_cmd = app.add_subcommand("batch", "Decide every expression in a file");
  for (auto* cmd : {parse_cmd, classify_cmd, decide_cmd, witness_cmd, check_cmd, enumerate_cmd})
    cmd->add_option("expr", expr, "Manifold expression")->required();
  check_cmd->add_option("degree", degree_arg, "Degree to check");
  batch_cmd->add_option("path", path, "File with one expression per line")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Emitter emit{json, out, err};
  try {
    if (batch_cmd->parsed()) {
      std::ifstream file(path);
      if (!file) {
        err << "error: cannot read " << path << "\n";
        return kExitParse;
      }
      emit.report(batch_report(file));
      return kExitOk;
    }

    std::string command = app.get_subcommands().front()->get_name();
    ParseResult parsed = parse(expr);
    if (const auto* error = std::get_if<ParseError>(&parsed))
      return emit.parse_failure(command, expr, *error);
    const auto& m = std::get<ManifoldExpression>(parsed);

    if (parse_cmd->parsed()) {
      emit.report(parse_report(expr, m));
    } else if (classify_cmd->parsed()) {
      emit.report(classify_report(expr, m));
    } else if (decide_cmd->parsed()) {
      emit.report(decide_report(expr, m));
    } else if (witness_cmd->parsed()) {
      std::vector<Integer> l_values;
      if (!l_spec.empty()) {
        auto values = parse_l_spec(l_spec);
        if (!values) {
          err << "error: --l expects a..b, a, or a,b,c (at most 10001 values)\n";
          return kExitParse;
        }
        l_values = std::move(*values);
      }
      try {
        emit.report(witness_report(expr, m, l_values));
      } catch (const NoWitness& e) {
        emit.report(blocked_witness_report(expr, m, e));
        err << "error: " << e.what() << "\n";
        return kExitNoWitness;
      }
    } else if (check_cmd->parsed()) {
      const std::string& text = degree_arg.empty() ? degree_option : degree_arg;
      auto degree = parse_integer(text);
      if (!degree) {
        err << "error: check needs an integer degree\n";
        return kExitParse;
      }
      emit.report(check_report(expr, m, *degree));
    } else if (enumerate_cmd->parsed()) {
      emit.report(enumerate_report(expr, m, max_enum));
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace mdeg
