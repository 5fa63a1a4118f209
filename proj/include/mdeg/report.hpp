#pragma once

// Report documents behind every CLI command. A report is built as JSON and
// the human form is rendered from the same tree, so both carry the same fields.

#include <istream>
#include <string_view>
#include <vector>

#include "mdeg/serialize.hpp"

namespace mdeg {

inline constexpr std::string_view kSchemaVersion = "1";

Json parse_report(std::string_view input, const ManifoldExpression& m);
Json classify_report(std::string_view input, const ManifoldExpression& m);
Json decide_report(std::string_view input, const ManifoldExpression& m);

/// Throws NoWitness for targets with a finite-class factor.
Json witness_report(std::string_view input, const ManifoldExpression& m,
                    const std::vector<Integer>& l_values);

/// Decision report plus an error object listing the blockers.
Json blocked_witness_report(std::string_view input, const ManifoldExpression& m,
                            const NoWitness& error);

Json check_report(std::string_view input, const ManifoldExpression& m, const Integer& degree);
Json enumerate_report(std::string_view input, const ManifoldExpression& m, std::size_t count);
Json parse_error_report(std::string_view command, std::string_view input, const ParseError& error);

/// One decision report per expression line ("--" comments and blank lines
/// skipped) followed by a summary. Failing lines embed their error.
Json batch_report(std::istream& lines);

/// Indented key/value rendering of a report.
std::string render_human(const Json& report);

}  // namespace mdeg
