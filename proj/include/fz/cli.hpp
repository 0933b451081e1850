#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fz/criterion.hpp"

namespace fz {

constexpr int kSchemaVersion = 1;

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitTorsion = 0, kExitNotTorsion = 1, kExitUsage = 2, kExitDisagreement = 3 };

/// "b0; a1; ...; a_{n-1}" with exactly n entries in the rational grammar.
std::vector<RationalFunction> parse_tuple_entries(std::string_view text, const FieldPtr& f, int n);
ShuffleTuple parse_tuple(std::string_view text, const FieldPtr& f, int r, int s);
std::string format_tuple(const ShuffleTuple& c);

/// One corpus line "r s | b0; a1; ...".
ShuffleTuple parse_corpus_line(std::string_view line, const FieldPtr& f);

/// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fz
