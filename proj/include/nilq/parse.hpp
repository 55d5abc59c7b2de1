#pragma once

#include <string>

#include "nilq/presentation.hpp"

namespace nilq {

// Line-oriented presentation format:
//   class <n>          exactly once
//   gen <name>[:<w>]   at least once, order defines the basis order
//   rel <expr>         zero or more
//   # comment          anywhere; blank lines ignored
// Expression grammar (whitespace-insensitive):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational '*'] factor
//   factor   := name | '[' expr ',' expr ']'
//   rational := int ['/' posint]
LiePresentation parse_presentation(const std::string& text);

// Parses one expression over a known alphabet into normal form.
// line/col_offset seed the reported positions.
LieElement parse_expression(const std::string& text, const Alphabet& alphabet,
                            int class_cap, int line = 1, int col_offset = 0);

// Identifiers in order of first appearance; used to infer an alphabet for
// free-standing expressions (bch subcommand).
std::vector<std::string> scan_identifiers(const std::string& text);

// Canonical serialization; parsing it back recovers an identical structure.
std::string serialize_presentation(const LiePresentation& pres);

}  // namespace nilq
