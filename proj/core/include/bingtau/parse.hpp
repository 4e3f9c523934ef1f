#pragma once

#include <string_view>

#include "bingtau/expr.hpp"
#include "bingtau/tree.hpp"

namespace bingtau {

// Parses the expression DSL.  Whitespace-insensitive.
//
//   expr := atom | expr "#" atom
//   atom := NAME | "O" | "m(" expr ")" | "r(" expr ")" | "-(" expr ")"
//         | "D[" expr "," INT "](" expr ("," INT)? ")"
//         | "Wh+(" expr ("," INT)? ")" | "Wh-(" expr ("," INT)? ")"
//
// NAME is [A-Za-z0-9_]+ with "O" reserved for the unknot; an omitted twist
// defaults to 0.  A "#" chain denotes an iterated connected sum; it is
// assembled right-nested so that parsing the canonical serialization of a
// normal form reproduces the normal form exactly.
//
// Throws ParseError (with byte offset) for syntax errors and out-of-range
// twists.
KnotExpr parse_expr(std::string_view text);

// Parses a tree shape:  tree := "*" | "(" tree "," tree ")".
TreeShape parse_tree(std::string_view text);

}  // namespace bingtau
