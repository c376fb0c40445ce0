#pragma once

#include <string_view>

#include "core/cst.hpp"

namespace psiminer {

// Parses one source file into a lossless FILE-rooted concrete syntax tree.
//
// Accepted subset: optional package/import header lines (kept as raw tokens
// under FILE), then top-level classes with optional extends/implements,
// fields, methods, constructors, modifiers and marker annotations. Statements:
// local variables, expression statements, if/else, while, basic for, return,
// nested blocks. Expressions: literals, names, field access, calls, `new`,
// array access, unary, binary, assignment, parentheses.
//
// Throws LexError or ParseError. `path` is used only in diagnostics.
CstNode parse_file(std::string_view source, std::string_view path = {});

}  // namespace psiminer
