#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psiminer {

#define PSIMINER_CST_KINDS(X) \
  X(FILE)                     \
  X(CLASS_DECL)               \
  X(MODIFIER_LIST)            \
  X(MODIFIER)                 \
  X(ANNOTATION)               \
  X(FIELD_DECL)               \
  X(METHOD_DECL)              \
  X(CONSTRUCTOR_DECL)         \
  X(PARAMETER_LIST)           \
  X(PARAMETER)                \
  X(TYPE_REF)                 \
  X(CODE_BLOCK)               \
  X(LOCAL_VAR_DECL)           \
  X(IF_STMT)                  \
  X(WHILE_STMT)               \
  X(FOR_STMT)                 \
  X(RETURN_STMT)              \
  X(EXPR_STMT)                \
  X(ASSIGNMENT_EXPR)          \
  X(BINARY_EXPR)              \
  X(UNARY_EXPR)               \
  X(METHOD_CALL)              \
  X(ARGUMENT_LIST)            \
  X(REFERENCE_EXPR)           \
  X(NEW_EXPR)                 \
  X(ARRAY_ACCESS_EXPR)        \
  X(PAREN_EXPR)               \
  X(LITERAL)                  \
  X(IDENTIFIER)               \
  X(KEYWORD)                  \
  X(OPERATOR)                 \
  X(PUNCTUATION)              \
  X(WHITE_SPACE)              \
  X(LINE_COMMENT)             \
  X(BLOCK_COMMENT)

enum class CstKind {
#define PSIMINER_ENUM_ENTRY(name) name,
  PSIMINER_CST_KINDS(PSIMINER_ENUM_ENTRY)
#undef PSIMINER_ENUM_ENTRY
};

std::string_view kind_name(CstKind kind);
std::optional<CstKind> kind_from_name(std::string_view name);
const std::vector<CstKind>& all_kinds();

// Leaf kinds are the ones the lexer emits.
bool is_token_kind(CstKind kind);
// Whitespace and comments.
bool is_trivia(CstKind kind);

struct SourceSpan {
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;  // exclusive
  std::size_t line_start = 1;
  std::size_t line_end = 1;

  std::size_t line_count() const { return line_end - line_start + 1; }
  bool contains(const SourceSpan& other) const {
    return byte_start <= other.byte_start && other.byte_end <= byte_end;
  }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Token {
  CstKind kind;
  std::string text;
  SourceSpan span;
  std::size_t column = 1;

  friend bool operator==(const Token&, const Token&) = default;
};

struct CstNode {
  CstKind kind = CstKind::FILE;
  SourceSpan span;
  std::string text;  // leaves only
  std::vector<CstNode> children;

  bool is_leaf() const { return is_token_kind(kind); }
  friend bool operator==(const CstNode&, const CstNode&) = default;
};

// In-order concatenation of leaf texts.
std::string reconstruct(const CstNode& root);

// Leaves in source order.
std::vector<const CstNode*> leaves(const CstNode& root);

}  // namespace psiminer
