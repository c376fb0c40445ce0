#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/cst.hpp"

namespace psiminer {

inline constexpr std::string_view kNoType = "NO_TYPE";

struct AstNode {
  CstKind kind = CstKind::FILE;
  // Kind name, with the operator appended for unary/binary/compound
  // assignment nodes, e.g. "BINARY_EXPR:+".
  std::string node_type;
  std::optional<std::string> token;          // leaves only
  std::optional<std::string> resolved_type;  // filled by annotate_types
  SourceSpan span;
  std::vector<AstNode> children;

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const AstNode&, const AstNode&) = default;
};

// Node kinds removed while building the AST. WHITE_SPACE and PUNCTUATION are
// always part of the set. Leaf kinds disappear with their text; an ignored
// internal kind is removed node-wise and its children are spliced into the
// parent.
class IgnoreList {
 public:
  IgnoreList();  // only the always-dropped kinds
  explicit IgnoreList(std::set<CstKind> kinds);

  // {WHITE_SPACE, PUNCTUATION, KEYWORD, OPERATOR}
  static IgnoreList defaults();
  // Throws ConfigError naming every unknown or disallowed entry.
  static IgnoreList from_names(const std::vector<std::string>& names);

  bool contains(CstKind kind) const { return kinds_.count(kind) != 0; }
  const std::set<CstKind>& kinds() const { return kinds_; }

 private:
  std::set<CstKind> kinds_;
};

// Depth-first simplification of a FILE-rooted CST.
//
// Besides dropping ignored kinds: TYPE_REF becomes a single leaf carrying
// its whitespace-free text; PAREN_EXPR collapses into its expression; empty
// ARGUMENT_LIST / PARAMETER_LIST vanish; any other internal node left
// without children becomes a leaf whose token is its non-trivia source text
// (e.g. MODIFIER "static", REFERENCE_EXPR "this", CODE_BLOCK "{}").
AstNode build_ast(const CstNode& root, const IgnoreList& ignore);

std::size_t count_nodes(const AstNode& tree);

std::vector<const AstNode*> ast_leaves(const AstNode& tree);
std::vector<AstNode*> ast_leaves(AstNode& tree);

// Concatenated text of non-trivia leaves, i.e. source with whitespace and
// comments removed.
std::string compact_text(const CstNode& node);

}  // namespace psiminer
