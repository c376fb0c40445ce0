#include "core/cst.hpp"

#include <array>

namespace psiminer {
namespace {

constexpr std::array kKindNames = {
#define PSIMINER_NAME_ENTRY(name) std::string_view(#name),
    PSIMINER_CST_KINDS(PSIMINER_NAME_ENTRY)
#undef PSIMINER_NAME_ENTRY
};

void collect_leaves(const CstNode& node, std::vector<const CstNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

}  // namespace

std::string_view kind_name(CstKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<CstKind> kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<CstKind>(i);
  }
  return std::nullopt;
}

const std::vector<CstKind>& all_kinds() {
  static const std::vector<CstKind> kinds = [] {
    std::vector<CstKind> v;
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
      v.push_back(static_cast<CstKind>(i));
    }
    return v;
  }();
  return kinds;
}

bool is_token_kind(CstKind kind) {
  switch (kind) {
    case CstKind::LITERAL:
    case CstKind::IDENTIFIER:
    case CstKind::KEYWORD:
    case CstKind::OPERATOR:
    case CstKind::PUNCTUATION:
    case CstKind::WHITE_SPACE:
    case CstKind::LINE_COMMENT:
    case CstKind::BLOCK_COMMENT:
      return true;
    default:
      return false;
  }
}

bool is_trivia(CstKind kind) {
  return kind == CstKind::WHITE_SPACE || kind == CstKind::LINE_COMMENT ||
         kind == CstKind::BLOCK_COMMENT;
}

std::string reconstruct(const CstNode& root) {
  std::string out;
  for (const CstNode* leaf : leaves(root)) out += leaf->text;
  return out;
}

std::vector<const CstNode*> leaves(const CstNode& root) {
  std::vector<const CstNode*> out;
  collect_leaves(root, out);
  return out;
}

}  // namespace psiminer
