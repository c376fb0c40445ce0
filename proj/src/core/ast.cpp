#include "core/ast.hpp"

#include <stdexcept>
#include <utility>

#include "core/errors.hpp"

namespace psiminer {
namespace {

std::set<CstKind> with_mandatory(std::set<CstKind> kinds) {
  kinds.insert(CstKind::WHITE_SPACE);
  kinds.insert(CstKind::PUNCTUATION);
  return kinds;
}

std::string node_type_for(const CstNode& node) {
  std::string type(kind_name(node.kind));
  if (node.kind != CstKind::BINARY_EXPR && node.kind != CstKind::UNARY_EXPR &&
      node.kind != CstKind::ASSIGNMENT_EXPR) {
    return type;
  }
  bool seen_operand = false;
  for (const auto& child : node.children) {
    if (child.kind == CstKind::OPERATOR) {
      std::string op = child.text;
      if (node.kind == CstKind::ASSIGNMENT_EXPR && op == "=") return type;
      // '|' is the path delimiter in the code2seq format.
      if (op == "||") op = "or";
      if (node.kind == CstKind::UNARY_EXPR && seen_operand) op = "post" + op;
      return type + ":" + op;
    }
    if (!is_trivia(child.kind)) seen_operand = true;
  }
  return type;
}

AstNode make_leaf(const CstNode& node, std::string token) {
  AstNode leaf;
  leaf.kind = node.kind;
  leaf.node_type = node_type_for(node);
  leaf.token = std::move(token);
  leaf.span = node.span;
  return leaf;
}

void convert(const CstNode& node, const IgnoreList& ignore,
             std::vector<AstNode>& out) {
  if (node.is_leaf()) {
    if (!ignore.contains(node.kind)) out.push_back(make_leaf(node, node.text));
    return;
  }
  if (node.kind == CstKind::TYPE_REF && !ignore.contains(node.kind)) {
    out.push_back(make_leaf(node, compact_text(node)));
    return;
  }

  std::vector<AstNode> children;
  for (const auto& child : node.children) convert(child, ignore, children);

  if (ignore.contains(node.kind)) {
    for (auto& c : children) out.push_back(std::move(c));
    return;
  }
  if (node.kind == CstKind::PAREN_EXPR && children.size() == 1) {
    out.push_back(std::move(children.front()));
    return;
  }
  if (children.empty()) {
    if (node.kind == CstKind::ARGUMENT_LIST ||
        node.kind == CstKind::PARAMETER_LIST) {
      return;
    }
    std::string text = compact_text(node);
    if (!text.empty()) out.push_back(make_leaf(node, std::move(text)));
    return;
  }

  AstNode result;
  result.kind = node.kind;
  result.node_type = node_type_for(node);
  result.span = node.span;
  result.children = std::move(children);
  out.push_back(std::move(result));
}

template <typename Node, typename Out>
void collect_leaves(Node& node, Out& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (auto& child : node.children) collect_leaves(child, out);
}

}  // namespace

IgnoreList::IgnoreList() : kinds_(with_mandatory({})) {}

IgnoreList::IgnoreList(std::set<CstKind> kinds)
    : kinds_(with_mandatory(std::move(kinds))) {}

IgnoreList IgnoreList::defaults() {
  return IgnoreList({CstKind::KEYWORD, CstKind::OPERATOR});
}

IgnoreList IgnoreList::from_names(const std::vector<std::string>& names) {
  std::set<CstKind> kinds;
  std::string problems;
  for (const auto& name : names) {
    const auto kind = kind_from_name(name);
    if (!kind) {
      problems += (problems.empty() ? "" : "; ") +
                  std::string("unknown node kind '") + name + "'";
    } else if (*kind == CstKind::FILE) {
      problems += (problems.empty() ? "" : "; ") +
                  std::string("FILE cannot be ignored");
    } else {
      kinds.insert(*kind);
    }
  }
  if (!problems.empty()) throw ConfigError("ignore_node_kinds: " + problems);
  return IgnoreList(std::move(kinds));
}

std::string compact_text(const CstNode& node) {
  if (node.is_leaf()) return is_trivia(node.kind) ? std::string() : node.text;
  std::string out;
  for (const auto& child : node.children) out += compact_text(child);
  return out;
}

AstNode build_ast(const CstNode& root, const IgnoreList& ignore) {
  if (root.kind != CstKind::FILE) {
    throw std::invalid_argument("build_ast: root must be FILE");
  }
  std::vector<AstNode> children;
  for (const auto& child : root.children) convert(child, ignore, children);
  AstNode file;
  file.kind = CstKind::FILE;
  file.node_type = std::string(kind_name(CstKind::FILE));
  file.span = root.span;
  file.children = std::move(children);
  if (file.children.empty()) file.token = "";
  return file;
}

std::size_t count_nodes(const AstNode& tree) {
  std::size_t n = 1;
  for (const auto& child : tree.children) n += count_nodes(child);
  return n;
}

std::vector<const AstNode*> ast_leaves(const AstNode& tree) {
  std::vector<const AstNode*> out;
  collect_leaves(tree, out);
  return out;
}

std::vector<AstNode*> ast_leaves(AstNode& tree) {
  std::vector<AstNode*> out;
  collect_leaves(tree, out);
  return out;
}

}  // namespace psiminer
