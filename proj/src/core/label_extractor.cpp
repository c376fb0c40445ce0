#include "core/label_extractor.hpp"

#include <utility>

#include "core/errors.hpp"

namespace psiminer {
namespace {

void mask_recursive_calls(AstNode& node, const std::string& name,
                          const std::string& self) {
  if (node.kind == CstKind::METHOD_CALL) {
    AstNode* callee = callee_identifier(node);
    if (callee != nullptr && callee->token == name) callee->token = self;
  }
  for (auto& child : node.children) mask_recursive_calls(child, name, self);
}

}  // namespace

AstNode* callee_identifier(AstNode& call) {
  if (call.kind != CstKind::METHOD_CALL || call.children.empty()) return nullptr;
  AstNode& target = call.children.front();
  if (target.kind == CstKind::IDENTIFIER) return &target;
  if (target.kind != CstKind::REFERENCE_EXPR || target.children.empty()) {
    return nullptr;
  }
  AstNode& last = target.children.back();
  return last.kind == CstKind::IDENTIFIER ? &last : nullptr;
}

const AstNode* callee_identifier(const AstNode& call) {
  return callee_identifier(const_cast<AstNode&>(call));
}

LabeledTree extract_method_name(AstNode tree, const SpecialTokens& tokens) {
  if (tree.kind != CstKind::METHOD_DECL && tree.kind != CstKind::CONSTRUCTOR_DECL) {
    throw ConfigError("method_name label extractor needs method-level trees, got " +
                      tree.node_type);
  }
  AstNode* name_leaf = nullptr;
  for (auto& child : tree.children) {
    if (child.kind == CstKind::IDENTIFIER && child.token) {
      name_leaf = &child;
      break;
    }
  }
  if (name_leaf == nullptr || name_leaf->token->empty()) {
    throw ConfigError("method_name label extractor: method has no name identifier");
  }
  std::string label = *name_leaf->token;
  name_leaf->token = tokens.method_name;
  mask_recursive_calls(tree, label, tokens.self);
  return {std::move(label), std::move(tree)};
}

LabeledTree extract_none(AstNode tree) {
  return {std::string(kNoLabel), std::move(tree)};
}

}  // namespace psiminer
