#pragma once

#include <string>
#include <string_view>

#include "core/ast.hpp"

namespace psiminer {

inline constexpr std::string_view kNoLabel = "NO_LABEL";

struct LabeledTree {
  std::string label;
  AstNode tree;
};

struct SpecialTokens {
  std::string method_name = "METHOD_NAME";  // replaces the declared name
  std::string self = "SELF";                // replaces recursive callees
};

// Label = the method's name. The declaration-name identifier becomes
// `tokens.method_name`; every call inside the tree whose callee identifier
// equals the name (qualified or not) becomes `tokens.self`. Variables that
// happen to share the name are left alone. Throws ConfigError unless the
// root is METHOD_DECL or CONSTRUCTOR_DECL.
LabeledTree extract_method_name(AstNode tree, const SpecialTokens& tokens = {});

// ("NO_LABEL", tree) with the tree untouched.
LabeledTree extract_none(AstNode tree);

// The identifier naming the invoked method of a METHOD_CALL, if any.
AstNode* callee_identifier(AstNode& call);
const AstNode* callee_identifier(const AstNode& call);

}  // namespace psiminer
