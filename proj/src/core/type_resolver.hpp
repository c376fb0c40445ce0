#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "core/ast.hpp"

namespace psiminer {

enum class ScopeKind { Class, Method, Block };

// One level of the lexical scope chain. Parents are borrowed and must outlive
// the child.
class Scope {
 public:
  explicit Scope(ScopeKind kind, const Scope* parent = nullptr)
      : kind_(kind), parent_(parent) {}

  void bind(std::string name, std::string type) {
    bindings_.insert_or_assign(std::move(name), std::move(type));
  }

  // Innermost binding along the chain.
  std::optional<std::string> lookup(std::string_view name) const;

  ScopeKind kind() const { return kind_; }
  const Scope* parent() const { return parent_; }

 private:
  ScopeKind kind_;
  const Scope* parent_;
  std::map<std::string, std::string, std::less<>> bindings_;
};

// Nearest enclosing binding's type, else "NO_TYPE".
std::string resolve_identifier(std::string_view name, const Scope& scope);

// int / double / String / char / boolean; null and anything else -> NO_TYPE.
std::string literal_type(std::string_view literal_text);

// Fills resolved_type on identifier, literal and type leaves of a FILE-rooted
// AST using single-file scoping. Shape, node types and tokens are untouched.
void annotate_types_in_place(AstNode& tree);
AstNode annotate_types(AstNode tree);

}  // namespace psiminer
