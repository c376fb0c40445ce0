#include "core/type_resolver.hpp"

#include <utility>

namespace psiminer {
namespace {

const std::string kNoTypeStr(kNoType);

AstNode* first_child(AstNode& node, CstKind kind) {
  for (auto& child : node.children) {
    if (child.kind == kind) return &child;
  }
  return nullptr;
}

std::string declared_type(AstNode& decl) {
  AstNode* type = first_child(decl, CstKind::TYPE_REF);
  return type != nullptr && type->token ? *type->token : kNoTypeStr;
}

std::string declared_name(AstNode& decl) {
  AstNode* ident = first_child(decl, CstKind::IDENTIFIER);
  return ident != nullptr && ident->token ? *ident->token : std::string();
}

bool is_hex_literal(std::string_view text) {
  return text.size() > 1 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
}

class Annotator {
 public:
  void file(AstNode& root) {
    for (auto& child : root.children) {
      if (child.kind == CstKind::CLASS_DECL) {
        class_decl(child);
      } else {
        Scope empty(ScopeKind::Class);
        expr(child, empty);
      }
    }
  }

 private:
  void class_decl(AstNode& cls) {
    class_name_ = declared_name(cls);
    methods_.clear();
    Scope scope(ScopeKind::Class);
    // Members are visible throughout the class body regardless of order.
    for (auto& member : cls.children) {
      if (member.kind == CstKind::METHOD_DECL) {
        methods_.try_emplace(declared_name(member), declared_type(member));
      } else if (member.kind == CstKind::FIELD_DECL) {
        scope.bind(declared_name(member), declared_type(member));
      }
    }
    for (auto& member : cls.children) {
      switch (member.kind) {
        case CstKind::IDENTIFIER:
          member.resolved_type = class_name_.empty() ? kNoTypeStr : class_name_;
          break;
        case CstKind::FIELD_DECL:
          declaration(member, scope, /*bind=*/false);
          break;
        case CstKind::METHOD_DECL:
        case CstKind::CONSTRUCTOR_DECL:
          method(member, scope);
          break;
        default:
          expr(member, scope);
      }
    }
  }

  void method(AstNode& decl, const Scope& class_scope) {
    Scope scope(ScopeKind::Method, &class_scope);
    const std::string type = decl.kind == CstKind::CONSTRUCTOR_DECL
                                 ? class_name_
                                 : declared_type(decl);
    for (auto& child : decl.children) {
      switch (child.kind) {
        case CstKind::IDENTIFIER:
          child.resolved_type = type.empty() ? kNoTypeStr : type;
          break;
        case CstKind::PARAMETER_LIST:
          for (auto& param : child.children) statement(param, scope);
          break;
        case CstKind::PARAMETER:
          declaration(child, scope, /*bind=*/true);
          break;
        case CstKind::CODE_BLOCK:
          block(child, scope);
          break;
        default:
          expr(child, scope);
      }
    }
  }

  // PARAMETER, FIELD_DECL, LOCAL_VAR_DECL. The name is bound before the
  // initializer is visited.
  void declaration(AstNode& decl, Scope& scope, bool bind) {
    const std::string type = declared_type(decl);
    bool named = false;
    for (auto& child : decl.children) {
      if (!named && child.kind == CstKind::IDENTIFIER && child.token) {
        named = true;
        child.resolved_type = type;
        if (bind) scope.bind(*child.token, type);
      } else {
        expr(child, scope);
      }
    }
  }

  void block(AstNode& node, const Scope& parent) {
    Scope scope(ScopeKind::Block, &parent);
    for (auto& child : node.children) statement(child, scope);
  }

  void statement(AstNode& node, Scope& scope) {
    switch (node.kind) {
      case CstKind::LOCAL_VAR_DECL:
      case CstKind::PARAMETER:
        declaration(node, scope, /*bind=*/true);
        return;
      case CstKind::CODE_BLOCK:
        block(node, scope);
        return;
      case CstKind::FOR_STMT: {
        Scope loop(ScopeKind::Block, &scope);
        for (auto& child : node.children) statement(child, loop);
        return;
      }
      case CstKind::IF_STMT:
      case CstKind::WHILE_STMT:
      case CstKind::RETURN_STMT:
      case CstKind::EXPR_STMT:
        for (auto& child : node.children) statement(child, scope);
        return;
      default:
        expr(node, scope);
    }
  }

  void expr(AstNode& node, const Scope& scope) {
    // Annotation names are left to fill_missing.
    if (node.kind == CstKind::MODIFIER_LIST || node.kind == CstKind::ANNOTATION) {
      return;
    }
    if (node.is_leaf()) {
      leaf(node, scope);
      return;
    }
    if (node.kind == CstKind::REFERENCE_EXPR) {
      reference(node, scope, /*callee=*/false);
      return;
    }
    if (node.kind == CstKind::METHOD_CALL) {
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        AstNode& child = node.children[i];
        if (i == 0 && child.kind == CstKind::REFERENCE_EXPR && !child.is_leaf()) {
          reference(child, scope, /*callee=*/true);
        } else {
          expr(child, scope);
        }
      }
      return;
    }
    for (auto& child : node.children) expr(child, scope);
  }

  // Only the leftmost segment of a dotted chain resolves.
  void reference(AstNode& ref, const Scope& scope, bool callee) {
    if (ref.children.size() == 1 && ref.children[0].kind == CstKind::IDENTIFIER) {
      AstNode& ident = ref.children[0];
      const std::string& name = *ident.token;
      if (callee) {
        const auto it = methods_.find(name);
        ident.resolved_type = it != methods_.end() ? it->second : kNoTypeStr;
      } else {
        ident.resolved_type = resolve_identifier(name, scope);
      }
      return;
    }
    for (std::size_t i = 0; i < ref.children.size(); ++i) {
      AstNode& child = ref.children[i];
      if (i > 0 && child.kind == CstKind::IDENTIFIER) {
        child.resolved_type = kNoTypeStr;
      } else {
        expr(child, scope);
      }
    }
  }

  void leaf(AstNode& node, const Scope& scope) {
    if (!node.token) return;
    switch (node.kind) {
      case CstKind::IDENTIFIER:
        node.resolved_type = resolve_identifier(*node.token, scope);
        break;
      case CstKind::LITERAL:
        node.resolved_type = literal_type(*node.token);
        break;
      case CstKind::TYPE_REF:
        node.resolved_type = node.token->empty() ? kNoTypeStr : *node.token;
        break;
      case CstKind::REFERENCE_EXPR:
        node.resolved_type = (*node.token == "this" && !class_name_.empty())
                                 ? class_name_
                                 : kNoTypeStr;
        break;
      default:
        break;
    }
  }

  std::string class_name_;
  std::map<std::string, std::string, std::less<>> methods_;
};

void fill_missing(AstNode& node) {
  if (node.is_leaf()) {
    if ((node.kind == CstKind::IDENTIFIER || node.kind == CstKind::LITERAL) &&
        !node.resolved_type) {
      node.resolved_type = kNoTypeStr;
    }
    return;
  }
  for (auto& child : node.children) fill_missing(child);
}

}  // namespace

std::optional<std::string> Scope::lookup(std::string_view name) const {
  for (const Scope* s = this; s != nullptr; s = s->parent_) {
    const auto it = s->bindings_.find(name);
    if (it != s->bindings_.end()) return it->second;
  }
  return std::nullopt;
}

std::string resolve_identifier(std::string_view name, const Scope& scope) {
  return scope.lookup(name).value_or(kNoTypeStr);
}

std::string literal_type(std::string_view text) {
  if (text.empty()) return kNoTypeStr;
  if (text == "true" || text == "false") return "boolean";
  if (text == "null") return kNoTypeStr;
  if (text.front() == '"') return "String";
  if (text.front() == '\'') return "char";
  const char first = text.front();
  if (!(first >= '0' && first <= '9') && first != '.') return kNoTypeStr;
  if (is_hex_literal(text)) return "int";
  const char last = text.back();
  if (text.find_first_of(".eE") != std::string_view::npos || last == 'f' ||
      last == 'F' || last == 'd' || last == 'D') {
    return "double";
  }
  return "int";
}

void annotate_types_in_place(AstNode& tree) {
  Annotator().file(tree);
  fill_missing(tree);
}

AstNode annotate_types(AstNode tree) {
  annotate_types_in_place(tree);
  return tree;
}

}  // namespace psiminer
