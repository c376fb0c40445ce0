#include "core/filters.hpp"

#include "core/errors.hpp"

namespace psiminer {
namespace {

bool is_method_unit(const AstNode& tree) {
  return tree.kind == CstKind::METHOD_DECL || tree.kind == CstKind::CONSTRUCTOR_DECL;
}

// Modifier and annotation names of a method, whether or not keywords were
// dropped from the tree.
bool has_modifier(const AstNode& tree, std::string_view word) {
  for (const auto& child : tree.children) {
    if (child.kind != CstKind::MODIFIER_LIST) continue;
    for (const AstNode* leaf : ast_leaves(child)) {
      if (leaf->token && *leaf->token == word) return true;
    }
  }
  return false;
}

bool has_annotation(const AstNode& tree, std::string_view name) {
  for (const auto& child : tree.children) {
    if (child.kind != CstKind::MODIFIER_LIST) continue;
    for (const auto& item : child.children) {
      if (item.kind != CstKind::ANNOTATION) continue;
      for (const AstNode* leaf : ast_leaves(item)) {
        if (leaf->kind == CstKind::IDENTIFIER && leaf->token == name) return true;
      }
    }
  }
  return false;
}

bool has_body(const AstNode& tree) {
  for (const auto& child : tree.children) {
    if (child.kind == CstKind::CODE_BLOCK) return true;
  }
  return false;
}

}  // namespace

std::string_view filter_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::TreeSize:
      return "tree_size";
    case FilterKind::CodeLines:
      return "code_lines";
    case FilterKind::AbstractMethod:
      return "abstract_method";
    case FilterKind::OverrideMethod:
      return "override_method";
    case FilterKind::Constructor:
      return "constructor";
  }
  return "tree_size";
}

std::optional<FilterKind> filter_from_name(std::string_view name) {
  for (auto kind : {FilterKind::TreeSize, FilterKind::CodeLines,
                    FilterKind::AbstractMethod, FilterKind::OverrideMethod,
                    FilterKind::Constructor}) {
    if (filter_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_method_only(FilterKind kind) {
  return kind == FilterKind::AbstractMethod || kind == FilterKind::OverrideMethod ||
         kind == FilterKind::Constructor;
}

void validate_filter(const FilterSpec& spec, Granularity granularity) {
  const std::string name(filter_name(spec.kind));
  switch (spec.kind) {
    case FilterKind::TreeSize:
      if (spec.max_nodes == 0) {
        throw ConfigError(name + ": max_nodes must be a positive integer");
      }
      if (spec.min_nodes && (*spec.min_nodes == 0 || *spec.min_nodes > spec.max_nodes)) {
        throw ConfigError(name + ": min_nodes must be positive and <= max_nodes");
      }
      break;
    case FilterKind::CodeLines:
      if (spec.max_lines == 0) {
        throw ConfigError(name + ": max_lines must be a positive integer");
      }
      break;
    default:
      if (granularity != Granularity::Method) {
        throw ConfigError(name + ": requires method granularity");
      }
  }
}

bool accept(const AstNode& tree, const SourceSpan& span, const FilterSpec& spec) {
  if (is_method_only(spec.kind) && !is_method_unit(tree)) {
    throw ConfigError(std::string(filter_name(spec.kind)) +
                      ": applied to a non-method tree (" + tree.node_type + ")");
  }
  switch (spec.kind) {
    case FilterKind::TreeSize: {
      const std::size_t n = count_nodes(tree);
      if (n > spec.max_nodes) return false;
      return !(spec.min_nodes && n < *spec.min_nodes);
    }
    case FilterKind::CodeLines:
      return span.line_count() <= spec.max_lines;
    case FilterKind::AbstractMethod:
      return !(has_modifier(tree, "abstract") || !has_body(tree));
    case FilterKind::OverrideMethod:
      return !has_annotation(tree, "Override");
    case FilterKind::Constructor:
      return tree.kind != CstKind::CONSTRUCTOR_DECL;
  }
  return true;
}

bool apply_all(const AstNode& tree, const SourceSpan& span,
               std::span<const FilterSpec> specs, std::vector<std::size_t>* rejecting) {
  bool keep = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (accept(tree, span, specs[i])) continue;
    keep = false;
    if (rejecting == nullptr) return false;
    rejecting->push_back(i);
  }
  return keep;
}

}  // namespace psiminer
