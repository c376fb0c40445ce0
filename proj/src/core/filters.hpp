#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.hpp"
#include "core/granularity.hpp"

namespace psiminer {

enum class FilterKind { TreeSize, CodeLines, AbstractMethod, OverrideMethod, Constructor };

std::string_view filter_name(FilterKind kind);
std::optional<FilterKind> filter_from_name(std::string_view name);

// True for the filters that only make sense on method-level units.
bool is_method_only(FilterKind kind);

struct FilterSpec {
  FilterKind kind = FilterKind::TreeSize;
  std::size_t max_nodes = 0;                // tree_size
  std::optional<std::size_t> min_nodes;     // tree_size
  std::size_t max_lines = 0;                // code_lines

  static FilterSpec tree_size(std::size_t max_nodes,
                              std::optional<std::size_t> min_nodes = {}) {
    return {FilterKind::TreeSize, max_nodes, min_nodes, 0};
  }
  static FilterSpec code_lines(std::size_t max_lines) {
    return {FilterKind::CodeLines, 0, std::nullopt, max_lines};
  }
  static FilterSpec of(FilterKind kind) { return {kind, 0, std::nullopt, 0}; }
};

// Throws ConfigError if the filter's parameters are missing or inconsistent, or
// if a method-only filter is combined with another granularity.
void validate_filter(const FilterSpec& spec, Granularity granularity);

// true = keep. Method-only filters throw ConfigError on a tree that is not
// METHOD_DECL / CONSTRUCTOR_DECL rooted.
bool accept(const AstNode& tree, const SourceSpan& span, const FilterSpec& spec);

// Conjunction over specs; an empty list accepts. When `rejecting` is given,
// every spec is evaluated and the indices of all rejecting ones are appended,
// so per-filter counts do not depend on spec order.
bool apply_all(const AstNode& tree, const SourceSpan& span,
               std::span<const FilterSpec> specs,
               std::vector<std::size_t>* rejecting = nullptr);

}  // namespace psiminer
