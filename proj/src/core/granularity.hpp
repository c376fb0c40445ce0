#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "core/ast.hpp"

namespace psiminer {

enum class Granularity { File, Class, Method };

std::string_view granularity_name(Granularity g);
std::optional<Granularity> granularity_from_name(std::string_view name);

// file -> {tree}; class -> CLASS_DECL subtrees; method -> METHOD_DECL and
// CONSTRUCTOR_DECL subtrees. Source order in every case.
std::vector<AstNode> split(const AstNode& tree, Granularity g);

}  // namespace psiminer
