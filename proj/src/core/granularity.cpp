#include "core/granularity.hpp"

namespace psiminer {
namespace {

template <typename Pred>
void collect(const AstNode& node, const Pred& match, std::vector<AstNode>& out) {
  if (match(node)) {
    out.push_back(node);
    return;
  }
  for (const auto& child : node.children) collect(child, match, out);
}

}  // namespace

std::string_view granularity_name(Granularity g) {
  switch (g) {
    case Granularity::File:
      return "file";
    case Granularity::Class:
      return "class";
    case Granularity::Method:
      return "method";
  }
  return "file";
}

std::optional<Granularity> granularity_from_name(std::string_view name) {
  if (name == "file") return Granularity::File;
  if (name == "class") return Granularity::Class;
  if (name == "method") return Granularity::Method;
  return std::nullopt;
}

std::vector<AstNode> split(const AstNode& tree, Granularity g) {
  std::vector<AstNode> units;
  switch (g) {
    case Granularity::File:
      units.push_back(tree);
      break;
    case Granularity::Class:
      collect(
          tree, [](const AstNode& n) { return n.kind == CstKind::CLASS_DECL; },
          units);
      break;
    case Granularity::Method:
      collect(
          tree,
          [](const AstNode& n) {
            return n.kind == CstKind::METHOD_DECL ||
                   n.kind == CstKind::CONSTRUCTOR_DECL;
          },
          units);
      break;
  }
  return units;
}

}  // namespace psiminer
