#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/ast.hpp"
#include "core/parser.hpp"
#include "core/path_miner.hpp"
#include "core/type_resolver.hpp"

namespace psm_test {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return fs::path(PSM_FIXTURE_DIR); }

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::vector<fs::path> java_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".java") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Every hand-written fixture source used by the corpus-wide checks.
inline std::vector<fs::path> all_fixture_sources() {
  std::vector<fs::path> files;
  for (const char* sub : {"corpus", "types", "recursive", "golden/input"}) {
    auto part = java_files(fixture_dir() / sub);
    files.insert(files.end(), part.begin(), part.end());
  }
  return files;
}

inline psiminer::AstNode annotated_ast(
    const std::string& source,
    const psiminer::IgnoreList& ignore = psiminer::IgnoreList::defaults()) {
  return psiminer::annotate_types(psiminer::build_ast(psiminer::parse_file(source), ignore));
}

template <typename Fn>
void preorder(const psiminer::AstNode& node, Fn&& fn) {
  fn(node);
  for (const auto& c : node.children) preorder(c, fn);
}

inline std::size_t count_tokens(const psiminer::AstNode& tree, const std::string& token) {
  std::size_t n = 0;
  preorder(tree, [&](const psiminer::AstNode& node) {
    if (node.token && *node.token == token) ++n;
  });
  return n;
}

// Resolved types of IDENTIFIER leaves with this token, in source order.
inline std::vector<std::string> identifier_types(const psiminer::AstNode& tree,
                                                 const std::string& name) {
  std::vector<std::string> out;
  for (const psiminer::AstNode* l : psiminer::ast_leaves(tree)) {
    if (l->kind == psiminer::CstKind::IDENTIFIER && l->token == name) {
      out.push_back(l->resolved_type.value_or("<missing>"));
    }
  }
  return out;
}

struct OracleRow {
  std::string fixture;
  std::string name;
  std::size_t occurrence = 0;
  std::string expected;
  std::string category;
};

// fixtures/types/oracle.tsv, comment lines skipped.
inline std::vector<OracleRow> load_type_oracle() {
  std::istringstream table(read_text(fixture_dir() / "types" / "oracle.tsv"));
  std::vector<OracleRow> rows;
  std::string line;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    OracleRow row;
    std::string occurrence;
    std::getline(fields, row.fixture, '\t');
    std::getline(fields, row.name, '\t');
    std::getline(fields, occurrence, '\t');
    std::getline(fields, row.expected, '\t');
    std::getline(fields, row.category, '\t');
    row.occurrence = std::stoul(occurrence);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct RecursionRow {
  std::string fixture;
  std::string method;
  std::size_t call_sites = 0;
};

inline std::vector<RecursionRow> load_recursion_manifest() {
  std::istringstream table(read_text(fixture_dir() / "recursive" / "manifest.tsv"));
  std::vector<RecursionRow> rows;
  std::string line;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    RecursionRow row;
    fields >> row.fixture >> row.method >> row.call_sites;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- random trees and the parent-pointer path oracle ----

inline psiminer::AstNode random_tree(std::mt19937& rng, std::size_t max_leaves) {
  static const char* kTypes[] = {"A", "B", "C", "D", "E"};
  static const char* kTokens[] = {"fooBar", "x", "get_value", "N", "isOK", "a1"};
  std::uniform_int_distribution<std::size_t> leaves_dist(1, max_leaves);
  const std::size_t target = leaves_dist(rng);

  psiminer::AstNode root;
  root.node_type = "ROOT";
  root.token = std::string(kTokens[0]);
  std::size_t leaves = 1;
  // Grow by turning a random leaf into an internal node with 2-3 children,
  // or by appending a child to a random internal node.
  std::vector<psiminer::AstNode*> nodes{&root};
  while (leaves < target) {
    psiminer::AstNode* pick = nodes[rng() % nodes.size()];
    auto make_leaf = [&] {
      psiminer::AstNode leaf;
      leaf.node_type = kTypes[rng() % 5];
      leaf.token = std::string(kTokens[rng() % 6]);
      if (rng() % 2 == 0) leaf.resolved_type = "T" + std::to_string(rng() % 3);
      return leaf;
    };
    if (pick->is_leaf()) {
      pick->token.reset();
      pick->resolved_type.reset();
      pick->children.push_back(make_leaf());
      // One leaf became internal, one new leaf: net zero unless we add another.
      pick->children.push_back(make_leaf());
      leaves += 1;
    } else {
      pick->children.push_back(make_leaf());
      leaves += 1;
    }
    // Rebuild the node list since children vectors may have reallocated.
    nodes.clear();
    std::vector<psiminer::AstNode*> stack{&root};
    while (!stack.empty()) {
      psiminer::AstNode* n = stack.back();
      stack.pop_back();
      nodes.push_back(n);
      for (auto& c : n->children) stack.push_back(&c);
    }
  }
  return root;
}

struct FlatNode {
  const psiminer::AstNode* node;
  long parent;             // -1 for the root
  std::size_t child_index; // position among the parent's children
};

inline void flatten(const psiminer::AstNode& node, long parent, std::size_t idx,
                    std::vector<FlatNode>& out, std::vector<std::size_t>& leaf_ids) {
  const long self = static_cast<long>(out.size());
  out.push_back({&node, parent, idx});
  if (node.is_leaf()) leaf_ids.push_back(static_cast<std::size_t>(self));
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    flatten(node.children[i], self, i, out, leaf_ids);
  }
}

// Paths by explicit parent-pointer climbing: mark every ancestor of `a`, climb
// from `b` until a marked node is hit.
inline std::vector<psiminer::PathContext> oracle_paths(const psiminer::AstNode& tree,
                                                       std::size_t max_nodes,
                                                       std::size_t max_width) {
  std::vector<FlatNode> flat;
  std::vector<std::size_t> leaf_ids;
  flatten(tree, -1, 0, flat, leaf_ids);

  auto type_of = [](const psiminer::AstNode& n) {
    return n.resolved_type ? *n.resolved_type : std::string("NO_TYPE");
  };

  std::vector<psiminer::PathContext> out;
  for (std::size_t i = 0; i < leaf_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < leaf_ids.size(); ++j) {
      std::vector<long> up_a;  // a, parent(a), ..., root
      for (long k = static_cast<long>(leaf_ids[i]); k != -1; k = flat[k].parent) up_a.push_back(k);
      std::vector<long> up_b;
      long k = static_cast<long>(leaf_ids[j]);
      while (std::find(up_a.begin(), up_a.end(), k) == up_a.end()) {
        up_b.push_back(k);
        k = flat[k].parent;
      }
      const long lca = k;
      const auto lca_pos = std::find(up_a.begin(), up_a.end(), lca) - up_a.begin();

      std::vector<std::string> path;
      for (long p = 0; p <= lca_pos; ++p) path.push_back(flat[up_a[p]].node->node_type);
      for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) {
        path.push_back(flat[*it].node->node_type);
      }
      const std::size_t wa = flat[up_a[lca_pos - 1]].child_index;
      const std::size_t wb = flat[up_b.back()].child_index;
      const std::size_t width = wa > wb ? wa - wb : wb - wa;
      if (path.size() > max_nodes || width > max_width) continue;

      const auto& la = *flat[leaf_ids[i]].node;
      const auto& lb = *flat[leaf_ids[j]].node;
      out.push_back({psiminer::split_subtokens(*la.token), type_of(la), path,
                     psiminer::split_subtokens(*lb.token), type_of(lb)});
    }
  }
  return out;
}

}  // namespace psm_test
