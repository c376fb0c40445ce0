#include "core/path_miner.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

namespace psiminer {
namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alnum(char c) { return is_lower(c) || is_upper(c) || (c >= '0' && c <= '9'); }

// Root-to-leaf chain of one leaf.
struct LeafChain {
  std::vector<const AstNode*> nodes;    // nodes[0] = root, back() = leaf
  std::vector<std::size_t> child_index; // child_index[k] = index of nodes[k] in nodes[k-1]
};

void collect_chains(const AstNode& node, LeafChain& current,
                    std::vector<LeafChain>& out) {
  if (node.is_leaf()) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    current.nodes.push_back(&node.children[i]);
    current.child_index.push_back(i);
    collect_chains(node.children[i], current, out);
    current.nodes.pop_back();
    current.child_index.pop_back();
  }
}

std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Unbiased draw in [0, bound) independent of the standard library's
// distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<std::string> split_subtokens(std::string_view token) {
  std::vector<std::string> parts;
  std::string current;
  char prev = '\0';
  for (char c : token) {
    if (!is_alnum(c)) {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
      prev = '\0';
      continue;
    }
    if (is_upper(c) && is_lower(prev) && !current.empty()) {
      parts.push_back(std::move(current));
      current.clear();
    }
    current += is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
    prev = c;
  }
  if (!current.empty()) parts.push_back(std::move(current));
  if (parts.empty()) parts.emplace_back("_");
  return parts;
}

std::vector<PathContext> enumerate_paths(const AstNode& tree, const MinerLimits& limits,
                                         const std::set<std::string>& verbatim) {
  std::vector<LeafChain> chains;
  LeafChain root;
  root.nodes.push_back(&tree);
  root.child_index.push_back(0);
  collect_chains(tree, root, chains);

  auto normalize = [&](const AstNode& leaf) {
    const std::string& token = leaf.token ? *leaf.token : std::string();
    if (verbatim.count(token) != 0) return std::vector<std::string>{token};
    return split_subtokens(token);
  };
  auto type_of = [](const AstNode& leaf) {
    return leaf.resolved_type ? *leaf.resolved_type : std::string(kNoType);
  };

  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(chains.size());
  for (const auto& c : chains) tokens.push_back(normalize(*c.nodes.back()));

  std::vector<PathContext> out;
  for (std::size_t a = 0; a < chains.size(); ++a) {
    const LeafChain& ca = chains[a];
    for (std::size_t b = a + 1; b < chains.size(); ++b) {
      const LeafChain& cb = chains[b];
      // Deepest shared ancestor. Distinct leaves diverge strictly above both.
      std::size_t lca = 0;
      const std::size_t common = std::min(ca.nodes.size(), cb.nodes.size());
      while (lca + 1 < common && ca.nodes[lca + 1] == cb.nodes[lca + 1]) ++lca;

      const std::size_t depth_a = ca.nodes.size() - 1;
      const std::size_t depth_b = cb.nodes.size() - 1;
      const std::size_t length = (depth_a - lca) + (depth_b - lca) + 1;
      if (length > limits.max_path_nodes) continue;
      const std::size_t width =
          abs_diff(ca.child_index[lca + 1], cb.child_index[lca + 1]);
      if (width > limits.max_path_width) continue;

      PathContext ctx;
      ctx.path.reserve(length);
      for (std::size_t k = depth_a + 1; k-- > lca;) {
        ctx.path.push_back(ca.nodes[k]->node_type);
      }
      for (std::size_t k = lca + 1; k <= depth_b; ++k) {
        ctx.path.push_back(cb.nodes[k]->node_type);
      }
      ctx.start_token = tokens[a];
      ctx.start_type = type_of(*ca.nodes.back());
      ctx.end_token = tokens[b];
      ctx.end_type = type_of(*cb.nodes.back());
      out.push_back(std::move(ctx));
    }
  }
  return out;
}

std::uint64_t tree_key(std::string_view label, std::size_t leaf_count) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(leaf_count)));
}

std::vector<PathContext> sample_contexts(std::vector<PathContext> contexts,
                                         const MinerLimits& limits, std::uint64_t key) {
  if (contexts.size() <= limits.max_contexts) return contexts;

  std::mt19937_64 rng(splitmix64(limits.rng_seed ^ key));
  std::vector<std::size_t> order(contexts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates: the first max_contexts slots are a uniform subset.
  for (std::size_t i = 0; i < limits.max_contexts; ++i) {
    const std::size_t j = i + bounded(rng, order.size() - i);
    std::swap(order[i], order[j]);
  }
  order.resize(limits.max_contexts);
  std::sort(order.begin(), order.end());

  std::vector<PathContext> sampled;
  sampled.reserve(order.size());
  for (std::size_t idx : order) sampled.push_back(std::move(contexts[idx]));
  return sampled;
}

}  // namespace psiminer
