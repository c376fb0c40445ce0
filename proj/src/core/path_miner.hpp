#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.hpp"

namespace psiminer {

struct MinerLimits {
  std::size_t max_path_nodes = 9;
  std::size_t max_path_width = 2;
  std::size_t max_contexts = 200;
  std::uint64_t rng_seed = 0;

  static MinerLimits unlimited() {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    return {kMax, kMax, kMax, 0};
  }
};

struct PathContext {
  std::vector<std::string> start_token;
  std::string start_type;
  std::vector<std::string> path;  // start leaf -> LCA -> end leaf
  std::vector<std::string> end_token;
  std::string end_type;

  friend bool operator==(const PathContext&, const PathContext&) = default;
};

// Splits on '_' , on any character that is not an ASCII letter or digit, and
// between a lowercase and an uppercase letter; lowercases the pieces. Returns
// {"_"} when nothing survives.
std::vector<std::string> split_subtokens(std::string_view token);

// One context per leaf pair (a before b in leaf order) whose path has at most
// max_path_nodes nodes and whose width at the LCA is at most max_path_width.
// Ordered by (a, b). Tokens listed in `verbatim` (the special tokens a label
// extractor inserts) are emitted as a single unsplit subtoken.
std::vector<PathContext> enumerate_paths(const AstNode& tree,
                                         const MinerLimits& limits,
                                         const std::set<std::string>& verbatim = {});

// Stable per-tree key for the sampler: FNV-1a over the label mixed with the
// leaf count.
std::uint64_t tree_key(std::string_view label, std::size_t leaf_count);

// Identity when under the limit. Otherwise a uniform subset of max_contexts
// contexts in their original relative order, drawn from a generator seeded by
// rng_seed and `key` only.
std::vector<PathContext> sample_contexts(std::vector<PathContext> contexts,
                                         const MinerLimits& limits,
                                         std::uint64_t key);

}  // namespace psiminer
