#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/ast.hpp"
#include "core/filters.hpp"
#include "core/granularity.hpp"
#include "core/label_extractor.hpp"
#include "core/path_miner.hpp"
#include "core/storage.hpp"

namespace psiminer {

enum class ExtractorKind { MethodName, None };

struct PipelineConfig {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  std::string dataset_name = "dataset";
  std::vector<std::string> source_extensions{".java"};
  IgnoreList ignore = IgnoreList::defaults();
  Granularity granularity = Granularity::Method;
  std::vector<FilterSpec> filters;
  ExtractorKind extractor = ExtractorKind::MethodName;
  SpecialTokens special_tokens;
  MinerLimits miner;
  StorageFormat format = StorageFormat::Code2seq;
  std::size_t parallelism = 1;
};

// Parses and validates a JSON configuration, applying defaults. Unknown keys
// are errors. All problems are reported together in one ConfigError.
// Relative paths are resolved against `base_dir` when it is non-empty.
PipelineConfig validate_config(std::string_view raw,
                               const std::filesystem::path& base_dir = {});

// Reads `path` and validates it with its parent directory as base. Throws
// ConfigError when the file cannot be read.
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace psiminer
