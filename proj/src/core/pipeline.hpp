#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/config.hpp"
#include "core/storage.hpp"

namespace psiminer {

struct ProjectPlan {
  std::filesystem::path root;
  std::vector<std::filesystem::path> files;  // relative to the split root, sorted
};

struct SplitPlan {
  std::string name;  // train / val / test, or "data"
  std::filesystem::path root;
  std::filesystem::path output_file;
  std::vector<ProjectPlan> projects;
};

// Splits are the train/val/test subdirectories that exist, or the whole input
// as "data". A project is a first-level subdirectory of a split; loose files
// in the split root form one extra project processed first.
std::vector<SplitPlan> discover(const PipelineConfig& config);

std::string describe_plan(const std::vector<SplitPlan>& plan);

struct FileResult {
  std::vector<std::string> lines;  // formatted samples, newline-terminated
  RunStatistics stats;
};

// Parse -> build -> annotate -> split -> filter -> label -> mine -> format for
// one file. Lex/parse failures are recorded in the returned statistics.
FileResult process_source(std::string_view source, std::string_view rel_path,
                          const PipelineConfig& config);

// Runs the whole corpus. Throws ConfigError (missing input directory) before
// touching the output directory, and IoError on read/write failures.
RunStatistics run(const PipelineConfig& config);

}  // namespace psiminer
