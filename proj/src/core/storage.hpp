#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "core/label_extractor.hpp"
#include "core/path_miner.hpp"

namespace psiminer {

enum class StorageFormat { Code2seq, Code2seqTyped, JsonlTrees };

std::string_view format_name(StorageFormat format);
std::optional<StorageFormat> format_from_name(std::string_view name);
// ".c2s" or ".jsonl"
std::string_view file_extension(StorageFormat format);

// Type text made safe for the comma/space-delimited context grammar:
// whitespace removed, commas become ';'.
std::string sanitize_type(std::string_view type);

// `LABEL CTX1 ... CTXn\n`. Untyped CTX = tok,path,tok; typed CTX =
// tok,type,path,tok,type. Subtokens and path nodes are '|'-joined.
std::string format_code2seq_line(const LabeledTree& sample,
                                 const std::vector<PathContext>& contexts, bool typed);

// One JSON array per line, nodes numbered in preorder; the label is an extra
// field of the root object.
std::string format_jsonl_line(const LabeledTree& sample);

// Append one line to `sink`; IoError when the stream fails.
void write_code2seq(const LabeledTree& sample, const std::vector<PathContext>& contexts,
                    bool typed, std::ostream& sink);
void write_jsonl_tree(const LabeledTree& sample, std::ostream& sink);

struct RunStatistics {
  std::uint64_t files_seen = 0;
  std::uint64_t files_parsed = 0;
  std::uint64_t parse_failures = 0;
  std::uint64_t trees_before_filters = 0;
  std::uint64_t trees_after_filters = 0;
  std::uint64_t samples_written = 0;
  std::map<std::string, std::uint64_t> filter_rejections;

  std::uint64_t contexts_samples = 0;  // samples that went through the miner
  std::uint64_t contexts_total = 0;
  std::uint64_t contexts_min = 0;
  std::uint64_t contexts_max = 0;

  // Largest number of per-file results held at once (one project's worth).
  std::uint64_t peak_resident_files = 0;

  std::vector<std::string> diagnostics;

  void record_contexts(std::uint64_t count);
  double contexts_mean() const;
  // Adds counters of `other`; min/max/peak combine as min/max.
  void merge(const RunStatistics& other);

  std::string to_json() const;   // flat object, one line
  std::string summary() const;   // human readable, multi-line
};

// Writes `stats.json` into output_dir and the summary into `sink`.
void finalize(const RunStatistics& stats, const std::filesystem::path& output_dir,
              std::ostream& sink);

}  // namespace psiminer
