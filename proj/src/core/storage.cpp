#include "core/storage.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "json.hpp"

namespace psiminer {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string strip_delimiters(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    out += c;
  }
  return out;
}

void add_nodes(const AstNode& node, std::vector<ordered_json>& out) {
  const std::size_t self = out.size();
  out.emplace_back();
  ordered_json obj;
  obj["type"] = node.node_type;
  if (node.token) obj["value"] = *node.token;
  if (node.resolved_type) obj["token_type"] = *node.resolved_type;
  if (!node.children.empty()) {
    ordered_json children = ordered_json::array();
    for (const auto& child : node.children) {
      children.push_back(out.size());
      add_nodes(child, out);
    }
    obj["children"] = std::move(children);
  }
  out[self] = std::move(obj);
}

void check_stream(const std::ostream& sink) {
  if (!sink) throw IoError("failed to write dataset line");
}

}  // namespace

std::string_view format_name(StorageFormat format) {
  switch (format) {
    case StorageFormat::Code2seq:
      return "code2seq";
    case StorageFormat::Code2seqTyped:
      return "code2seq_typed";
    case StorageFormat::JsonlTrees:
      return "jsonl_trees";
  }
  return "code2seq";
}

std::optional<StorageFormat> format_from_name(std::string_view name) {
  for (auto f : {StorageFormat::Code2seq, StorageFormat::Code2seqTyped,
                 StorageFormat::JsonlTrees}) {
    if (format_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view file_extension(StorageFormat format) {
  return format == StorageFormat::JsonlTrees ? ".jsonl" : ".c2s";
}

std::string sanitize_type(std::string_view type) {
  std::string out;
  for (char c : type) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') continue;
    out += c == ',' ? ';' : c;
  }
  return out;
}

std::string format_code2seq_line(const LabeledTree& sample,
                                 const std::vector<PathContext>& contexts, bool typed) {
  std::string line = join(split_subtokens(sample.label), '|');
  line += ' ';
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    const PathContext& ctx = contexts[i];
    if (i > 0) line += ' ';
    std::vector<std::string> path;
    path.reserve(ctx.path.size());
    for (const auto& node : ctx.path) path.push_back(strip_delimiters(node));

    line += join(ctx.start_token, '|');
    if (typed) line += ',' + sanitize_type(ctx.start_type);
    line += ',' + join(path, '|') + ',';
    line += join(ctx.end_token, '|');
    if (typed) line += ',' + sanitize_type(ctx.end_type);
  }
  line += '\n';
  return line;
}

std::string format_jsonl_line(const LabeledTree& sample) {
  std::vector<ordered_json> nodes;
  add_nodes(sample.tree, nodes);
  nodes.front()["label"] = sample.label;
  ordered_json array = ordered_json::array();
  for (auto& n : nodes) array.push_back(std::move(n));
  return array.dump() + "\n";
}

void write_code2seq(const LabeledTree& sample, const std::vector<PathContext>& contexts,
                    bool typed, std::ostream& sink) {
  sink << format_code2seq_line(sample, contexts, typed);
  check_stream(sink);
}

void write_jsonl_tree(const LabeledTree& sample, std::ostream& sink) {
  sink << format_jsonl_line(sample);
  check_stream(sink);
}

void RunStatistics::record_contexts(std::uint64_t count) {
  if (contexts_samples == 0) {
    contexts_min = contexts_max = count;
  } else {
    contexts_min = std::min(contexts_min, count);
    contexts_max = std::max(contexts_max, count);
  }
  ++contexts_samples;
  contexts_total += count;
}

double RunStatistics::contexts_mean() const {
  return contexts_samples == 0
             ? 0.0
             : static_cast<double>(contexts_total) / static_cast<double>(contexts_samples);
}

void RunStatistics::merge(const RunStatistics& other) {
  files_seen += other.files_seen;
  files_parsed += other.files_parsed;
  parse_failures += other.parse_failures;
  trees_before_filters += other.trees_before_filters;
  trees_after_filters += other.trees_after_filters;
  samples_written += other.samples_written;
  for (const auto& [name, count] : other.filter_rejections) {
    filter_rejections[name] += count;
  }
  if (other.contexts_samples > 0) {
    if (contexts_samples == 0) {
      contexts_min = other.contexts_min;
      contexts_max = other.contexts_max;
    } else {
      contexts_min = std::min(contexts_min, other.contexts_min);
      contexts_max = std::max(contexts_max, other.contexts_max);
    }
    contexts_samples += other.contexts_samples;
    contexts_total += other.contexts_total;
  }
  peak_resident_files = std::max(peak_resident_files, other.peak_resident_files);
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

std::string RunStatistics::to_json() const {
  ordered_json j;
  j["files_seen"] = files_seen;
  j["files_parsed"] = files_parsed;
  j["parse_failures"] = parse_failures;
  j["trees_before_filters"] = trees_before_filters;
  j["trees_after_filters"] = trees_after_filters;
  j["samples_written"] = samples_written;
  for (const auto& [name, count] : filter_rejections) {
    j["rejected_by_" + name] = count;
  }
  j["contexts_min"] = contexts_min;
  j["contexts_mean"] = contexts_mean();
  j["contexts_max"] = contexts_max;
  j["peak_resident_files"] = peak_resident_files;
  return j.dump();
}

std::string RunStatistics::summary() const {
  std::ostringstream os;
  os << "files seen:           " << files_seen << "\n"
     << "files parsed:         " << files_parsed << "\n"
     << "parse failures:       " << parse_failures << "\n"
     << "trees before filters: " << trees_before_filters << "\n"
     << "trees after filters:  " << trees_after_filters << "\n"
     << "samples written:      " << samples_written << "\n";
  for (const auto& [name, count] : filter_rejections) {
    os << "  rejected by " << name << ": " << count << "\n";
  }
  if (contexts_samples > 0) {
    os << "contexts per sample:  min " << contexts_min << ", mean "
       << contexts_mean() << ", max " << contexts_max << "\n";
  }
  return os.str();
}

void finalize(const RunStatistics& stats, const std::filesystem::path& output_dir,
              std::ostream& sink) {
  const auto path = output_dir / "stats.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << stats.to_json() << "\n";
  if (!out) throw IoError("failed writing " + path.string());
  sink << stats.summary();
}

}  // namespace psiminer
