#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "core/errors.hpp"
#include "core/lexer.hpp"
#include "core/parser.hpp"
#include "core/type_resolver.hpp"

namespace psiminer {
namespace fs = std::filesystem;
namespace {

constexpr std::string_view kSplitNames[] = {"train", "val", "test"};

bool has_source_extension(const fs::path& p, const PipelineConfig& config) {
  const std::string ext = p.extension().string();
  return std::find(config.source_extensions.begin(), config.source_extensions.end(),
                   ext) != config.source_extensions.end();
}

bool path_less(const fs::path& a, const fs::path& b) {
  return a.generic_string() < b.generic_string();
}

std::vector<fs::path> source_files(const fs::path& dir, const fs::path& split_root,
                                   const PipelineConfig& config, bool recursive) {
  std::vector<fs::path> files;
  std::error_code ec;
  auto consider = [&](const fs::directory_entry& entry) {
    if (entry.is_regular_file() && has_source_extension(entry.path(), config)) {
      files.push_back(entry.path().lexically_relative(split_root));
    }
  };
  if (recursive) {
    for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end;
         it.increment(ec)) {
      consider(*it);
    }
  } else {
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
      consider(*it);
    }
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end(), path_less);
  return files;
}

std::vector<fs::path> subdirectories(const fs::path& dir) {
  std::vector<fs::path> dirs;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_directory()) dirs.push_back(it->path());
  }
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(dirs.begin(), dirs.end(), path_less);
  return dirs;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buf.str();
}

std::set<std::string> verbatim_tokens(const PipelineConfig& config) {
  if (config.extractor != ExtractorKind::MethodName) return {};
  return {config.special_tokens.method_name, config.special_tokens.self};
}

// Processes one project's files on up to `parallelism` threads. Results are
// indexed by file so output order is independent of scheduling.
std::vector<FileResult> process_project(const SplitPlan& split, const ProjectPlan& project,
                                        const PipelineConfig& config) {
  const std::size_t n = project.files.size();
  std::vector<FileResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const fs::path& rel = project.files[i];
        const std::string source = read_file(split.root / rel);
        results[i] = process_source(source, split.name + "/" + rel.generic_string(),
                                    config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::min(config.parallelism, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

std::vector<SplitPlan> discover(const PipelineConfig& config) {
  const fs::path& input = config.input_dir;
  std::error_code ec;
  if (!fs::is_directory(input, ec)) {
    throw ConfigError("input_dir " + input.string() + " is not a directory");
  }

  std::vector<std::pair<std::string, fs::path>> roots;
  for (std::string_view name : kSplitNames) {
    const fs::path dir = input / std::string(name);
    if (fs::is_directory(dir, ec)) roots.emplace_back(std::string(name), dir);
  }
  if (roots.empty()) roots.emplace_back("data", input);

  std::vector<SplitPlan> plan;
  for (const auto& [name, root] : roots) {
    SplitPlan split;
    split.name = name;
    split.root = root;
    split.output_file = config.output_dir / (config.dataset_name + "." + name +
                                             std::string(file_extension(config.format)));
    ProjectPlan loose{root, source_files(root, root, config, /*recursive=*/false)};
    if (!loose.files.empty()) split.projects.push_back(std::move(loose));
    for (const auto& dir : subdirectories(root)) {
      ProjectPlan project{dir, source_files(dir, root, config, /*recursive=*/true)};
      if (!project.files.empty()) split.projects.push_back(std::move(project));
    }
    plan.push_back(std::move(split));
  }
  return plan;
}

std::string describe_plan(const std::vector<SplitPlan>& plan) {
  std::ostringstream os;
  for (const auto& split : plan) {
    std::size_t files = 0;
    for (const auto& p : split.projects) files += p.files.size();
    os << "split " << split.name << ": " << split.projects.size() << " project(s), "
       << files << " file(s) -> " << split.output_file.string() << "\n";
    for (const auto& p : split.projects) {
      const fs::path rel = p.root.lexically_relative(split.root);
      os << "  project " << rel.generic_string() << ": " << p.files.size()
         << " file(s)\n";
    }
  }
  return os.str();
}

FileResult process_source(std::string_view source, std::string_view rel_path,
                          const PipelineConfig& config) {
  FileResult result;
  RunStatistics& stats = result.stats;
  stats.files_seen = 1;

  if (!is_valid_utf8(source)) {
    stats.parse_failures = 1;
    stats.diagnostics.push_back(std::string(rel_path) + ": skipped, invalid UTF-8");
    return result;
  }

  CstNode cst;
  try {
    cst = parse_file(source, rel_path);
  } catch (const LexError& e) {
    stats.parse_failures = 1;
    stats.diagnostics.push_back(std::string(rel_path) + ": skipped, " + e.what());
    return result;
  } catch (const ParseError& e) {
    stats.parse_failures = 1;
    stats.diagnostics.push_back(std::string(rel_path) + ": skipped, " + e.what());
    return result;
  }
  stats.files_parsed = 1;

  AstNode ast = build_ast(cst, config.ignore);
  annotate_types_in_place(ast);

  const bool mine = config.format != StorageFormat::JsonlTrees;
  const bool typed = config.format == StorageFormat::Code2seqTyped;
  const std::set<std::string> verbatim = verbatim_tokens(config);

  for (AstNode& unit : split(ast, config.granularity)) {
    ++stats.trees_before_filters;
    std::vector<std::size_t> rejecting;
    if (!apply_all(unit, unit.span, config.filters, &rejecting)) {
      for (std::size_t idx : rejecting) {
        ++stats.filter_rejections[std::string(filter_name(config.filters[idx].kind))];
      }
      continue;
    }
    ++stats.trees_after_filters;

    LabeledTree sample = config.extractor == ExtractorKind::MethodName
                             ? extract_method_name(std::move(unit), config.special_tokens)
                             : extract_none(std::move(unit));
    if (mine) {
      const std::size_t leaf_count = ast_leaves(sample.tree).size();
      auto contexts = sample_contexts(enumerate_paths(sample.tree, config.miner, verbatim),
                                      config.miner, tree_key(sample.label, leaf_count));
      stats.record_contexts(contexts.size());
      result.lines.push_back(format_code2seq_line(sample, contexts, typed));
    } else {
      result.lines.push_back(format_jsonl_line(sample));
    }
    ++stats.samples_written;
  }
  return result;
}

RunStatistics run(const PipelineConfig& config) {
  const std::vector<SplitPlan> plan = discover(config);

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + config.output_dir.string() + ": " +
                  ec.message());
  }

  RunStatistics stats;
  for (const auto& f : config.filters) stats.filter_rejections[std::string(filter_name(f.kind))];

  for (const auto& split : plan) {
    std::ofstream out(split.output_file, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + split.output_file.string() + " for writing");

    for (const auto& project : split.projects) {
      std::vector<FileResult> results = process_project(split, project, config);
      stats.peak_resident_files =
          std::max<std::uint64_t>(stats.peak_resident_files, results.size());
      for (const auto& r : results) {
        for (const auto& line : r.lines) out << line;
        stats.merge(r.stats);
      }
      if (!out) throw IoError("failed writing " + split.output_file.string());
      // Project results go out of scope here before the next project starts.
    }
    out.flush();
    if (!out) throw IoError("failed writing " + split.output_file.string());
  }

  std::ostringstream discard;
  finalize(stats, config.output_dir, discard);
  return stats;
}

}  // namespace psiminer
