#include "core/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "json.hpp"

namespace psiminer {
namespace {

using nlohmann::json;

class Problems {
 public:
  void add(std::string msg) { items_.push_back(std::move(msg)); }
  bool empty() const { return items_.empty(); }
  std::string joined() const {
    std::string out = "invalid configuration:";
    for (const auto& p : items_) out += "\n  - " + p;
    return out;
  }

 private:
  std::vector<std::string> items_;
};

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, Problems& problems) {
  for (const auto& [key, value] : obj.items()) {
    if (allowed.count(key) == 0) problems.add(where + ": unknown key '" + key + "'");
  }
}

// Reads an integer >= min_value. Returns fallback on absence or error.
std::uint64_t get_uint(const json& obj, const std::string& key, std::uint64_t min_value,
                       std::uint64_t fallback, const std::string& where,
                       Problems& problems) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (v.is_number_unsigned()) {
    const auto n = v.get<std::uint64_t>();
    if (n >= min_value) return n;
  } else if (!v.is_number_integer()) {
    problems.add(where + "." + key + ": must be an integer");
    return fallback;
  }
  problems.add(where + "." + key + ": must be >= " + std::to_string(min_value));
  return fallback;
}

std::string get_string(const json& obj, const std::string& key, const std::string& where,
                       Problems& problems, bool required, std::string fallback = {}) {
  if (!obj.contains(key)) {
    if (required) problems.add(where + ": missing required key '" + key + "'");
    return fallback;
  }
  if (!obj.at(key).is_string()) {
    problems.add(where + "." + key + ": must be a string");
    return fallback;
  }
  return obj.at(key).get<std::string>();
}

bool valid_special_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' || c == '|') {
      return false;
    }
  }
  return true;
}

std::filesystem::path resolve(const std::string& p, const std::filesystem::path& base) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) path = base / path;
  return path.lexically_normal();
}

void parse_filters(const json& list, PipelineConfig& cfg, bool granularity_ok,
                   Problems& problems) {
  if (!list.is_array()) {
    problems.add("filters: must be an array");
    return;
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "filters[" + std::to_string(i) + "]";
    const json& item = list[i];
    if (!item.is_object()) {
      problems.add(where + ": must be an object");
      continue;
    }
    const std::string name = get_string(item, "name", where, problems, true);
    if (name.empty()) continue;
    const auto kind = filter_from_name(name);
    if (!kind) {
      problems.add(where + ": unknown filter '" + name + "'");
      continue;
    }
    FilterSpec spec = FilterSpec::of(*kind);
    switch (*kind) {
      case FilterKind::TreeSize:
        check_keys(item, {"name", "max_nodes", "min_nodes"}, where, problems);
        if (!item.contains("max_nodes")) {
          problems.add(where + ": tree_size requires max_nodes");
        }
        spec.max_nodes = get_uint(item, "max_nodes", 1, 1, where, problems);
        if (item.contains("min_nodes")) {
          spec.min_nodes = get_uint(item, "min_nodes", 1, 1, where, problems);
          if (*spec.min_nodes > spec.max_nodes) {
            problems.add(where + ": min_nodes must be <= max_nodes");
          }
        }
        break;
      case FilterKind::CodeLines:
        check_keys(item, {"name", "max_lines"}, where, problems);
        if (!item.contains("max_lines")) {
          problems.add(where + ": code_lines requires max_lines");
        }
        spec.max_lines = get_uint(item, "max_lines", 1, 1, where, problems);
        break;
      default:
        check_keys(item, {"name"}, where, problems);
        if (granularity_ok && cfg.granularity != Granularity::Method) {
          problems.add(where + ": " + name + " requires granularity 'method'");
        }
    }
    cfg.filters.push_back(spec);
  }
}

void parse_extractor(const json& value, PipelineConfig& cfg, Problems& problems) {
  std::string name;
  if (value.is_string()) {
    name = value.get<std::string>();
  } else if (value.is_object()) {
    check_keys(value, {"name", "method_name_token", "self_token"}, "label_extractor",
               problems);
    name = get_string(value, "name", "label_extractor", problems, true);
    cfg.special_tokens.method_name =
        get_string(value, "method_name_token", "label_extractor", problems, false,
                   cfg.special_tokens.method_name);
    cfg.special_tokens.self = get_string(value, "self_token", "label_extractor",
                                         problems, false, cfg.special_tokens.self);
    if (!valid_special_token(cfg.special_tokens.method_name) ||
        !valid_special_token(cfg.special_tokens.self)) {
      problems.add(
          "label_extractor: special tokens must be non-empty and contain no "
          "whitespace, ',' or '|'");
    } else if (cfg.special_tokens.method_name == cfg.special_tokens.self) {
      problems.add("label_extractor: method_name_token and self_token must differ");
    }
  } else {
    problems.add("label_extractor: must be a string or an object");
    return;
  }
  if (name == "method_name") {
    cfg.extractor = ExtractorKind::MethodName;
  } else if (name == "none") {
    cfg.extractor = ExtractorKind::None;
  } else if (!name.empty()) {
    problems.add("label_extractor: unknown extractor '" + name + "'");
  }
}

}  // namespace

PipelineConfig validate_config(std::string_view raw, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid configuration: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("invalid configuration: top level must be an object");

  PipelineConfig cfg;
  Problems problems;
  check_keys(doc,
             {"input_dir", "output_dir", "dataset_name", "source_extensions",
              "ignore_node_kinds", "granularity", "filters", "label_extractor", "miner",
              "storage", "parallelism"},
             "config", problems);

  const std::string input = get_string(doc, "input_dir", "config", problems, true);
  if (!input.empty()) cfg.input_dir = resolve(input, base_dir);
  const std::string output = get_string(doc, "output_dir", "config", problems, true);
  if (!output.empty()) cfg.output_dir = resolve(output, base_dir);

  cfg.dataset_name = get_string(doc, "dataset_name", "config", problems, false, "dataset");
  if (cfg.dataset_name.empty() ||
      cfg.dataset_name.find_first_of("/\\") != std::string::npos) {
    problems.add("dataset_name: must be a non-empty file name");
  }

  if (doc.contains("source_extensions")) {
    const json& exts = doc["source_extensions"];
    if (!exts.is_array() || exts.empty()) {
      problems.add("source_extensions: must be a non-empty array");
    } else {
      cfg.source_extensions.clear();
      for (const auto& e : exts) {
        if (!e.is_string() || e.get<std::string>().size() < 2 ||
            e.get<std::string>().front() != '.') {
          problems.add("source_extensions: entries must look like \".java\"");
        } else {
          cfg.source_extensions.push_back(e.get<std::string>());
        }
      }
    }
  }

  if (doc.contains("ignore_node_kinds")) {
    const json& kinds = doc["ignore_node_kinds"];
    if (!kinds.is_array()) {
      problems.add("ignore_node_kinds: must be an array");
    } else {
      std::vector<std::string> names;
      bool all_strings = true;
      for (const auto& k : kinds) {
        if (!k.is_string()) {
          all_strings = false;
        } else {
          names.push_back(k.get<std::string>());
        }
      }
      if (!all_strings) problems.add("ignore_node_kinds: entries must be strings");
      try {
        cfg.ignore = IgnoreList::from_names(names);
      } catch (const ConfigError& e) {
        problems.add(e.what());
      }
    }
  }

  bool granularity_ok = false;
  const std::string gran = get_string(doc, "granularity", "config", problems, true);
  if (!gran.empty()) {
    if (auto g = granularity_from_name(gran)) {
      cfg.granularity = *g;
      granularity_ok = true;
    } else {
      problems.add("granularity: unknown level '" + gran + "', expected file, class or method");
    }
  }

  if (doc.contains("filters")) parse_filters(doc["filters"], cfg, granularity_ok, problems);

  if (!doc.contains("label_extractor")) {
    problems.add("config: missing required key 'label_extractor'");
  } else {
    parse_extractor(doc["label_extractor"], cfg, problems);
    if (cfg.extractor == ExtractorKind::MethodName && granularity_ok &&
        cfg.granularity != Granularity::Method) {
      problems.add("label_extractor: method_name requires granularity 'method'");
    }
  }

  if (doc.contains("miner")) {
    const json& m = doc["miner"];
    if (!m.is_object()) {
      problems.add("miner: must be an object");
    } else {
      check_keys(m, {"max_path_nodes", "max_path_width", "max_contexts", "rng_seed"},
                 "miner", problems);
      cfg.miner.max_path_nodes =
          get_uint(m, "max_path_nodes", 1, cfg.miner.max_path_nodes, "miner", problems);
      cfg.miner.max_path_width =
          get_uint(m, "max_path_width", 0, cfg.miner.max_path_width, "miner", problems);
      cfg.miner.max_contexts =
          get_uint(m, "max_contexts", 1, cfg.miner.max_contexts, "miner", problems);
      if (m.contains("rng_seed")) {
        const json& s = m["rng_seed"];
        if (s.is_number_unsigned()) {
          cfg.miner.rng_seed = s.get<std::uint64_t>();
        } else if (s.is_number_integer()) {
          cfg.miner.rng_seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
        } else {
          problems.add("miner.rng_seed: must be an integer");
        }
      }
    }
  }

  if (!doc.contains("storage")) {
    problems.add("config: missing required key 'storage'");
  } else if (!doc["storage"].is_object()) {
    problems.add("storage: must be an object");
  } else {
    const json& s = doc["storage"];
    check_keys(s, {"format"}, "storage", problems);
    const std::string fmt = get_string(s, "format", "storage", problems, true);
    if (!fmt.empty()) {
      if (auto f = format_from_name(fmt)) {
        cfg.format = *f;
      } else {
        problems.add("storage.format: unknown format '" + fmt +
                     "', expected code2seq, code2seq_typed or jsonl_trees");
      }
    }
  }

  cfg.parallelism = get_uint(doc, "parallelism", 1, 1, "config", problems);

  if (!problems.empty()) throw ConfigError(problems.joined());
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read configuration file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate_config(buf.str(), path.parent_path());
}

}  // namespace psiminer
