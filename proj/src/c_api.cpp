#include "psiminer/psiminer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/parser.hpp"
#include "core/pipeline.hpp"
#include "json.hpp"

struct psm_config {
  psiminer::PipelineConfig value;
};

struct psm_stats {
  psiminer::RunStatistics value;
};

namespace {

thread_local std::string g_last_error;

psm_status fail(psm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

// Maps library exceptions onto status codes.
template <typename Fn>
psm_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const psiminer::ConfigError& e) {
    return fail(PSM_ERR_CONFIG, e.what());
  } catch (const psiminer::IoError& e) {
    return fail(PSM_ERR_IO, e.what());
  } catch (const psiminer::LexError& e) {
    return fail(PSM_ERR_PARSE, e.what());
  } catch (const psiminer::ParseError& e) {
    return fail(PSM_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PSM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PSM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PSM_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* psm_version(void) { return "0.1.0"; }

const char* psm_last_error(void) { return g_last_error.c_str(); }

void psm_string_free(char* s) { std::free(s); }

psm_status psm_config_parse(const char* json, size_t len, const char* base_dir,
                            psm_config** out) {
  if (json == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_config_parse: null argument");
  }
  return guarded([&] {
    const std::filesystem::path base = base_dir != nullptr ? base_dir : "";
    auto cfg = psiminer::validate_config(std::string_view(json, len), base);
    *out = new psm_config{std::move(cfg)};
    return PSM_OK;
  });
}

psm_status psm_config_load(const char* path, psm_config** out) {
  if (path == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_config_load: null argument");
  }
  return guarded([&] {
    *out = new psm_config{psiminer::load_config(path)};
    return PSM_OK;
  });
}

psm_status psm_config_set_parallelism(psm_config* config, uint32_t parallelism) {
  if (config == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_config_set_parallelism: null config");
  }
  if (parallelism == 0) return fail(PSM_ERR_CONFIG, "parallelism must be positive");
  config->value.parallelism = parallelism;
  return PSM_OK;
}

void psm_config_free(psm_config* config) { delete config; }

psm_status psm_plan(const psm_config* config, char** out_text) {
  if (config == nullptr || out_text == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_plan: null argument");
  }
  return guarded([&] {
    *out_text = dup_string(psiminer::describe_plan(psiminer::discover(config->value)));
    return PSM_OK;
  });
}

psm_status psm_run(const psm_config* config, psm_stats** out) {
  if (config == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_run: null argument");
  }
  return guarded([&] {
    *out = new psm_stats{psiminer::run(config->value)};
    return PSM_OK;
  });
}

psm_status psm_mine_source(const psm_config* config, const char* source, size_t len,
                           char** out_lines) {
  if (config == nullptr || (source == nullptr && len > 0) || out_lines == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_mine_source: null argument");
  }
  return guarded([&] {
    const auto result = psiminer::process_source(
        std::string_view(source == nullptr ? "" : source, len), "<memory>",
        config->value);
    if (result.stats.parse_failures > 0) {
      return fail(PSM_ERR_PARSE, result.stats.diagnostics.empty()
                                     ? "parse failure"
                                     : result.stats.diagnostics.front());
    }
    std::string joined;
    for (const auto& line : result.lines) joined += line;
    *out_lines = dup_string(joined);
    return PSM_OK;
  });
}

psm_status psm_check_lossless(const char* source, size_t len, int* out_ok) {
  if ((source == nullptr && len > 0) || out_ok == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_check_lossless: null argument");
  }
  return guarded([&] {
    const std::string_view text(source == nullptr ? "" : source, len);
    *out_ok = psiminer::reconstruct(psiminer::parse_file(text)) == text ? 1 : 0;
    return PSM_OK;
  });
}

psm_status psm_stats_counter(const psm_stats* stats, const char* name, uint64_t* out) {
  if (stats == nullptr || name == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_stats_counter: null argument");
  }
  return guarded([&] {
    const auto j = nlohmann::json::parse(stats->value.to_json());
    if (!j.contains(name) || !j[name].is_number_unsigned()) {
      return fail(PSM_ERR_INVALID_ARGUMENT,
                  std::string("psm_stats_counter: no counter named ") + name);
    }
    *out = j[name].get<uint64_t>();
    return PSM_OK;
  });
}

psm_status psm_stats_json(const psm_stats* stats, char** out) {
  if (stats == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_stats_json: null argument");
  }
  return guarded([&] {
    *out = dup_string(stats->value.to_json());
    return PSM_OK;
  });
}

psm_status psm_stats_summary(const psm_stats* stats, char** out) {
  if (stats == nullptr || out == nullptr) {
    return fail(PSM_ERR_INVALID_ARGUMENT, "psm_stats_summary: null argument");
  }
  return guarded([&] {
    *out = dup_string(stats->value.summary());
    return PSM_OK;
  });
}

size_t psm_stats_diagnostic_count(const psm_stats* stats) {
  return stats == nullptr ? 0 : stats->value.diagnostics.size();
}

const char* psm_stats_diagnostic(const psm_stats* stats, size_t index) {
  if (stats == nullptr || index >= stats->value.diagnostics.size()) return nullptr;
  return stats->value.diagnostics[index].c_str();
}

void psm_stats_free(psm_stats* stats) { delete stats; }

}  // extern "C"
