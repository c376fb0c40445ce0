// psiminer: mine code2seq / Python150k-style datasets from a source corpus.
//
//   psiminer --config run.json [--dry-run] [--parallelism N]
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "psiminer/psiminer.h"

namespace {

int exit_code(psm_status status) {
  switch (status) {
    case PSM_OK:
      return 0;
    case PSM_ERR_CONFIG:
    case PSM_ERR_INVALID_ARGUMENT:
      return 2;
    case PSM_ERR_IO:
      return 3;
    default:
      return 1;
  }
}

int report(psm_status status) {
  std::cerr << "psiminer: " << psm_last_error() << "\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine path-context and tree datasets from source code"};
  std::string config_path;
  bool dry_run = false;
  unsigned parallelism = 0;
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_flag("--dry-run", dry_run, "Validate the configuration and print the plan");
  app.add_option("--parallelism", parallelism, "Files processed concurrently")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  psm_config* config = nullptr;
  if (psm_status s = psm_config_load(config_path.c_str(), &config); s != PSM_OK) {
    return report(s);
  }
  if (parallelism > 0) psm_config_set_parallelism(config, parallelism);

  int code = 0;
  if (dry_run) {
    char* plan = nullptr;
    if (psm_status s = psm_plan(config, &plan); s != PSM_OK) {
      code = report(s);
    } else {
      std::cout << plan;
      psm_string_free(plan);
    }
    psm_config_free(config);
    return code;
  }

  psm_stats* stats = nullptr;
  if (psm_status s = psm_run(config, &stats); s != PSM_OK) {
    code = report(s);
  } else {
    for (size_t i = 0; i < psm_stats_diagnostic_count(stats); ++i) {
      std::cerr << "warning: " << psm_stats_diagnostic(stats, i) << "\n";
    }
    char* summary = nullptr;
    if (psm_stats_summary(stats, &summary) == PSM_OK) {
      std::cout << summary;
      psm_string_free(summary);
    }
    psm_stats_free(stats);
  }
  psm_config_free(config);
  return code;
}
