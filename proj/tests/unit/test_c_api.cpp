#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "psiminer/psiminer.h"

namespace fs = std::filesystem;

namespace {

const char* kConfig = R"({
  "input_dir": "in", "output_dir": "out", "granularity": "method",
  "label_extractor": "method_name", "storage": {"format": "code2seq"}
})";

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  psm_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and null arguments") {
  CHECK(std::strlen(psm_version()) > 0);
  psm_config* cfg = nullptr;
  CHECK(psm_config_parse(nullptr, 0, nullptr, &cfg) == PSM_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(psm_last_error()) > 0);
  CHECK(psm_run(nullptr, nullptr) == PSM_ERR_INVALID_ARGUMENT);
  psm_config_free(nullptr);
  psm_stats_free(nullptr);
  CHECK(psm_stats_diagnostic_count(nullptr) == 0);
  CHECK(psm_stats_diagnostic(nullptr, 0) == nullptr);
}

TEST_CASE("config errors map to the config status") {
  psm_config* cfg = nullptr;
  const char* bad = R"({"input_dir": "in"})";
  CHECK(psm_config_parse(bad, std::strlen(bad), nullptr, &cfg) == PSM_ERR_CONFIG);
  CHECK(cfg == nullptr);
  CHECK(std::string(psm_last_error()).find("output_dir") != std::string::npos);
  CHECK(psm_config_load("/definitely/not/here.json", &cfg) == PSM_ERR_CONFIG);
}

TEST_CASE("mine one source in memory") {
  psm_config* cfg = nullptr;
  REQUIRE(psm_config_parse(kConfig, std::strlen(kConfig), nullptr, &cfg) == PSM_OK);
  const char* src = "class A { int x; int getX() { return x; } }";
  char* lines = nullptr;
  REQUIRE(psm_mine_source(cfg, src, std::strlen(src), &lines) == PSM_OK);
  CHECK(take(lines) ==
        "get|x int,TYPE_REF|METHOD_DECL|IDENTIFIER,METHOD_NAME "
        "int,TYPE_REF|METHOD_DECL|CODE_BLOCK|RETURN_STMT|REFERENCE_EXPR|IDENTIFIER,x "
        "METHOD_NAME,IDENTIFIER|METHOD_DECL|CODE_BLOCK|RETURN_STMT|REFERENCE_EXPR|IDENTIFIER,x\n");

  const char* broken = "class A { void f( }";
  CHECK(psm_mine_source(cfg, broken, std::strlen(broken), &lines) == PSM_ERR_PARSE);
  CHECK(std::string(psm_last_error()).find("parse error") != std::string::npos);
  psm_config_free(cfg);
}

TEST_CASE("lossless check") {
  int ok = 0;
  const char* src = "class A {\r\n\t// c\n}";
  REQUIRE(psm_check_lossless(src, std::strlen(src), &ok) == PSM_OK);
  CHECK(ok == 1);
  CHECK(psm_check_lossless("\"x", 2, &ok) == PSM_ERR_PARSE);
}

TEST_CASE("run a corpus and read statistics") {
  const fs::path dir = fs::temp_directory_path() / "psm_c_api_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "in");
  std::ofstream(dir / "in" / "A.java") << "class A { void f() { } void g() { f(); } }";
  std::ofstream(dir / "in" / "B.java") << "class B { void h( }";
  const std::string cfg_path = (dir / "run.json").string();
  std::ofstream(cfg_path) << kConfig;

  psm_config* cfg = nullptr;
  REQUIRE(psm_config_load(cfg_path.c_str(), &cfg) == PSM_OK);
  CHECK(psm_config_set_parallelism(cfg, 0) == PSM_ERR_CONFIG);
  CHECK(psm_config_set_parallelism(cfg, 2) == PSM_OK);

  char* plan = nullptr;
  REQUIRE(psm_plan(cfg, &plan) == PSM_OK);
  CHECK(take(plan).find("2 file(s)") != std::string::npos);
  CHECK_FALSE(fs::exists(dir / "out"));

  psm_stats* stats = nullptr;
  REQUIRE(psm_run(cfg, &stats) == PSM_OK);
  uint64_t n = 0;
  CHECK(psm_stats_counter(stats, "samples_written", &n) == PSM_OK);
  CHECK(n == 2);
  CHECK(psm_stats_counter(stats, "parse_failures", &n) == PSM_OK);
  CHECK(n == 1);
  CHECK(psm_stats_counter(stats, "no_such_counter", &n) == PSM_ERR_INVALID_ARGUMENT);
  REQUIRE(psm_stats_diagnostic_count(stats) == 1);
  CHECK(std::string(psm_stats_diagnostic(stats, 0)).find("B.java") != std::string::npos);
  char* json = nullptr;
  REQUIRE(psm_stats_json(stats, &json) == PSM_OK);
  CHECK(take(json).find("\"files_seen\":2") != std::string::npos);
  char* summary = nullptr;
  REQUIRE(psm_stats_summary(stats, &summary) == PSM_OK);
  CHECK_FALSE(take(summary).empty());
  psm_stats_free(stats);
  psm_config_free(cfg);
  CHECK(fs::exists(dir / "out" / "dataset.data.c2s"));
  CHECK(fs::exists(dir / "out" / "stats.json"));
  fs::remove_all(dir);
}
