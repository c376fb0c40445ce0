#include "doctest.h"

#include <filesystem>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "support/test_support.hpp"

using namespace psiminer;

namespace {

const char* kMinimal = R"({
  "input_dir": "in", "output_dir": "out", "granularity": "method",
  "label_extractor": "method_name", "storage": {"format": "code2seq"}
})";

std::string config_error(const std::string& raw) {
  try {
    validate_config(raw);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
  const PipelineConfig c = validate_config(kMinimal);
  CHECK(c.miner.max_path_nodes == 9);
  CHECK(c.miner.max_path_width == 2);
  CHECK(c.miner.max_contexts == 200);
  CHECK(c.miner.rng_seed == 0);
  CHECK(c.source_extensions == std::vector<std::string>{".java"});
  CHECK(c.dataset_name == "dataset");
  CHECK(c.parallelism == 1);
  CHECK(c.filters.empty());
  CHECK(c.granularity == Granularity::Method);
  CHECK(c.extractor == ExtractorKind::MethodName);
  CHECK(c.format == StorageFormat::Code2seq);
  CHECK(c.ignore.kinds() == IgnoreList::defaults().kinds());
  CHECK(c.special_tokens.method_name == "METHOD_NAME");
  CHECK(c.special_tokens.self == "SELF");
}

TEST_CASE("file granularity with method_name extractor") {
  const std::string msg = config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "file",
    "label_extractor": "method_name", "storage": {"format": "code2seq"}})");
  CHECK(msg.find("label_extractor") != std::string::npos);
}

TEST_CASE("negative max_path_nodes") {
  CHECK_FALSE(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "method",
    "label_extractor": "method_name", "storage": {"format": "code2seq"},
    "miner": {"max_path_nodes": -3}})").empty());
}

TEST_CASE("all problems are reported together") {
  const std::string msg = config_error(R"({
    "input_dir": "in", "granularity": "statement", "colour": "blue",
    "label_extractor": "none", "storage": {"format": "csv"},
    "filters": [{"name": "dedupe"}], "ignore_node_kinds": ["NOPE"]})");
  for (const char* needle : {"output_dir", "statement", "colour", "csv", "dedupe", "NOPE"}) {
    CHECK_MESSAGE(msg.find(needle) != std::string::npos, std::string(needle));
  }
}

TEST_CASE("full config") {
  const PipelineConfig c = validate_config(R"({
    "input_dir": "corpus", "output_dir": "/abs/out", "dataset_name": "java-small",
    "source_extensions": [".java", ".jav"],
    "ignore_node_kinds": ["KEYWORD", "LINE_COMMENT", "BLOCK_COMMENT"],
    "granularity": "method",
    "filters": [{"name": "tree_size", "max_nodes": 500, "min_nodes": 3},
                {"name": "code_lines", "max_lines": 40},
                {"name": "abstract_method"}, {"name": "override_method"},
                {"name": "constructor"}],
    "label_extractor": {"name": "method_name", "method_name_token": "<M>", "self_token": "<S>"},
    "miner": {"max_path_nodes": 8, "max_path_width": 3, "max_contexts": 100, "rng_seed": 7},
    "storage": {"format": "code2seq_typed"},
    "parallelism": 4})",
                                           "/base");
  CHECK(c.input_dir == std::filesystem::path("/base/corpus"));
  CHECK(c.output_dir == std::filesystem::path("/abs/out"));
  CHECK(c.dataset_name == "java-small");
  CHECK(c.source_extensions.size() == 2);
  CHECK(c.ignore.contains(CstKind::LINE_COMMENT));
  CHECK_FALSE(c.ignore.contains(CstKind::OPERATOR));
  REQUIRE(c.filters.size() == 5);
  CHECK(c.filters[0].max_nodes == 500);
  CHECK(c.filters[0].min_nodes == 3u);
  CHECK(c.filters[1].max_lines == 40);
  CHECK(c.special_tokens.method_name == "<M>");
  CHECK(c.special_tokens.self == "<S>");
  CHECK(c.miner.max_path_nodes == 8);
  CHECK(c.miner.rng_seed == 7);
  CHECK(c.format == StorageFormat::Code2seqTyped);
  CHECK(c.parallelism == 4);
}

TEST_CASE("method-only filter needs method granularity") {
  CHECK_FALSE(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "class",
    "label_extractor": "none", "storage": {"format": "jsonl_trees"},
    "filters": [{"name": "constructor"}]})").empty());
  CHECK(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "class",
    "label_extractor": "none", "storage": {"format": "jsonl_trees"},
    "filters": [{"name": "tree_size", "max_nodes": 10}]})").empty());
}

TEST_CASE("malformed values") {
  CHECK_FALSE(config_error("not json").empty());
  CHECK_FALSE(config_error("[]").empty());
  CHECK_FALSE(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "method",
    "label_extractor": "method_name", "storage": {"format": "code2seq"},
    "parallelism": 0})").empty());
  CHECK_FALSE(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "method",
    "label_extractor": "method_name", "storage": {"format": "code2seq"},
    "filters": [{"name": "tree_size", "max_nodes": 5, "min_nodes": 9}]})").empty());
  CHECK_FALSE(config_error(R"({
    "input_dir": "in", "output_dir": "out", "granularity": "method",
    "label_extractor": "method_name", "storage": {"format": "code2seq"},
    "filters": [{"name": "code_lines"}]})").empty());
}

TEST_CASE("load_config resolves against the file's directory") {
  const auto dir = std::filesystem::temp_directory_path() / "psm_config_test";
  std::filesystem::remove_all(dir);
  psm_test::write_text(dir / "run.json", kMinimal);
  const PipelineConfig c = load_config(dir / "run.json");
  CHECK(c.input_dir == dir / "in");
  CHECK(c.output_dir == dir / "out");
  CHECK_THROWS_AS(load_config(dir / "absent.json"), ConfigError);
  std::filesystem::remove_all(dir);
}
