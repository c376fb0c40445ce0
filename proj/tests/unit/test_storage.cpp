#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "core/errors.hpp"
#include "core/storage.hpp"
#include "json.hpp"
#include "support/test_support.hpp"

using namespace psiminer;

namespace {

AstNode leaf(std::string type, std::string token) {
  AstNode n;
  n.node_type = std::move(type);
  n.token = std::move(token);
  return n;
}

PathContext x_equals_one(std::string start_type = "int", std::string end_type = "int") {
  return {{"x"}, std::move(start_type),
          {"IDENTIFIER", "REFERENCE_EXPR", "ASSIGNMENT_EXPR", "LITERAL"},
          {"1"}, std::move(end_type)};
}

LabeledTree get_x() { return {"getX", leaf("IDENTIFIER", "x")}; }

}  // namespace

TEST_CASE("untyped line") {
  CHECK(format_code2seq_line(get_x(), {x_equals_one()}, false) ==
        "get|x x,IDENTIFIER|REFERENCE_EXPR|ASSIGNMENT_EXPR|LITERAL,1\n");
}

TEST_CASE("typed line") {
  CHECK(format_code2seq_line(get_x(), {x_equals_one()}, true) ==
        "get|x x,int,IDENTIFIER|REFERENCE_EXPR|ASSIGNMENT_EXPR|LITERAL,1,int\n");
}

TEST_CASE("zero contexts") {
  CHECK(format_code2seq_line(get_x(), {}, false) == "get|x \n");
  std::ostringstream os;
  write_code2seq(get_x(), {}, true, os);
  CHECK(os.str() == "get|x \n");
}

TEST_CASE("multi-subtoken tokens and sanitized types") {
  PathContext c{{"first", "name"}, "Map<String, Integer>", {"A", "B"}, {"x"}, "int[]"};
  CHECK(format_code2seq_line(get_x(), {c, c}, true) ==
        "get|x first|name,Map<String;Integer>,A|B,x,int[] "
        "first|name,Map<String;Integer>,A|B,x,int[]\n");
  CHECK(sanitize_type(" a , b ") == "a;b");
}

TEST_CASE("jsonl single leaf") {
  CHECK(format_jsonl_line({"NO_LABEL", leaf("IDENTIFIER", "x")}) ==
        "[{\"type\":\"IDENTIFIER\",\"value\":\"x\",\"label\":\"NO_LABEL\"}]\n");
}

TEST_CASE("jsonl preorder numbering and token types") {
  AstNode root;
  root.node_type = "ROOT";
  AstNode typed = leaf("IDENTIFIER", "x");
  typed.resolved_type = "int";
  AstNode mid;
  mid.node_type = "MID";
  mid.children = {typed};
  root.children = {mid, leaf("LITERAL", "\"q\"")};
  const std::string line = format_jsonl_line({"lbl", root});
  CHECK(line ==
        "[{\"type\":\"ROOT\",\"children\":[1,3],\"label\":\"lbl\"},"
        "{\"type\":\"MID\",\"children\":[2]},"
        "{\"type\":\"IDENTIFIER\",\"value\":\"x\",\"token_type\":\"int\"},"
        "{\"type\":\"LITERAL\",\"value\":\"\\\"q\\\"\"}]\n");

  AstNode two;
  two.node_type = "R";
  two.children = {leaf("A", "a"), leaf("B", "b")};
  const auto j = nlohmann::json::parse(format_jsonl_line({"l", two}));
  REQUIRE(j.size() == 3);
  CHECK(j[0]["children"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("failing stream is an io error") {
  std::ostringstream os;
  os.setstate(std::ios::badbit);
  CHECK_THROWS_AS(write_code2seq(get_x(), {}, false, os), IoError);
  CHECK_THROWS_AS(write_jsonl_tree(get_x(), os), IoError);
}

TEST_CASE("statistics") {
  RunStatistics empty;
  auto j = nlohmann::json::parse(empty.to_json());
  for (const char* key : {"files_seen", "files_parsed", "parse_failures", "trees_before_filters",
                          "trees_after_filters", "samples_written", "contexts_min",
                          "contexts_max"}) {
    CHECK(j[key] == 0);
  }
  CHECK(j["contexts_mean"] == 0.0);

  RunStatistics a;
  a.files_seen = a.files_parsed = 1;
  a.trees_before_filters = 3;
  a.trees_after_filters = 2;
  a.filter_rejections["tree_size"] = 1;
  a.samples_written = 2;
  a.record_contexts(4);
  a.record_contexts(10);
  RunStatistics b;
  b.files_seen = 1;
  b.parse_failures = 1;
  b.record_contexts(1);
  a.merge(b);
  j = nlohmann::json::parse(a.to_json());
  CHECK(j["files_seen"] == 2);
  CHECK(j["parse_failures"] == 1);
  CHECK(j["trees_after_filters"] == 2);
  CHECK(j["rejected_by_tree_size"] == 1);
  CHECK(j["contexts_min"] == 1);
  CHECK(j["contexts_max"] == 10);
  CHECK(j["contexts_mean"] == doctest::Approx(5.0));
}

TEST_CASE("finalize writes stats.json and a summary") {
  const auto dir = std::filesystem::temp_directory_path() / "psm_storage_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  RunStatistics s;
  s.files_seen = s.files_parsed = s.samples_written = 1;
  std::ostringstream summary;
  finalize(s, dir, summary);
  const auto j = nlohmann::json::parse(psm_test::read_text(dir / "stats.json"));
  CHECK(j["files_parsed"] == 1);
  CHECK(j["samples_written"] == 1);
  CHECK(summary.str().find("samples written") != std::string::npos);
  CHECK_THROWS_AS(finalize(s, dir / "missing" / "deeper", summary), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("format names") {
  CHECK(format_from_name("code2seq") == StorageFormat::Code2seq);
  CHECK(format_from_name("code2seq_typed") == StorageFormat::Code2seqTyped);
  CHECK(format_from_name("jsonl_trees") == StorageFormat::JsonlTrees);
  CHECK_FALSE(format_from_name("csv").has_value());
  CHECK(file_extension(StorageFormat::Code2seqTyped) == ".c2s");
  CHECK(file_extension(StorageFormat::JsonlTrees) == ".jsonl");
}
