#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "alexq/error.hpp"
#include "alexq/formats.hpp"
#include "alexq/linearq.hpp"
#include "doctest.h"

using namespace alexq;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("alexq-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

std::string parse_error_of(std::string_view text) {
  try {
    parse_table(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("module specs") {
  CHECK(parse_module_spec("L16/3") == build_linear(LinearQuandleSpec(16, 3)));
  CHECK(parse_module_spec("4,4|0,1;3,2").t().to_string() == "0,1;3,2");
  CHECK(parse_module_spec(" 2,8 | 1,0;0,1 ").group().to_string() == "2,8");
  CHECK(parse_module_spec("1|").order() == 1);
  CHECK_THROWS_AS(parse_module_spec(""), ParseError);
  CHECK_THROWS_AS(parse_module_spec("4,4"), ParseError);
  CHECK_THROWS_AS(parse_module_spec("8,2|1,0;0,1"), ParseError);
  CHECK_THROWS_AS(parse_module_spec("4,4|1,0;1,0"), ParseError);
  CHECK_THROWS_AS(parse_module_spec("L16/4"), ParseError);
}

TEST_CASE("table files round-trip bit-exactly") {
  for (const char* spec : {"L16/3", "4,4|0,1;3,2", "2,2|0,1;1,1", "1|"}) {
    const auto table = alexander_table(parse_module_spec(spec));
    const auto text = format_table(table);
    CHECK(parse_table(text) == table);
    CHECK(format_table(parse_table(text)) == text);
  }
  CHECK(format_table(alexander_table(parse_module_spec("L3/2"))) == "3\n0 2 1\n2 1 0\n1 0 2\n");
  CHECK(parse_table("2\r\n0 0\r\n1 1\r\n\n") == parse_table("2\n0 0\n1 1\n"));
}

TEST_CASE("table parse errors carry line and column") {
  CHECK(parse_error_of("") == "line 1, column 1: empty table file");
  CHECK(parse_error_of("x\n") .find("line 1, column 1") == 0);
  CHECK(parse_error_of("2\n0 0\n").find("line 2") == 0);
  CHECK(parse_error_of("2\n0 0\n1 5\n").find("line 3, column 3") == 0);
  CHECK(parse_error_of("2\n0 0\n1\n").find("line 3, column 2") == 0);
  CHECK(parse_error_of("2\n0 0 1\n1 1\n").find("line 2, column 5") == 0);
  CHECK(parse_error_of("3\n0 0 0\n0 1 1\n2 2 -1\n").find("line 4, column 5") == 0);
}

TEST_CASE("JSON reports round-trip byte for byte") {
  for (std::size_t n : {1u, 4u, 8u, 16u}) {
    const auto report = classify_order(n);
    const auto json = report_to_json(report);
    const auto parsed = report_from_json(json);
    CHECK(parsed == report);
    CHECK(report_to_json(parsed) == json);
  }
  CHECK_THROWS_AS(report_from_json("{"), ParseError);
  CHECK_THROWS_AS(report_from_json("{\"order\": 4}"), ParseError);
}

TEST_CASE("JSON layout") {
  const auto json = report_to_json(classify_order(2));
  CHECK(json ==
        "{\n"
        "  \"order\": 2,\n"
        "  \"generated_by\": \"alexq 1.0.0\",\n"
        "  \"classes\": [\n"
        "    {\n"
        "      \"id\": 1,\n"
        "      \"image_label\": \"0\",\n"
        "      \"image\": {\n"
        "        \"group\": \"1\",\n"
        "        \"t\": \"\"\n"
        "      },\n"
        "      \"connected\": false,\n"
        "      \"members\": [\n"
        "        {\n"
        "          \"group\": \"2\",\n"
        "          \"phi\": \"1\",\n"
        "          \"class_size\": 1\n"
        "        }\n"
        "      ]\n"
        "    }\n"
        "  ],\n"
        "  \"per_group_counts\": {\n"
        "    \"2\": 1\n"
        "  },\n"
        "  \"totals\": {\n"
        "    \"classes\": 1,\n"
        "    \"connected\": 0\n"
        "  }\n"
        "}\n");
}

TEST_CASE("CSV has one row per class") {
  const auto report = classify_order(16);
  const auto csv = report_to_csv(report);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,image_label,connected,members");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
  }
  CHECK(rows == report.classes.size());
  CHECK(csv.find("\"(ℤ4⊕ℤ4; t=") != std::string::npos);  // comma-bearing labels are quoted

  std::istringstream connected(report_to_csv(report, true));
  std::size_t connected_rows = 0;
  std::getline(connected, line);
  while (std::getline(connected, line)) {
    ++connected_rows;
    CHECK(line.find(",true,") != std::string::npos);
  }
  CHECK(connected_rows == report.connected_count);
}

TEST_CASE("text report") {
  const auto text = report_to_text(classify_order(16));
  CHECK(text.substr(text.rfind('\n', text.size() - 2) + 1) == "23 classes, 9 connected\n");
  CHECK(text.find("(1-t)M = Λ8/t-3") != std::string::npos);
  CHECK(text.find("* ") != std::string::npos);
}

TEST_CASE("file cache") {
  TempDir dir;
  FileCarrierCache cache(dir.path / "nested");
  const AbelianGroup g({4, 4});
  CHECK_FALSE(cache.load(g));
  CHECK(cache.path_for(g).filename() == "carrier-4_4@alexq-1.0.0.json");

  const auto result = analyze_carrier(g);
  cache.store(result);
  const auto loaded = cache.load(g);
  REQUIRE(loaded);
  CHECK(*loaded == result);

  // Another version never sees this entry.
  FileCarrierCache other(dir.path / "nested", "alexq 0.9");
  CHECK_FALSE(other.load(g));

  // Corrupt entries are misses, and classification still succeeds through them.
  { std::ofstream(cache.path_for(g), std::ios::trunc) << "{ not json"; }
  CHECK_FALSE(cache.load(g));
  ClassifyOptions opts;
  opts.cache = &cache;
  CHECK(classify_order(16, opts) == classify_order(16));
  CHECK(cache.load(g).has_value());
  CHECK(classify_order(16, opts) == classify_order(16));

  std::size_t leftovers = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path / "nested"))
    leftovers += e.path().string().find(".tmp-") != std::string::npos;
  CHECK(leftovers == 0);
}

TEST_CASE("default cache directory honours ALEXQ_CACHE") {
  ::setenv("ALEXQ_CACHE", "/tmp/somewhere", 1);
  CHECK(default_cache_directory() == "/tmp/somewhere");
  ::unsetenv("ALEXQ_CACHE");
  CHECK(default_cache_directory() == ".alexq-cache");
}
