#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "movsig/result_table.hpp"

using namespace movsig;

namespace {

ResultTable small_table() {
  ResultTable t;
  t.columns = {"x", "y"};
  t.rows = {{1.0, 0.5}, {2.0, 6.4e9 / 1023.0}};
  t.config_json = R"({"a":1,"b":"two"})";
  t.seed = 42;
  t.tool = "movsig 0.1.0";
  return t;
}

}  // namespace

TEST_CASE("csv layout is metadata, header, rows") {
  std::ostringstream out;
  small_table().write_csv(out);
  const std::string expected =
      "# config={\"a\":1,\"b\":\"two\"}\n"
      "# seed=42\n"
      "# tool=movsig 0.1.0\n"
      "x,y\n"
      "1.0000000000000000e+00,5.0000000000000000e-01\n"
      "2.0000000000000000e+00,6.2561094819159331e+06\n";
  CHECK(out.str() == expected);
}

TEST_CASE("timestamp line appears only when set") {
  ResultTable t = small_table();
  t.timestamp = "2026-01-01T00:00:00Z";
  std::ostringstream out;
  t.write_csv(out);
  CHECK(out.str().find("# generated=2026-01-01T00:00:00Z\n") != std::string::npos);
}

TEST_CASE("csv doubles round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 6.4e9 / 1023.0, 8.893e-8, -0.0, 1e300}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("json serialization embeds the parsed config") {
  std::ostringstream out;
  small_table().write_json(out);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["tool"] == "movsig 0.1.0");
  CHECK(doc["seed"] == 42);
  CHECK(doc["config"]["a"] == 1);
  CHECK(doc["config"]["b"] == "two");
  CHECK(doc["columns"] == nlohmann::json({"x", "y"}));
  CHECK(doc["rows"][0][0] == 1.0);
  CHECK(doc["rows"][1][1] == doctest::Approx(6.4e9 / 1023.0));
  CHECK_FALSE(doc.contains("generated"));
}

TEST_CASE("row width mismatches are rejected") {
  ResultTable t = small_table();
  t.rows.push_back({1.0});
  std::ostringstream out;
  CHECK_THROWS_AS(t.write_csv(out), std::logic_error);
}
