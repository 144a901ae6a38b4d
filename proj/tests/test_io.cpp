#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "snwalk/io.hpp"

TEST_CASE("real formatting round-trips binary64") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-300, 123456789.123456789, -7.0}) {
    CHECK(std::stod(snwalk::format_real(v)) == v);
  }
  CHECK(snwalk::format_real(0.5) == "0.5");
}

TEST_CASE("spectrum CSV layout") {
  std::ostringstream out;
  snwalk::write_csv(out, snwalk::spectrum_table(snwalk::build_spectrum(3)));
  CHECK(out.str() ==
        "lambda,dim,r_num,r_den,s,zone\n"
        "3,1,1,1,1,A3\n"
        "2-1,2,0,1,0.33333333333333331,A3\n"
        "1-1-1,1,-1,1,-0.33333333333333331,A3\n");
}

TEST_CASE("JSON variant carries the same fields") {
  const auto table = snwalk::spectrum_table(snwalk::build_spectrum(4));
  std::ostringstream out;
  snwalk::write_json(out, table);
  const auto parsed = nlohmann::json::parse(out.str());
  REQUIRE(parsed.size() == table.rows.size());
  std::vector<std::string> keys;
  for (auto it = parsed[0].begin(); it != parsed[0].end(); ++it) keys.push_back(it.key());
  std::vector<std::string> sorted_cols = table.columns;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  CHECK(keys == sorted_cols);
  CHECK(parsed[1]["lambda"] == "3-1");
  CHECK(parsed[1]["dim"] == 3);
}

TEST_CASE("big integers beyond int64 are emitted as text") {
  const auto cell = snwalk::big_cell(snwalk::factorial(25));
  REQUIRE(std::holds_alternative<std::string>(cell));
  CHECK(std::get<std::string>(cell) == "15511210043330985984000000");
  CHECK(std::get<std::int64_t>(snwalk::big_cell(snwalk::BigInt(42))) == 42);
}

TEST_CASE("table width is enforced") {
  snwalk::DataTable t{{"a", "b"}, {}};
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::logic_error);
}
