#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "mmdseg/error.hpp"
#include "mmdseg/io.hpp"

using namespace mmdseg;

namespace {

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_csv(in, "f.csv");
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse rectangular csv") {
  std::istringstream in("1,2,3,4\n5,6,7,8\n9,10,11,12\n");
  const Dataset d = parse_csv(in);
  CHECK(d.size() == 3);
  CHECK(d.grid_size() == 4);
  CHECK(d[2][3] == 12.0);
}

TEST_CASE("header, blank lines, CRLF and spacing") {
  std::istringstream in("t1,t2,t3\r\n1, 2 ,3\r\n\r\n-4e-1,+5,6.5\r\n");
  const Dataset d = parse_csv(in);
  CHECK(d.size() == 2);
  CHECK(d[1][0] == -0.4);
  CHECK(d[1][1] == 5.0);
}

TEST_CASE("parse errors carry locations") {
  CHECK(error_of("1,2\n3,4,5\n").find("f.csv:2") != std::string::npos);
  CHECK(error_of("1,2\n3,4,5\n").find("row 2") != std::string::npos);
  CHECK(error_of("1,2\n3,abc\n").find("f.csv:2:2") != std::string::npos);
  CHECK(error_of("1,2\n3,\n").find("f.csv:2:2") != std::string::npos);
  CHECK(error_of("1,nan\n").find("f.csv:1:2") == std::string::npos);  // header
  CHECK(error_of("a,b\nc,d\n").find("f.csv:2:1") != std::string::npos);
  CHECK(error_of("").find("no numeric rows") != std::string::npos);
  CHECK(error_of("a,b\n").find("no numeric rows") != std::string::npos);
  CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), DataError);
}

TEST_CASE("csv round trip is exact") {
  Dataset d(2, 3);
  const double values[] = {0.1, -1.0 / 3.0, 1e-300, std::numeric_limits<double>::max(), 2.5, -0.0};
  for (std::size_t i = 0; i < 6; ++i) d.row(i / 3)[i % 3] = values[i];
  std::ostringstream out;
  write_csv(out, d);
  std::istringstream in(out.str());
  const Dataset back = parse_csv(in);
  CHECK(back.values() == d.values());
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("json shapes") {
  const Segmentation s(10, {3, 7});
  const auto j = to_json(s);
  CHECK(j["K_hat"] == 2);
  CHECK(j["segments"][1] == nlohmann::json::array({3, 7}));
  TraceRecord r;
  r.action = TraceAction::split;
  r.block = {0, 10};
  r.split = 3;
  r.p_value = 0.01;
  const auto t = to_json(r);
  CHECK(t["action"] == "split");
  CHECK(t["rho"].is_null());
  DescResult res{s, {r}};
  const auto d = boundary_decisions(res);
  REQUIRE(d.size() == 2);
  CHECK(d[0]["decision"] == "split");
  CHECK(d[0]["p_value"] == 0.01);
  CHECK(d[1]["decision"].is_null());
}

}
