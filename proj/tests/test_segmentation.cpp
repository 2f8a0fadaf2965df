#include "doctest.h"
#include "mmdseg/error.hpp"
#include "mmdseg/segmentation.hpp"

using namespace mmdseg;

TEST_SUITE("segmentation") {

TEST_CASE("segments and breakfractions") {
  const Segmentation s(300, {100, 200});
  CHECK(s.count() == 2);
  const auto segs = s.segments();
  REQUIRE(segs.size() == 3);
  CHECK(segs[0] == Segment{0, 100});
  CHECK(segs[2] == Segment{200, 300});
  CHECK(s.breakfractions() == std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
  CHECK(Segmentation::from_lengths({100, 100, 100}) == s);
  CHECK(Segmentation(5, {}).segments().size() == 1);
}

TEST_CASE("invalid boundaries are rejected") {
  CHECK_THROWS_AS(Segmentation(10, {0}), ConfigError);
  CHECK_THROWS_AS(Segmentation(10, {10}), ConfigError);
  CHECK_THROWS_AS(Segmentation(10, {5, 5}), ConfigError);
  CHECK_THROWS_AS(Segmentation(10, {6, 3}), ConfigError);
  CHECK_THROWS_AS(Segmentation::from_lengths({3, 0, 2}), ConfigError);
}

}
