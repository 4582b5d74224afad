#include "lpm/lattice_path.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using lpm::LatticePath;
using lpm::parse_path;
using lpm::PathPair;
using lpm::Step;

TEST_CASE("parse round-trips and counts steps") {
  LatticePath p = parse_path("NENE");
  CHECK(p.length() == 4);
  CHECK(p.north() == 2);
  CHECK(p.east() == 2);
  CHECK(p.text() == "NENE");
  CHECK(p.steps[0] == Step::North);
  CHECK(p.steps[1] == Step::East);
  CHECK(parse_path("").length() == 0);
}

TEST_CASE("parse rejects foreign characters with a position") {
  CHECK_THROWS_WITH_AS(parse_path("NXE"), doctest::Contains("index 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("nE"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("NE "), std::invalid_argument);
}

TEST_CASE("height profile prefixes north counts") {
  LatticePath p = parse_path("NENE");
  CHECK(p.height_profile() == std::vector<int>{0, 1, 1, 2, 2});
  CHECK(parse_path("EEE").height_profile() == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("pair validation enforces shape and order") {
  CHECK_NOTHROW(lpm::validate_pair(parse_path("NENE"), parse_path("EENN")));
  CHECK_NOTHROW(lpm::validate_pair(parse_path("NE"), parse_path("NE")));  // equal paths allowed
  CHECK_THROWS_WITH_AS(lpm::validate_pair(parse_path("NE"), parse_path("NEN")),
                       doctest::Contains("length"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(lpm::validate_pair(parse_path("NN"), parse_path("EE")),
                       doctest::Contains("different points"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(lpm::validate_pair(parse_path("EN"), parse_path("NE")),
                       doctest::Contains("cross"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(lpm::validate_pair(parse_path("EN"), parse_path("NE")),
                       doctest::Contains("prefix 1"), std::invalid_argument);
  // Dipping below only later in the path is still caught.
  CHECK_THROWS_AS(lpm::validate_pair(parse_path("NEEN"), parse_path("NENE")),
                  std::invalid_argument);
}

TEST_CASE("hook bounding paths") {
  PathPair p22 = lpm::hook_pair(2, 2);
  CHECK(p22.upper.text() == "NENE");
  CHECK(p22.lower.text() == "EENN");
  PathPair p32 = lpm::hook_pair(3, 2);
  CHECK(p32.upper.text() == "NEENE");
  CHECK(p32.lower.text() == "EEENN");
  PathPair p41 = lpm::hook_pair(4, 1);
  CHECK(p41.upper.text() == "NEEEE");
  CHECK(p41.lower.text() == "EEEEN");
  PathPair p11 = lpm::hook_pair(1, 1);
  CHECK(p11.upper.text() == "NE");
  CHECK(p11.lower.text() == "EN");
  CHECK_THROWS_AS(lpm::hook_pair(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lpm::hook_pair(1, 0), std::invalid_argument);
}

TEST_CASE("border strip bounding paths") {
  PathPair s222 = lpm::border_strip_pair(2, 2, 2);
  CHECK(s222.upper.text() == "NENEE");
  CHECK(s222.lower.text() == "EENEN");
  // c = 1 collapses the strip onto the hook construction.
  PathPair s221 = lpm::border_strip_pair(2, 2, 1);
  PathPair h22 = lpm::hook_pair(2, 2);
  CHECK(s221.upper == h22.upper);
  CHECK(s221.lower == h22.lower);
  PathPair s111 = lpm::border_strip_pair(1, 1, 1);
  CHECK(s111.upper.text() == "NE");
  CHECK(s111.lower.text() == "EN");
  CHECK_THROWS_AS(lpm::border_strip_pair(0, 1, 1), std::invalid_argument);
}
