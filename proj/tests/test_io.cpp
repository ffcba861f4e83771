#include <doctest.h>

#include "ybpe/io.hpp"

using namespace ybpe;
using nlohmann::json;

TEST_CASE("semigroup json round trip") {
  const Semigroup sg = rectangular_band(2, 2);
  CHECK(semigroup_from_json(semigroup_to_json(sg)) == sg);
}

TEST_CASE("readers reject malformed semigroup objects") {
  CHECK_THROWS_AS(semigroup_from_json(json{{"order", 2}}), BadParamsError);
  // extra row
  CHECK_THROWS_AS(
      semigroup_from_json(json{{"order", 2}, {"table", {{0, 0}, {1, 1}, {0, 0}}}}),
      BadParamsError);
  // short row
  CHECK_THROWS_AS(semigroup_from_json(json{{"order", 2}, {"table", {{0, 0}, {1}}}}),
                  BadParamsError);
  // non-associative content still fails
  CHECK_THROWS_AS(
      semigroup_from_json(json{{"order", 2}, {"table", {{1, 0}, {0, 0}}}}),
      NotAssociativeError);
}

TEST_CASE("solution json round trip, with and without the cross reference") {
  const PairMap m = PairMap::flip(3);
  CHECK(pair_map_from_json(pair_map_to_json(m)) == m);
  const json with_ref = pair_map_to_json(m, cyclic_group(3));
  CHECK(with_ref.contains("semigroup"));
  CHECK(pair_map_from_json(with_ref) == m);
}

TEST_CASE("matched system json round trip, beta nullable") {
  MatchedSystem sys{left_zero(2), right_zero(2),
                    {{0, 0}, {0, 0}}, std::vector<std::vector<int>>{{1, 1}, {1, 1}}};
  const MatchedSystem back = matched_system_from_json(matched_system_to_json(sys));
  CHECK(back.S == sys.S);
  CHECK(back.alpha == sys.alpha);
  REQUIRE(back.beta);
  CHECK(*back.beta == *sys.beta);

  sys.beta.reset();
  const json j = matched_system_to_json(sys);
  CHECK(j["beta"].is_null());
  CHECK(!matched_system_from_json(j).beta);
}

TEST_CASE("verdict json shape") {
  const json ok = verdict_to_json(Verdict::ok(), "pentagon");
  CHECK(ok["holds"] == true);
  CHECK(ok["counterexample"].is_null());
  CHECK(ok["equation"] == "pentagon");
  const json bad = verdict_to_json(Verdict::fail("Y1", {0, 1, 0}));
  CHECK(bad["holds"] == false);
  CHECK(bad["condition_tag"] == "Y1");
  CHECK(bad["counterexample"] == json::array({0, 1, 0}));
}
