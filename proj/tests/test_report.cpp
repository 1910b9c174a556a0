#include "doctest.h"

#include "gentle/fixtures.hpp"
#include "gentle/io.hpp"
#include "gentle/mutation.hpp"
#include "gentle/report.hpp"

using namespace gentle;

TEST_CASE("quiver json round-trip") {
  for (auto const& name : fixture_names()) {
    auto q = fixture(name);
    CHECK(serialize(quiver_from_json(to_json(q))) == serialize(q));
  }
  CHECK_THROWS_AS(quiver_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("mutation log json round-trip replays") {
  auto red = reduce_to_A_branched(fixture("ex3_2_I2"), 3);
  auto text = to_json(red.log).dump();
  auto back = mutation_log_from_json(Json::parse(text));
  CHECK(back.steps == red.log.steps);
  CHECK(replay(back).empty());
  CHECK_THROWS_AS(mutation_log_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("report envelope") {
  auto q = fixture("ex7_8_A");
  auto r = make_report("validate", {q}, {{"ok", true}});
  CHECK(r["schema"] == report_schema_id);
  CHECK(r["command"] == "validate");
  CHECK(r["inputs"][0]["digest"] == digest(q));
  CHECK(r["inputs"][0]["name"] == "ex7_8_A");
  CHECK(r["result"]["ok"] == true);
  CHECK(r.contains("evidence"));
}

TEST_CASE("big integers serialize exactly") {
  CHECK(to_json(BigInt(42)) == 42);
  BigInt big = BigInt(1) << 80;
  CHECK(to_json(big) == "1208925819614629174706176");
}
