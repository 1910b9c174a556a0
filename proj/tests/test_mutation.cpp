#include <algorithm>
#include <random>

#include "doctest.h"

#include "gentle/canonical.hpp"
#include "gentle/classification.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/io.hpp"
#include "gentle/mutation.hpp"
#include "gentle/normal_form.hpp"
#include "gentle/phi.hpp"
#include "support/generators.hpp"

using namespace gentle;

namespace {

BoundQuiver a3() {
  return BoundQuiver({"1", "2", "3"}, {{"b", "3", "2"}, {"a", "2", "1"}}, {});
}

}  // namespace

TEST_CASE("admissibility") {
  auto q = a3();
  CHECK(is_admissible(q, q.vertex("2")));
  CHECK(is_admissible(q, q.vertex("1")));   // sink
  CHECK_FALSE(is_admissible(q, q.vertex("3")));  // source with an out-arrow
  auto c = make_normal_form({1, 1, 3});
  CHECK(admissible_vertices(c).empty());
}

TEST_CASE("tilt at the middle of a hereditary A3") {
  auto [r, step] = mutate(a3(), "2");
  BoundQuiver expected({"1", "2", "3"}, {{"b", "2", "3"}, {"a", "3", "1"}}, {{"b", "a"}});
  CHECK(serialize(r) == serialize(expected));
  CHECK(phi(r).to_string() == "1·(4,2)");
  CHECK(phi(r) == phi(a3()));
  CHECK(step.kind == MutationKind::tilt);
  CHECK(step.vertex == "2");
  CHECK(step.before == digest(a3()));
  CHECK(step.after == digest(r));
}

TEST_CASE("reflections at sinks and sources") {
  BoundQuiver a2({"x", "y"}, {{"a", "x", "y"}}, {});
  auto        t = mutate(a2, "y").first;
  CHECK(serialize(t) == serialize(BoundQuiver({"x", "y"}, {{"a", "y", "x"}}, {})));
  auto c = comutate(a2, "x").first;
  CHECK(serialize(c) == serialize(BoundQuiver({"x", "y"}, {{"a", "y", "x"}}, {})));
  CHECK_THROWS_AS(mutate(a2, "x"), std::invalid_argument);
}

TEST_CASE("dual tilt on A3") {
  auto r = comutate(a3(), "2").first;
  CHECK(is_gentle(r));
  CHECK(r.relation_count() == 1);
  CHECK(phi(r) == phi(a3()));
}

TEST_CASE("pushing a relation along a chain") {
  BoundQuiver q({"w", "y", "z1"}, {{"g", "w", "y"}, {"b", "y", "z1"}}, {{"g", "b"}});
  auto        r = mutate(q, "z1").first;
  BoundQuiver expected({"w", "y", "z1"}, {{"g", "w", "z1"}, {"b", "z1", "y"}}, {});
  CHECK(serialize(r) == serialize(expected));
  auto red = reduce_to_A_branched(q, 1);
  CHECK(red.complete);
  CHECK(red.log.steps.size() == 1);
  CHECK(isomorphic(red.result, expected));
  CHECK(phi(red.result) == phi(q));
}

TEST_CASE("off-cycle relations and splits") {
  auto i2 = fixture("ex3_2_I2");
  auto off = off_cycle_relations(i2);
  CHECK(off.size() == 4);
  for (auto const& r : off) CHECK(r.first.front() == 'a');
  CHECK(off_cycle_relations(fixture("ex3_2_I1")).empty());
  CHECK(off_cycle_relations(make_normal_form({2, 2, 8})).empty());

  auto split = split_at_relation(i2, {"a1", "a2"});
  CHECK(split.y == "p2");
  auto contains = [](std::vector<std::string> const& v, std::string const& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  CHECK(contains(split.minus, "q1"));
  CHECK(contains(split.plus, "r1"));
  CHECK(split.perp.empty());

  auto a = fixture("ex7_8_A");
  auto s2 = split_at_relation(a, {"b2", "b3"});
  CHECK(s2.y == "t3");
  CHECK(contains(s2.plus, "p"));
  CHECK(contains(s2.plus, "r"));

  BoundQuiver chain({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}}, {{"a", "b"}});
  auto sc = split_at_relation(chain, {"a", "b"});
  CHECK(sc.perp.empty());
  CHECK(extremal_kind(chain, sc) == Extremal::both);
  CHECK(std::string(to_string(Extremal::both)) == "both");
}

TEST_CASE("extremal relations of the two-sided example") {
  auto q = fixture("ex6_6");
  auto kind = [&](Relation const& r) { return extremal_kind(q, split_at_relation(q, r)); };
  CHECK(kind({"mx", "xj"}) == Extremal::plus);
  CHECK(kind({"zy", "yn"}) == Extremal::minus);
}

TEST_CASE("reduction of the fixtures") {
  auto i2 = fixture("ex3_2_I2");
  auto red = reduce_to_A_branched(i2, 3);
  REQUIRE(red.complete);
  CHECK(is_A_branched(red.result, 3));
  CHECK(invariant_pair(red.result, 3) == InvariantPair{2, 14});
  CHECK(replay(red.log).empty());
  CHECK(red.log.start.vertex_count() == 14);
  CHECK(digest(red.log.end) == digest(red.result));

  auto nf = make_normal_form({2, 1, 6});
  auto same = reduce_to_A_branched(nf, 2);
  CHECK(same.log.steps.empty());
  CHECK(serialize(same.result) == serialize(nf));

  auto r66 = reduce_to_A_branched(fixture("ex6_6"), 1);
  CHECK(r66.complete);
  CHECK(replay(r66.log).empty());
  CHECK(phi(r66.result) == phi(fixture("ex6_6")));

  auto r78 = reduce_to_A_branched(fixture("ex7_8_A"), 1);
  CHECK(r78.complete);
  CHECK(derived_equivalent(r78.result, fixture("ex7_8_A"), 1).verdict == Verdict::equivalent);

  CHECK_THROWS_AS(reduce_to_A_branched(fixture("ex6_4_left"), 2), std::invalid_argument);
}

TEST_CASE("replay detects tampering") {
  auto red = reduce_to_A_branched(fixture("ex3_2_I2"), 3);
  REQUIRE_FALSE(red.log.steps.empty());
  auto bad = red.log;
  bad.steps.front().after = "0000000000000000";
  CHECK_FALSE(replay(bad).empty());
  auto wrong_end = red.log;
  wrong_end.end = fixture("ex3_2_I1");
  CHECK_FALSE(replay(wrong_end).empty());
}

TEST_CASE("random chains preserve the invariants") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    unsigned const m = 1 + i % 3;
    auto           q = testing::random_branched(rng, m, 12);
    auto           chain = testing::random_chain(rng, q, 6);
    auto           cycles = [](BoundQuiver const& x) {
      std::vector<std::size_t> lengths;
      for (auto const& c : full_relation_cycles(x)) lengths.push_back(c.size());
      std::sort(lengths.begin(), lengths.end());
      return lengths;
    };
    for (auto const& x : chain) {
      CHECK(is_gentle(x));
      CHECK(is_m_branched(x, m));
      CHECK(x.vertex_count() == q.vertex_count());
      CHECK(x.arrow_count() == q.arrow_count());
      CHECK(is_connected(x));
      CHECK(euler_characteristic(x) == euler_characteristic(q));
      CHECK(cycles(x) == cycles(q));
      CHECK(phi(x) == phi(q));
    }
  }
}

TEST_CASE("mutation kind names") {
  CHECK(parse_mutation_kind("tilt") == MutationKind::tilt);
  CHECK(parse_mutation_kind("cotilt") == MutationKind::cotilt);
  CHECK_THROWS_AS(parse_mutation_kind("twist"), std::invalid_argument);
}
