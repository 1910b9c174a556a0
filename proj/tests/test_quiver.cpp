#include <algorithm>
#include <random>

#include "doctest.h"

#include "gentle/cartan.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/io.hpp"
#include "gentle/normal_form.hpp"
#include "gentle/quiver.hpp"
#include "support/generators.hpp"

using namespace gentle;

namespace {

BoundQuiver three_cycle(bool full) {
  std::vector<Relation> rel{{"a", "b"}, {"b", "c"}};
  if (full) rel.push_back({"c", "a"});
  return BoundQuiver({"1", "2", "3"},
                     {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}, rel);
}

}  // namespace

TEST_CASE("construction rejects malformed data") {
  CHECK_THROWS_AS(BoundQuiver({"x", "x"}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(BoundQuiver({"x"}, {{"a", "x", "y"}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(BoundQuiver({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}},
                              {{"a", "b"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(three_cycle(true).vertex("nope"), std::invalid_argument);
}

TEST_CASE("gentle conditions") {
  CHECK(is_gentle(three_cycle(true)));
  CHECK(is_gentle(three_cycle(false)));

  // Three arrows out of one vertex.
  BoundQuiver star({"c", "x", "y", "z"},
                   {{"a", "c", "x"}, {"b", "c", "y"}, {"d", "c", "z"}}, {});
  auto r = validate_gentle(star);
  CHECK_FALSE(r.is_gentle);
  CHECK(r.violations.front().rule == Rule::G1);

  // Two arrows in, one out, neither composite killed: G2 fails.
  BoundQuiver g2({"x", "y", "c", "z"},
                 {{"a", "x", "c"}, {"b", "y", "c"}, {"d", "c", "z"}}, {});
  CHECK_FALSE(is_gentle(g2));
  BoundQuiver g2ok({"x", "y", "c", "z"},
                   {{"a", "x", "c"}, {"b", "y", "c"}, {"d", "c", "z"}}, {{"a", "d"}});
  CHECK(is_gentle(g2ok));

  // Both composites killed: G3 fails.
  BoundQuiver g3({"x", "y", "c", "z"},
                 {{"a", "x", "c"}, {"b", "y", "c"}, {"d", "c", "z"}},
                 {{"a", "d"}, {"b", "d"}});
  CHECK_FALSE(is_gentle(g3));

  BoundQuiver loop({"x"}, {{"l", "x", "x"}}, {{"l", "l"}});
  auto lr = validate_gentle(loop);
  CHECK_FALSE(lr.is_gentle);
  CHECK(lr.violations.front().rule == Rule::loop_anomaly);

  BoundQuiver kronecker({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {});
  auto kr = validate_gentle(kronecker);
  CHECK(kr.is_gentle);
  CHECK(kr.multiple_arrows.size() == 1);
}

TEST_CASE("euler characteristic and components") {
  CHECK(euler_characteristic(three_cycle(true)) == 1);
  BoundQuiver two({"x", "y", "z"}, {{"a", "x", "y"}}, {});
  std::size_t count = 0;
  component_labels(two, &count);
  CHECK(count == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(connected_components(two).size() == 2);
  CHECK(euler_characteristic(two) == 1 - 3 + 2);
  auto f = fixture("ex3_2_I1");
  CHECK(euler_characteristic(f) == 2);
  CHECK(f.vertex_count() == 14);
}

TEST_CASE("cycles and finite dimension") {
  CHECK(is_finite_dimensional(three_cycle(false)));
  CHECK(is_finite_dimensional(three_cycle(true)));
  CHECK(relation_cycles(three_cycle(true)).size() == 1);
  CHECK(full_relation_cycles(three_cycle(false)).empty());
  CHECK(simple_oriented_cycles(three_cycle(false)).cycles.size() == 1);
  BoundQuiver free_cycle({"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}}, {});
  CHECK_FALSE(is_finite_dimensional(free_cycle));
  CHECK_THROWS_AS(nonzero_paths(free_cycle), std::domain_error);

  auto q = fixture("ex6_6");
  CHECK(full_relation_cycles(q).size() == 3);
  CHECK(simple_oriented_cycles(q).cycles.size() == 3);

  // Overflow flag on a tight limit.
  auto e = simple_oriented_cycles(q, 1);
  CHECK(e.overflow);
}

TEST_CASE("path multiplication respects the ideal") {
  auto        q = three_cycle(true);
  Path const  a{q.vertex("1"), {q.arrow("a")}};
  Path const  b{q.vertex("2"), {q.arrow("b")}};
  Path const  e2{q.vertex("2"), {}};
  CHECK_FALSE(multiply(q, a, b).has_value());
  CHECK(multiply(q, a, e2) == a);
  CHECK_FALSE(multiply(q, b, a).has_value());  // not composable
  auto open = three_cycle(false);
  Path const c{open.vertex("3"), {open.arrow("c")}};
  auto ca = multiply(open, c, Path{open.vertex("1"), {open.arrow("a")}});
  REQUIRE(ca.has_value());
  CHECK(to_string(open, *ca) == "c a");
  CHECK(path_target(open, *ca) == open.vertex("2"));
}

TEST_CASE("opposite is an involution") {
  for (auto const& name : fixture_names()) {
    auto q = fixture(name);
    CHECK(serialize(opposite(opposite(q))) == serialize(q));
    CHECK(is_gentle(opposite(q)) == is_gentle(q));
  }
}

TEST_CASE("cartan matrix of the smallest normal form") {
  auto q = make_normal_form({1, 1, 3});
  auto c = cartan_matrix(q);
  // Equal to this matrix up to a simultaneous permutation of vertices.
  std::vector<std::vector<long>> const expected{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  std::vector<std::size_t> perm{0, 1, 2};
  bool                     matched = false;
  do {
    bool same = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        same = same && c.entries[perm[i]][perm[j]] == expected[i][j];
    matched = matched || same;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(matched);
  CHECK(c.entries == testing::brute_force_cartan(q));
  CHECK(determinant(to_int_matrix(c.entries)) == 2);
  auto snf = smith_normal_form(to_int_matrix(c.entries));
  CHECK(snf.divisors == std::vector<BigInt>{1, 1, 2});
  CHECK(snf.det_abs == 2);
}

TEST_CASE("cartan matrix agrees with word enumeration") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    auto q = testing::random_branched(rng, 1 + i % 3, 10);
    auto c = cartan_matrix(q);
    CHECK(c.entries == testing::brute_force_cartan(q));
    CHECK(determinant(to_int_matrix(c.entries))
          == testing::rational_determinant(c.entries));
  }
  for (auto const& name : fixture_names()) {
    auto q = fixture(name);
    CHECK(cartan_matrix(q).entries == testing::brute_force_cartan(q));
  }
}

TEST_CASE("integer linear algebra") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto      snf = smith_normal_form(m);
  CHECK(snf.divisors == std::vector<BigInt>{2, 6, 12});
  CHECK(abs(determinant(m)) == 144);
  CHECK(rank(m) == 3);
  IntMatrix singular{{1, 2}, {2, 4}};
  CHECK(determinant(singular) == 0);
  CHECK(rank(singular) == 1);
  CHECK(smith_normal_form(singular).det_abs == 0);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("induced subquiver keeps internal relations") {
  auto q = fixture("ex7_8_A");
  auto sub = induced_subquiver(q, {q.vertex("p"), q.vertex("q"), q.vertex("r")});
  CHECK(sub.arrow_count() == 3);
  CHECK(sub.relation_count() == 3);
}
