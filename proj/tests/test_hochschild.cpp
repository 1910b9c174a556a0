#include <random>

#include "doctest.h"

#include "gentle/fixtures.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/normal_form.hpp"
#include "support/generators.hpp"

using namespace gentle;

namespace {

IntMatrix product(IntMatrix const& a, IntMatrix const& b) {
  std::size_t const rows = a.size();
  std::size_t const inner = b.size();
  std::size_t const cols = inner == 0 ? 0 : b[0].size();
  IntMatrix         c(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool all_zero(IntMatrix const& m) {
  for (auto const& row : m)
    for (auto const& x : row)
      if (x != 0) return false;
  return true;
}

FieldSpec const F2 = FieldSpec::with_characteristic(2);
FieldSpec const F3 = FieldSpec::with_characteristic(3);

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(F3.normalize(Scalar(-1)) == 2);
  CHECK(F3.normalize(Scalar(1) / 2) == 2);
  CHECK(F3.inverse(2) == 2);
  CHECK(FieldSpec::rationals().inverse(4) == Scalar(1) / 4);
  CHECK_THROWS_AS(FieldSpec::with_characteristic(4), std::invalid_argument);
  CHECK_THROWS_AS(F2.normalize(Scalar(1) / 2), std::domain_error);
  CHECK(F2.describe() == "F_2");
  CHECK(FieldSpec().describe() == "Q");
  CHECK(rank_over(F2, IntMatrix{{2, 0}, {0, 1}}) == 1);
  CHECK(rank_over(FieldSpec(), IntMatrix{{2, 0}, {0, 1}}) == 2);
  auto x = solve(FieldSpec(), ScalarMatrix{{1, 1}, {1, -1}}, {3, 1});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(FieldSpec(), ScalarMatrix{{1, 1}, {2, 2}}, {1, 3}).has_value());
}

TEST_CASE("the differential squares to zero") {
  std::vector<BoundQuiver> qs{make_normal_form({1, 1, 3}), make_normal_form({2, 2, 9}),
                              fixture("ex7_8_A"), fixture("ex6_6")};
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) qs.push_back(testing::random_branched(rng, 1 + i % 3, 9));
  for (auto const& q : qs) {
    HochschildComplex c(q);
    for (std::size_t n = 0; n + 1 <= 7; ++n) {
      auto dd = product(c.differential(n + 1), c.differential(n));
      CHECK(all_zero(dd));
    }
  }
}

TEST_CASE("low degrees: centre and outer derivations") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    unsigned const m = 1 + i % 3;
    auto           q = testing::random_branched(rng, m, 10);
    auto           dims = hh_dims(q, 1).dims;
    CHECK(dims[0] == 1);
    CHECK(static_cast<long>(dims[1]) == euler_characteristic(q));
  }
  BoundQuiver two({"x", "y", "z", "w"}, {{"a", "x", "y"}, {"b", "z", "w"}}, {});
  CHECK(hh_dims(two, 0).dims[0] == 2);
}

TEST_CASE("smallest normal form in characteristic 0 and 2") {
  auto q = make_normal_form({1, 1, 3});
  std::vector<std::size_t> const q0{1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1};
  std::vector<std::size_t> const q2{1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1};
  CHECK(hh_dims(q, 13).dims == q0);
  CHECK(hh_dims(q, 13, F2).dims == q2);
  CHECK(hh_dims(q, 13, F3).dims == q0);
}

TEST_CASE("tail length does not change HH in positive degrees") {
  for (unsigned m = 1; m <= 3; ++m) {
    std::size_t const top = 2 * (m + 2) + 1;
    auto base = hh_dims(make_normal_form({m, 1, m + 2}), top).dims;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto dims = hh_dims(make_normal_form({m, 1, m + 2 + n}), top).dims;
      for (std::size_t k = 1; k <= top; ++k) CHECK(dims[k] == base[k]);
    }
  }
}

TEST_CASE("product law across cycles") {
  for (unsigned m = 1; m <= 2; ++m) {
    std::size_t const top = 2 * (m + 2) + 1;
    auto one = hh_dims(make_normal_form({m, 1, m + 2}), top).dims;
    for (std::size_t r = 2; r <= 3; ++r) {
      auto dims = hh_dims(make_normal_form({m, r, 1 + r * (m + 1) + 1}), top).dims;
      CHECK(dims[0] == 1);
      for (std::size_t k = 1; k <= top; ++k) CHECK(dims[k] == r * one[k]);
    }
  }
}

TEST_CASE("rank over a large prime agrees with rank over Q") {
  std::mt19937_64 rng(41);
  auto            p = FieldSpec::with_characteristic(testing::random_large_prime(rng));
  for (auto const& name : {"ex7_8_A", "ex7_8_Aprime", "ex3_2_I2"}) {
    auto q = fixture(name);
    CHECK(hh_dims(q, 8).dims == hh_dims(q, 8, p).dims);
  }
}

TEST_CASE("example vectors") {
  CHECK(hh_dims(fixture("ex7_8_A"), 10).dims
        == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0});
  CHECK(hh_dims(fixture("ex7_8_Aprime"), 10).dims
        == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("cup and bracket on the generators") {
  for (unsigned m : {1U, 2U}) {
    auto q = make_normal_form({m, 1, m + 2});
    for (auto field : {FieldSpec(), F2}) {
      HochschildComplex c(q, field);
      auto              cycle = full_relation_cycles(q).front();
      std::size_t const L = m + 2;
      std::size_t const d = (field.characteristic() != 2 && L % 2 == 1) ? 2 * L : L;
      auto F = cycle_generator_f(c, cycle, d);
      auto G = cycle_generator_g(c, cycle.front());
      REQUIRE(c.is_cocycle(F));
      REQUIRE(c.is_cocycle(G));
      CHECK_FALSE(c.is_coboundary(F));
      CHECK_FALSE(c.is_coboundary(G));
      CHECK(c.is_coboundary(c.cup(G, G)));
      CHECK(c.is_coboundary(c.bracket(G, G)));
      CHECK(c.is_coboundary(c.bracket(F, F)));
      auto fg = c.cup(F, G);
      auto ff = c.cup(F, F);
      REQUIRE(c.is_cocycle(fg));
      REQUIRE(c.is_cocycle(ff));
      CHECK_FALSE(c.is_coboundary(fg));
      CHECK_FALSE(c.is_coboundary(ff));
      auto br = c.bracket(F, G);
      REQUIRE(c.is_cocycle(br));
      auto ratio = c.class_ratio(br, F);
      REQUIRE(ratio.has_value());
      CHECK(*ratio != 0);
      if (field.characteristic() == 2) CHECK(*ratio == 1);
    }
  }
}

TEST_CASE("cochain helpers") {
  auto              q = make_normal_form({1, 1, 3});
  HochschildComplex c(q);
  auto              G = cycle_generator_g(c, full_relation_cycles(q).front().front());
  CHECK(c.is_zero(c.add(G, G, -1)));
  CHECK(c.is_zero(c.zero(3)));
  auto e0 = c.from_values(0, {{Path{0, {}}, AlgebraElement{{0, Scalar(1)}}}});
  CHECK_FALSE(c.is_cocycle(e0));
  CHECK(c.is_coboundary(c.coboundary(e0)));
  CHECK_THROWS(c.is_coboundary(e0));
  CHECK_THROWS(c.class_ratio(e0, G));
  CHECK(c.evaluate(e0, Path{0, {}}).at(0) == 1);
}
