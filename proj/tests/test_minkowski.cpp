#include <catch2/catch_amalgamated.hpp>

#include "causaltop/minkowski.hpp"
#include "support/generators.hpp"

using namespace causaltop;

namespace {
MinkVec v(std::vector<long> ints) {
  std::vector<Rat> c;
  for (long i : ints) c.push_back(Rat(i));
  return MinkVec(std::move(c));
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_to_string(Rat(0)) == "0/1");
  CHECK(rat_to_string(Rat(4, 6)) == "2/3");
  CHECK(rat_from_string("2/3") == Rat(2, 3));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("-4/6") == Rat(-2, 3));
  CHECK_THROWS_AS(rat_from_string("1/0"), ValidationError);
  CHECK_THROWS_AS(rat_from_string("abc"), ValidationError);
}

TEST_CASE("inner product signature") {
  CHECK(eta(v({1, 0, 0, 0}), v({1, 0, 0, 0})) == 1);
  CHECK(eta(v({0, 1, 0, 0}), v({0, 1, 0, 0})) == -1);
  CHECK(eta(v({1, 1}), v({1, 1})) == 0);
  CHECK_THROWS_AS(eta(v({1, 0}), v({1, 0, 0})), ValidationError);
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(MinkVec({Rat(1)}), ValidationError);
  CHECK_THROWS_AS(MinkVec({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}),
                  ValidationError);
}

TEST_CASE("classification") {
  CHECK(classify(v({2, 1})) ==
        VecClass{CausalCharacter::Timelike, TimeOrientation::Future});
  CHECK(classify(v({1, 1})) ==
        VecClass{CausalCharacter::Null, TimeOrientation::Future});
  CHECK(classify(v({0, 1})) ==
        VecClass{CausalCharacter::Spacelike, TimeOrientation::Neither});
  CHECK(classify(v({-2, 1})) ==
        VecClass{CausalCharacter::Timelike, TimeOrientation::Past});
}

TEST_CASE("chronological order") {
  CHECK(chron_lt(v({0, 0}), v({2, 1})));
  CHECK_FALSE(chron_lt(v({2, 1}), v({2, 1})));
  CHECK_FALSE(chron_lt(v({0, 0}), v({1, 1})));
}

TEST_CASE("causal order") {
  CHECK(causal_le(v({1, 1}), v({1, 1})));
  CHECK(causal_le(v({0, 0}), v({1, 1})));
  CHECK_FALSE(causal_le(v({0, 0}), v({1, 2})));
}

TEST_CASE("cone membership") {
  const MinkVec p = v({0, 0});
  CHECK(in_cone(p, p, Cone::Future));
  CHECK(in_cone(p, p, Cone::Past));
  CHECK(in_cone(v({2, 0}), p, Cone::Future));
  CHECK_FALSE(in_cone(v({0, 5}), p, Cone::Both));
}

TEST_CASE("diamond membership") {
  CHECK(diamond_contains(v({0, 0}), v({2, 0}), v({1, 0})));
  CHECK(diamond_contains(v({0, 0}), v({2, 0}), v({0, 0})));
  CHECK_FALSE(diamond_contains(v({0, 0}), v({2, 0}), v({1, 2})));
  CHECK_THROWS_AS(diamond_contains(v({0, 0}), v({0, 5}), v({0, 0})),
                  ValidationError);
}

TEST_CASE("cone additivity in all dimensions") {
  gen::Rng rng(47);
  const MinkVec zeros[3] = {v({0, 0}), v({0, 0, 0}), v({0, 0, 0, 0})};
  for (int dim = 2; dim <= 4; ++dim)
    for (int it = 0; it < 200; ++it) {
      const MinkVec a = gen::random_future_vec(rng, dim);
      const MinkVec b = gen::random_future_vec(rng, dim);
      REQUIRE(causal_le(zeros[dim - 2], a));
      REQUIRE(causal_le(zeros[dim - 2], b));
      CHECK(causal_le(zeros[dim - 2], a + b));
    }
}

TEST_CASE("causal order is a partial order") {
  gen::Rng rng(53);
  for (int dim = 2; dim <= 4; ++dim)
    for (int it = 0; it < 200; ++it) {
      const MinkVec a = gen::random_vec(rng, dim);
      const MinkVec b = gen::random_vec(rng, dim);
      const MinkVec c = gen::random_vec(rng, dim);
      CHECK(causal_le(a, a));
      if (causal_le(a, b) && causal_le(b, a)) CHECK(a == b);
      if (causal_le(a, b) && causal_le(b, c)) CHECK(causal_le(a, c));
      // Chronological order is stricter than causal order.
      if (chron_lt(a, b)) {
        CHECK(causal_le(a, b));
        CHECK_FALSE(chron_lt(b, a));
      }
    }
}
