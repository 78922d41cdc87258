#include <catch2/catch_amalgamated.hpp>

#include "causaltop/framework.hpp"
#include "support/generators.hpp"

using namespace causaltop;

static Framework make(std::vector<std::string> places,
                      std::vector<std::vector<std::string>> fam) {
  return Framework(std::move(places), fam);
}

TEST_CASE("T0 on small frameworks") {
  CHECK(is_T0(make({"1", "2"}, {{"1"}})));
  CHECK_FALSE(is_T0(make({"1", "2"}, {{"1", "2"}})));
  CHECK(is_T0(make({"1"}, {})));
  CHECK(is_T0(make({}, {})));
}

TEST_CASE("dualize follows the definition") {
  const Framework fw = make({"1", "2"}, {{"1"}, {"1", "2"}});
  const Framework d = dualize(fw);
  CHECK(d.place_count() == 2);  // the two framology members
  // pi(1) = {{1},{1,2}}, pi(2) = {{1,2}}
  const Framework expected =
      Framework({"{1}", "{1,2}"}, {{"{1}", "{1,2}"}, {"{1,2}"}});
  CHECK(d == expected);
}

TEST_CASE("dualize with empty framology") {
  const Framework fw = make({"a", "b"}, {});
  const Framework d = dualize(fw);
  CHECK(d.place_count() == 0);
  CHECK(d.framology().size() == 1);  // every pi(x) is empty; dedup to one
  CHECK(d.framology()[0] == 0u);

  const Framework empty = make({}, {});
  CHECK(dualize(empty) == empty);
}

TEST_CASE("quotient computes images of framology members") {
  const Framework fw = make({"1", "2"}, {{"1"}, {"2"}});
  const Framework q = quotient(fw, {{"1", "2"}});
  CHECK(q.place_count() == 1);
  CHECK(q.framology().size() == 1);
  CHECK(q.framology()[0] == 1u);  // the single class

  const Framework fw3 = make({"1", "2", "3"}, {{"1", "2"}});
  const Framework q3 = quotient(fw3, {{"1"}, {"2", "3"}});
  CHECK(q3.place_count() == 2);
  CHECK(q3.framology().size() == 1);
  CHECK(q3.framology()[0] == 3u);  // image {[1],[2,3]}
}

TEST_CASE("quotient rejects non-partitions") {
  const Framework fw = make({"1", "2"}, {{"1"}});
  CHECK_THROWS_AS(quotient(fw, {{"1"}}), ValidationError);
  CHECK_THROWS_AS(quotient(fw, {{"1", "2"}, {"2"}}), ValidationError);
  CHECK_THROWS_AS(quotient(fw, {{"1"}, {}}), ValidationError);
}

TEST_CASE("identity partition yields an isomorphic framework") {
  gen::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const Framework fw = gen::random_framework(rng);
    std::vector<std::vector<std::string>> identity;
    for (const auto& p : fw.places()) identity.push_back({p});
    const Framework q = quotient(fw, identity);
    if (fw.place_count() > Framework::kMaxPlaces) continue;
    REQUIRE(frameworks_isomorphic(fw, q).has_value());
  }
}

TEST_CASE("check_morphism") {
  const Framework fw = make({"1", "2"}, {{"1"}, {"1", "2"}});
  CHECK(check_morphism({fw, fw, {0, 1}}));  // identity
  const Framework empty_target = make({"a"}, {});
  CHECK_FALSE(check_morphism({make({"1"}, {{"1"}}), empty_target, {0}}));
  CHECK_THROWS_AS(check_morphism({fw, fw, {0}}), ValidationError);
}

TEST_CASE("canonical map into the double dual is a morphism") {
  gen::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Framework fw = gen::random_framework(rng);
    const Framework dd = dualize(dualize(fw));
    // x maps to the double-dual place named by pi(x).
    const Framework d1 = dualize(fw);
    std::vector<int> map;
    bool ok = true;
    for (std::size_t x = 0; x < fw.place_count() && ok; ++x) {
      std::uint32_t d1_mask = 0;
      for (std::size_t k = 0; k < fw.framology().size(); ++k)
        if (fw.point_mask(static_cast<int>(x)) >> k & 1u)
          d1_mask |= std::uint32_t{1}
                     << d1.index_of(fw.subset_name(fw.framology()[k]));
      map.push_back(dd.index_of(d1.subset_name(d1_mask)));
    }
    CHECK(check_morphism({fw, dd, map}));
  }
}

TEST_CASE("dual of any framework is T0") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) CHECK(is_T0(dualize(gen::random_framework(rng))));
}

TEST_CASE("double dual of a non-T0 framework collapses kernel classes") {
  const Framework fw = make({"1", "2"}, {{"1", "2"}});
  const auto res = double_dual_isomorphism(fw);
  CHECK_FALSE(res.t0);
  CHECK(res.double_dual.place_count() == 1);
  CHECK(res.quotient.place_count() == 1);
  CHECK(check_morphism(res.witness.forward));
  CHECK(check_morphism(res.witness.backward));
}

TEST_CASE("double dual witness verifies on random frameworks") {
  gen::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Framework fw = gen::random_framework(rng);
    const auto res = double_dual_isomorphism(fw);
    REQUIRE(check_morphism(res.witness.forward));
    REQUIRE(check_morphism(res.witness.backward));
    const auto& f = res.witness.forward.map;
    const auto& b = res.witness.backward.map;
    REQUIRE(f.size() == b.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      CHECK(b[f[x]] == static_cast<int>(x));
      CHECK(f[b[x]] == static_cast<int>(x));
    }
    if (res.t0) CHECK(res.witness.forward.source == fw);
  }
}

TEST_CASE("isomorphism search basics") {
  const Framework fw = make({"1", "2"}, {{"1"}});
  REQUIRE(frameworks_isomorphic(fw, fw).has_value());
  CHECK_FALSE(frameworks_isomorphic(make({"1"}, {}), make({"1"}, {{"1"}})).has_value());
  // Renamed copy is isomorphic.
  const Framework renamed = make({"a", "b"}, {{"b"}});
  REQUIRE(frameworks_isomorphic(fw, renamed).has_value());
}

TEST_CASE("isomorphism search respects the size guard") {
  std::vector<std::string> big;
  for (int i = 0; i < 13; ++i) big.push_back("p" + std::to_string(i));
  const Framework fw = Framework(big, {});
  CHECK_THROWS_AS(frameworks_isomorphic(fw, fw), ResourceError);
}

TEST_CASE("triple dual is isomorphic to the dual") {
  gen::Rng rng(19);
  int done = 0;
  while (done < 60) {
    const Framework fw = gen::random_framework(rng, 6, 6);
    const Framework d = dualize(fw);
    if (d.place_count() > 12) continue;
    const Framework ddd = dualize(dualize(d));
    REQUIRE(frameworks_isomorphic(d, ddd).has_value());
    ++done;
  }
}
