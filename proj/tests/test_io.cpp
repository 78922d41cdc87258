#include <cstdio>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "causaltop/json_io.hpp"
#include "support/generators.hpp"

using namespace causaltop;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

FiniteTopology sierpinski() {
  return FiniteTopology::from_closed_masks({"a", "b"}, {0u, 1u, 3u});
}

}  // namespace

TEST_CASE("framework JSON round trip") {
  gen::Rng rng(101);
  for (int it = 0; it < 50; ++it) {
    const Framework fw = gen::random_framework(rng);
    CHECK(framework_from_json(framework_to_json(fw)) == fw);
  }
}

TEST_CASE("topology JSON round trip") {
  gen::Rng rng(103);
  for (int it = 0; it < 50; ++it) {
    const FiniteTopology t = gen::random_topology(rng);
    CHECK(topology_from_json(topology_to_json(t)) == t);
  }
}

TEST_CASE("causal site JSON round trip through the transitive reduction") {
  gen::Rng rng(107);
  for (int it = 0; it < 30; ++it) {
    const CausalSite cs = gen::random_causal_site(rng);
    const CausalSite back = causal_site_from_json(causal_site_to_json(cs));
    REQUIRE(back.size() == cs.size());
    CHECK(back.bottom() == cs.bottom());
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) {
        CHECK(back.leq(static_cast<int>(a), static_cast<int>(b)) ==
              cs.leq(static_cast<int>(a), static_cast<int>(b)));
        CHECK(back.prec(static_cast<int>(a), static_cast<int>(b)) ==
              cs.prec(static_cast<int>(a), static_cast<int>(b)));
      }
  }
}

TEST_CASE("vector and region JSON round trip") {
  gen::Rng rng(109);
  for (int it = 0; it < 50; ++it) {
    const MinkVec v = gen::random_vec(rng, gen::uniform(rng, 2, 4));
    CHECK(mink_vec_from_json(mink_vec_to_json(v)) == v);
  }
  for (int it = 0; it < 50; ++it) {
    const Region r = gen::random_region(rng);
    CHECK(region_from_json(region_to_json(r)) == r);
  }
}

TEST_CASE("document envelope") {
  const Document doc{"topology", topology_to_json(sierpinski())};
  const std::string path = "io_test_doc.json";
  save_document(path, doc);
  const Document back = load_document(path);
  CHECK(back.kind == "topology");
  CHECK(topology_from_json(back.payload) == sierpinski());
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_document("does_not_exist.json"), ValidationError);
  {
    std::ofstream bad("io_test_bad.json");
    bad << "{not json";
  }
  CHECK_THROWS_AS(load_document("io_test_bad.json"), ValidationError);
  std::remove("io_test_bad.json");

  Json j;
  j["kind"] = "nonsense";
  j["version"] = "1";
  j["payload"] = Json::object();
  CHECK_THROWS_AS(document_from_json(j), ValidationError);
  j["kind"] = "framework";
  j["version"] = "2";
  CHECK_THROWS_AS(document_from_json(j), ValidationError);
}

TEST_CASE("DOT export of topologies") {
  const std::string s = export_dot(sierpinski());
  CHECK(count_lines_with(s, ";") == 3);             // two nodes plus one edge
  CHECK(count_lines_with(s, "->") == 1);            // a below b, reduced
  CHECK(s.find("\"a\" -> \"b\"") != std::string::npos);

  const auto discrete = FiniteTopology::from_closed_masks({"a", "b"}, {0u, 1u, 2u, 3u});
  CHECK(count_lines_with(export_dot(discrete), "->") == 0);
}

TEST_CASE("DOT export of causal sites") {
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < 4; ++i) {
    leq.emplace_back(i, i);
    leq.emplace_back(0, i);
  }
  leq.emplace_back(1, 3);
  leq.emplace_back(2, 3);
  const CausalSite cs({"bot", "a", "b", "ab"}, 0, leq, {});
  const std::string s = export_dot(cs);
  CHECK(count_lines_with(s, ";") == 8);  // four nodes plus four edges
  // Hasse edges only: bot->a, bot->b, a->ab, b->ab.
  CHECK(count_lines_with(s, "->") == 4);
  CHECK(count_lines_with(s, "dashed") == 0);

  const CausalSite cs2({"bot", "x", "y"}, 0,
                       {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}}, {{1, 2}});
  CHECK(count_lines_with(export_dot(cs2), "dashed") == 1);
}
