#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "lefib/fixtures.hpp"

using namespace lefib;

#ifndef LEFIB_DATA_DIR
#define LEFIB_DATA_DIR "data"
#endif

TEST_CASE("curve table is self-consistent") {
  auto t = sigma3_curves();
  for (const auto& [n, c] : t) {
    INFO(n);
    CHECK(validate_curve(c).empty());
  }
  CHECK(t.at("x").separating);
  CHECK(t.at("C").separating);
  CHECK(t.at("Cp").separating);
  CHECK(t.at("U3").separating);
  CHECK(t.at("U8").separating);
  CHECK(t.at("Up3").separating);
  CHECK(t.at("Up8").separating);
  // corrected class of B2' from its word
  CHECK(t.at("B2p").homology == HomologyClass{0, 0, -1, 0, -1, 0});
}

TEST_CASE("word tables agree at overlapping parameters") {
  // genus-3 chain words reproduce the named sigma3 curves
  auto t = sigma3_curves();
  for (const auto& [n, w] : wk_words(1)) {
    // classes of unoriented curves match up to sign
    HomologyClass h = abelianize(parse_surface_word(w, 3), 3);
    HomologyClass neg = h;
    for (auto& x : neg) x = -x;
    INFO(n);
    CHECK((h == t.at(n).homology || neg == t.at(n).homology));
  }
  CHECK(wk_letter_names(2).size() == 22);
  CHECK(matsumoto_even_letter_names(2).size() == 12);
}

TEST_CASE("scenario set is complete and well formed") {
  auto all = build_all_scenarios();
  CHECK(all.size() == 23);
  for (const auto& s : all) {
    INFO(s.name);
    CHECK(run_verify(s).empty());
  }
}

TEST_CASE("scenario JSON round-trips") {
  for (const auto& s : build_all_scenarios()) {
    INFO(s.name);
    nlohmann::json j = scenario_to_json(s);
    Scenario back = scenario_from_json(j);
    CHECK(scenario_to_json(back) == j);
  }
}

TEST_CASE("shipped scenario file matches the builders") {
  std::string path = std::string(LEFIB_DATA_DIR) + "/paper.scen";
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json shipped;
  in >> shipped;
  nlohmann::json built = nlohmann::json::array();
  for (const auto& s : build_all_scenarios()) built.push_back(scenario_to_json(s));
  CHECK(shipped.at("scenarios") == built);
}

TEST_CASE("reports satisfy the recorded expectations") {
  for (const auto& s : build_all_scenarios()) {
    INFO(s.name);
    std::vector<std::string> problems;
    InvariantReport r = run_report(s, &problems);
    for (const auto& p : problems) FAIL_CHECK(p);
    for (const auto& p : check_expectations(s, r)) FAIL_CHECK(p);
  }
}

TEST_CASE("pi1 runner matches the expected certificates") {
  for (const auto& s : build_all_scenarios()) {
    INFO(s.name);
    Pi1Outcome o = run_pi1(s);
    for (const auto& f : o.failures) FAIL_CHECK(f);
    if (s.expect.pi1_trivial) {
      CHECK(o.certified_trivial == *s.expect.pi1_trivial);
      CHECK(o.certified_nontrivial == !*s.expect.pi1_trivial);
    }
  }
}
