#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefib/fixtures.hpp"

using namespace lefib;

namespace {

Factorization chain_factorization() {
  auto t = sigma3_curves();
  Factorization f;
  f.surface = {3, 0};
  for (const char* n : {"B0", "B1", "B2", "C", "B0", "B1", "B2", "B0p", "B1p", "B2p", "Cp",
                        "B0p", "B1p", "B2p"})
    f.letters.push_back({t.at(n), 1});
  return f;
}

}  // namespace

TEST_CASE("hurwitz moves preserve the product and invert each other") {
  Factorization f = chain_factorization();
  SpMat before = evaluate_word(class_word(f), 3);
  for (std::size_t i = 0; i + 1 < f.letters.size(); ++i) {
    Factorization r = hurwitz_move_right(f, i);
    CHECK(evaluate_word(class_word(r), 3) == before);
    Factorization back = hurwitz_move_left(r, i);
    for (std::size_t j = 0; j < f.letters.size(); ++j) {
      CHECK(back.letters[j].curve.homology == f.letters[j].curve.homology);
      CHECK(back.letters[j].exponent == f.letters[j].exponent);
    }
  }
}

TEST_CASE("global conjugation preserves relators") {
  auto t = sigma3_curves();
  Factorization f = chain_factorization();
  std::vector<TwistLetter> phi = {{t.at("c1"), 1}, {t.at("c2"), -1}};
  Factorization g = global_conjugate(f, phi, "phi");
  CHECK(verify_factorization(g).empty());
  CHECK(g.letters[0].curve.name == "phi(B0)");
  CHECK(g.letters[0].curve.provenance == "derived");
}

TEST_CASE("twisted fiber sum concatenates and keeps the identity") {
  auto t = sigma3_curves();
  Factorization f = chain_factorization();
  std::vector<TwistLetter> phi = {{t.at("b3c"), 1}};
  Factorization s = twisted_fiber_sum(f, f, phi, "tw");
  CHECK(s.letters.size() == 28);
  CHECK(verify_factorization(s).empty());
  REQUIRE(s.history.size() == 1);
  CHECK(s.history.back().kind == HistoryStep::TwistedFiberSum);
}

TEST_CASE("relator substitution enforces its certificates") {
  auto t = sigma3_curves();
  Factorization f;
  f.surface = {3, 0};
  // closing pair keeps the full word a relator: c-block then its inverse
  for (const char* n : {"c1", "c3", "c5", "c7"}) f.letters.push_back({t.at(n), 1});
  for (const char* n : {"c7", "c5", "c3", "c1"}) f.letters.push_back({t.at(n), -1});
  CHECK(verify_factorization(f).empty());

  SubstitutionSite site;
  site.start = 0;
  site.count = 4;
  for (const char* n : {"d", "y", "a"}) site.replacement.push_back({t.at(n), 1});
  site.signature_delta = 1;
  site.detail = "lantern";

  SUBCASE("valid substitution splices the replacement") {
    Factorization r = relator_substitute(f, site);
    CHECK(r.letters.size() == 7);
    CHECK(r.letters[0].curve.name == "d");
    CHECK(verify_factorization(r).empty());
    CHECK(r.history.back().signature_delta == 1);
  }
  SUBCASE("wrong segment product is rejected") {
    site.count = 3;
    CHECK_THROWS_AS(relator_substitute(f, site), std::invalid_argument);
  }
  SUBCASE("transpositions need declared disjointness") {
    site.transpositions = {1};
    CHECK_THROWS_AS(relator_substitute(f, site), std::invalid_argument);
    f.disjoint_pairs = {{"c3", "c5"}};
    Factorization r = relator_substitute(f, site);
    CHECK(verify_factorization(r).empty());
  }
  SUBCASE("transpositions need zero pairing") {
    Factorization g;
    g.surface = {3, 0};
    g.letters = {{t.at("c1"), 1}, {t.at("c2"), 1}, {t.at("c2"), -1}, {t.at("c1"), -1}};
    g.disjoint_pairs = {{"c1", "c2"}};  // a lie: <c1,c2> = 1
    SubstitutionSite sw;
    sw.transpositions = {0};
    sw.start = 0;
    sw.count = 0;
    CHECK_THROWS_AS(relator_substitute(g, sw), std::invalid_argument);
  }
}

TEST_CASE("boundary factorizations and cap_off") {
  auto t = sigma3_curves();
  Factorization f;
  f.surface = {3, 1};
  for (auto l : chain_factorization().letters) {
    l.curve.surface.boundary = 1;
    f.letters.push_back(l);
  }
  f.boundary_target = {{0, 1}};
  CHECK(verify_factorization(f).empty());
  SUBCASE("bad target index is reported") {
    f.boundary_target = {{2, 1}};
    CHECK_FALSE(verify_factorization(f).empty());
  }
  SUBCASE("capping closes the surface") {
    Factorization c = cap_off(f);
    CHECK(c.surface.boundary == 0);
    CHECK(c.boundary_target.empty());
    CHECK(verify_factorization(c).empty());
    CHECK(c.history.back().kind == HistoryStep::CapBoundary);
  }
  SUBCASE("cap_off requires one boundary component") {
    Factorization closed = chain_factorization();
    CHECK_THROWS_AS(cap_off(closed), std::invalid_argument);
  }
}
