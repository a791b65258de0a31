#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "lefib/fixtures.hpp"
#include "lefib/invariants.hpp"

using namespace lefib;

namespace {

// random Sp matrices generated from the fixture curve classes
struct FixtureRandom {
  std::vector<HomologyClass> classes;
  std::mt19937_64 rng;

  FixtureRandom() {
    unsigned long long seed = 0x6d657965;
    if (const char* s = std::getenv("LF_SEED")) seed = std::strtoull(s, nullptr, 0);
    rng.seed(seed);
    for (const auto& [n, c] : sigma3_curves())
      if (!is_zero(c.homology)) classes.push_back(c.homology);
  }

  SpMat next(int letters = 3) {
    std::vector<ClassTwist> w;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(classes.size()) - 1);
    std::uniform_int_distribution<int> expo(-2, 2);
    while (static_cast<int>(w.size()) < letters) {
      int e = expo(rng);
      if (e == 0) continue;
      w.push_back({classes[pick(rng)], e});
    }
    return evaluate_word(w, 3);
  }
};

long long scenario_meyer(const std::vector<Scenario>& all, const std::string& name) {
  for (const auto& s : all)
    if (s.name == name) return signature_meyer(s.factorization());
  throw std::runtime_error("missing " + name);
}

}  // namespace

TEST_CASE("meyer cocycle properties on fixture-derived triples") {
  FixtureRandom fr;
  int rounds = 1000;
  for (int i = 0; i < rounds; ++i) {
    SpMat A = fr.next(), B = fr.next(), C = fr.next();
    CHECK(meyer_tau(SpMat::identity(6), B) == 0);
    int t = meyer_tau(A, B);
    CHECK(t >= -6);
    CHECK(t <= 6);
    CHECK(meyer_tau(A, B) + meyer_tau(mul(A, B), C) ==
          meyer_tau(B, C) + meyer_tau(A, mul(B, C)));
  }
}

TEST_CASE("rational signature") {
  using M = std::vector<std::vector<Rat>>;
  CHECK(rational_signature(M{{Rat(2)}}) == 1);
  CHECK(rational_signature(M{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == 0);
  CHECK(rational_signature(M{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}) == 0);
  CHECK(rational_signature(M{{Rat(-1), Rat(0)}, {Rat(0), Rat(-2)}}) == -2);
}

TEST_CASE("meyer signatures of the genus-3 scenarios") {
  auto all = build_all_scenarios();
  CHECK(scenario_meyer(all, "X") == -6);
  CHECK(scenario_meyer(all, "X1") == -12);
  CHECK(scenario_meyer(all, "X2") == -11);
  CHECK(scenario_meyer(all, "X3") == -10);
  CHECK(scenario_meyer(all, "Mat3") == -8);
  CHECK(scenario_meyer(all, "M19") == -16);
  CHECK(scenario_meyer(all, "M18") == -15);
  CHECK(scenario_meyer(all, "M17") == -14);
  CHECK(scenario_meyer(all, "M16") == -13);
}

TEST_CASE("meyer signatures of the stabilized families") {
  auto all = build_all_scenarios();
  CHECK(scenario_meyer(all, "Mat2") == -4);
  CHECK(scenario_meyer(all, "Mat4") == -4);
  CHECK(scenario_meyer(all, "Mat6") == -4);
  for (int k = 1; k <= 5; ++k)
    CHECK(scenario_meyer(all, "X(" + std::to_string(k) + ")") == -6);
}

TEST_CASE("ledger signature agrees with Meyer on every letter scenario") {
  for (const auto& s : build_all_scenarios()) {
    if (!s.has_letters()) continue;
    Factorization f = s.factorization();
    CHECK(signature_endo_nagami(f) == signature_meyer(f));
  }
}

TEST_CASE("ledger throws on unknown contributions") {
  Factorization f;
  f.surface = {3, 0};
  f.history = {{HistoryStep::BaseRelator, "?", 0, false}};
  CHECK_THROWS_AS(signature_endo_nagami(f), std::invalid_argument);
}

TEST_CASE("meyer rejects non-relators") {
  auto t = sigma3_curves();
  Factorization f;
  f.surface = {3, 0};
  f.letters = {{t.at("c1"), 1}};
  CHECK_THROWS_AS(signature_meyer(f), std::invalid_argument);
}

TEST_CASE("euler characteristic counts letters with multiplicity") {
  auto t = sigma3_curves();
  Factorization f;
  f.surface = {3, 0};
  f.letters = {{t.at("c1"), 2}, {t.at("c1"), -2}};
  CHECK(euler_characteristic(f) == 2 * (2 - 6) + 4);
}

TEST_CASE("derived invariants in make_report") {
  AbelianGroup trivial;
  InvariantReport r = make_report(24, -16, trivial, true, "minimal", {});
  CHECK(r.c1sq == 2 * 24 + 3 * -16);
  CHECK(r.c1sq == 0);
  CHECK(r.b1 == 0);
  CHECK(r.b2plus == 3);
  CHECK(r.b2minus == 19);
  CHECK(r.label == "(3,19)");
  CHECK(r.caveats.empty());

  SUBCASE("uncertified label carries a caveat") {
    InvariantReport u = make_report(24, -16, trivial, false, "minimal", {});
    CHECK_FALSE(u.caveats.empty());
  }
  SUBCASE("no label when H1 is nontrivial") {
    AbelianGroup z2;
    z2.free_rank = 2;
    InvariantReport u = make_report(6, -6, z2, false, "", {});
    CHECK(u.label.empty());
    CHECK(u.b1 == 2);
    CHECK(u.b2plus == 1);
    CHECK(u.b2minus == 7);
  }
}
