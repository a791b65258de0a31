#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "lefib/fixtures.hpp"
#include "lefib/fpgroups.hpp"

using namespace lefib;

TEST_CASE("smith normal form against the elementary-op replay oracle") {
  unsigned long long seed = 0x736e66;
  if (const char* s = std::getenv("LF_SEED")) seed = std::strtoull(s, nullptr, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_r(1, 6), dim_c(1, 8), ent(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat M(dim_r(rng), dim_c(rng));
    for (int i = 0; i < M.rows; ++i)
      for (int j = 0; j < M.cols; ++j) M.at(i, j) = ent(rng);
    SnfResult r = smith_normal_form(M);
    // oracle: replaying the recorded elementary ops on M must reproduce D
    IntMat replay = M;
    for (const auto& op : r.ops) apply_elem_op(replay, op);
    CHECK(replay == r.D);
    CHECK(mat_mul(mat_mul(r.U, M), r.V) == r.D);
    // diagonal, nonnegative, divisibility chain
    for (int i = 0; i < r.D.rows; ++i)
      for (int j = 0; j < r.D.cols; ++j)
        if (i != j) CHECK(r.D.at(i, j) == 0);
    Int prev = 0;
    for (int i = 0; i < std::min(r.D.rows, r.D.cols); ++i) {
      Int d = r.D.at(i, i);
      CHECK(d >= 0);
      if (prev != 0 && d != 0) CHECK(d % prev == 0);
      if (d == 0) break;
      prev = d;
    }
  }
}

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
  IntMat M(2, 2);
  M.at(0, 0) = 2;
  M.at(1, 1) = 3;
  SnfResult r = smith_normal_form(M);
  CHECK(r.D.at(0, 0) == 1);
  CHECK(r.D.at(1, 1) == 6);
}

TEST_CASE("abelianizations") {
  CHECK(abelianization(surface_presentation(3)).str() == "Z^6");
  AbelianGroup g;
  CHECK(g.str() == "0");
  g.free_rank = 1;
  CHECK(g.str() == "Z");
  g.free_rank = 2;
  g.torsion = {Int(3)};
  CHECK(g.str() == "Z^2 + Z/3");
}

TEST_CASE("tietze simplification plus free-abelian recognition") {
  auto t = sigma3_curves();
  SUBCASE("genus-3 Matsumoto quotient is Z^2") {
    std::vector<Word> cyc;
    for (const char* n : {"be0", "be1", "be2", "be3", "a", "b"})
      cyc.push_back(parse_surface_word(*t.at(n).pi1_word, 3));
    Presentation p = vanishing_cycle_quotient(3, cyc);
    TietzeResult tz = tietze_simplify(p);
    auto rank = recognize_free_abelian(tz.pres);
    REQUIRE(rank.has_value());
    CHECK(*rank == 2);
  }
  SUBCASE("chain relator quotient is Z^2") {
    std::vector<Word> cyc;
    for (const char* n : {"B0", "B1", "B2", "B0p", "B1p", "B2p", "C", "Cp"})
      cyc.push_back(parse_surface_word(*t.at(n).pi1_word, 3));
    Presentation p = vanishing_cycle_quotient(3, cyc);
    TietzeResult tz = tietze_simplify(p);
    auto rank = recognize_free_abelian(tz.pres);
    REQUIRE(rank.has_value());
    CHECK(*rank == 2);
  }
  SUBCASE("recognition refuses non-abelian presentations") {
    Presentation p = surface_presentation(2);
    CHECK_FALSE(recognize_free_abelian(p).has_value());
  }
}

TEST_CASE("todd-coxeter on the classical trivial presentation") {
  Presentation p;
  p.gens = {"a", "b"};
  p.relators = {parse_word("a b a^-1 b^-2", p.gens), parse_word("b a b^-1 a^-2", p.gens)};
  TCResult r = todd_coxeter(p);
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 1);
  CHECK(r.cosets_defined == 10);
}

TEST_CASE("todd-coxeter on scenario presentations") {
  auto all = build_all_scenarios();
  auto find = [&](const std::string& n) -> const Scenario& {
    for (const auto& s : all)
      if (s.name == n) return s;
    throw std::runtime_error("missing " + n);
  };
  struct Row {
    const char* scenario;
    long index;
    long cosets;
  };
  for (Row row : {Row{"X1", 9, 2624}, Row{"M17", 1, 23}, Row{"M16", 1, 23},
                  Row{"X(1,2)", 1, 49}, Row{"X(2,3)", 1, 359}}) {
    const Scenario& s = find(row.scenario);
    REQUIRE(!s.presentations.empty());
    Presentation p = build_presentation(s.presentations.front());
    TCResult r = todd_coxeter(p);
    REQUIRE(r.index.has_value());
    CHECK(*r.index == row.index);
    CHECK(r.cosets_defined == row.cosets);
  }
}

TEST_CASE("enumeration reports no closure on an infinite group") {
  Presentation p;
  p.gens = {"a", "b"};
  p.relators = {parse_word("[a,b]", p.gens)};  // Z^2
  TCResult r = todd_coxeter(p, 500);
  CHECK_FALSE(r.index.has_value());
}

TEST_CASE("amalgamated presentations") {
  Presentation p1;
  p1.gens = {"a"};
  p1.relators = {parse_word("a^2", p1.gens)};
  Presentation p2;
  p2.gens = {"x", "y"};
  p2.relators = {parse_word("x^3", p2.gens)};
  Presentation am = amalgamate(p1, p2, {{"a", "x"}});
  CHECK(am.gens.size() == 2);
  AbelianGroup g = abelianization(am);
  // <a | a^2, a^3> * Z = Z
  CHECK(g.str() == "Z");
  SUBCASE("name clashes are renamed") {
    Presentation q;
    q.gens = {"a", "b"};
    Presentation am2 = amalgamate(p1, q, {});
    CHECK(am2.gens.size() == 3);
    CHECK(am2.gens[0] == "a");
    CHECK((am2.gens[1] == "a'" || am2.gens[2] == "a'"));
  }
}
