#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lefib/fixtures.hpp"
#include "lefib/sp.hpp"

using namespace lefib;

namespace {

HomologyClass rand_class(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  HomologyClass c(2 * g);
  do {
    for (auto& x : c) x = d(rng);
  } while (is_zero(c));
  return c;
}

std::vector<ClassTwist> named_word(const std::map<std::string, Curve>& t,
                                   const std::vector<std::string>& names, int exp = 1) {
  std::vector<ClassTwist> w;
  for (const auto& n : names) w.push_back({t.at(n).homology, exp});
  return w;
}

std::vector<ClassTwist> word_from_table(const std::map<std::string, std::string>& words,
                                        const std::vector<std::string>& names, int g) {
  std::vector<ClassTwist> w;
  for (const auto& n : names)
    w.push_back({abelianize(parse_surface_word(words.at(n), g), g), 1});
  return w;
}

}  // namespace

TEST_CASE("transvections are symplectic and quadratic in the class") {
  std::mt19937_64 rng(7);
  for (int g : {1, 2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      HomologyClass c = rand_class(g, rng);
      SpMat T = transvection(c);
      CHECK(is_symplectic(T));
      // x -> x - <x,c>c is invariant under c -> -c
      HomologyClass nc = c;
      for (auto& x : nc) x = -x;
      CHECK(T == transvection(nc));
      CHECK(mul(T, transvection(c, -1)) == SpMat::identity(2 * g));
      // a twist fixes its own class
      CHECK(lefib::apply(T, c) == c);
    }
  }
}

TEST_CASE("pairing is the standard symplectic form") {
  HomologyClass a1 = {1, 0, 0, 0}, b1 = {0, 1, 0, 0}, a2 = {0, 0, 1, 0};
  CHECK(pairing(a1, b1) == 1);
  CHECK(pairing(b1, a1) == -1);
  CHECK(pairing(a1, a2) == 0);
  CHECK(pairing(a1, a1) == 0);
}

TEST_CASE("sp_inverse and evaluate_word homomorphism") {
  std::mt19937_64 rng(11);
  int g = 3;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ClassTwist> w1, w2;
    for (int i = 0; i < 4; ++i) w1.push_back({rand_class(g, rng), 1 + (int)(rng() % 2)});
    for (int i = 0; i < 4; ++i) w2.push_back({rand_class(g, rng), -1});
    SpMat M1 = evaluate_word(w1, g), M2 = evaluate_word(w2, g);
    CHECK(is_symplectic(M1));
    CHECK(mul(M1, sp_inverse(M1)) == SpMat::identity(2 * g));
    std::vector<ClassTwist> cat = w1;
    cat.insert(cat.end(), w2.begin(), w2.end());
    CHECK(evaluate_word(cat, g) == mul(M1, M2));
    // conjugation compatibility: T_{M(c)} = M T_c M^-1
    HomologyClass c = rand_class(g, rng);
    CHECK(transvection(lefib::apply(M1, c)) ==
          mul(mul(M1, transvection(c)), sp_inverse(M1)));
  }
}

TEST_CASE("rightmost letter acts first") {
  int g = 1;
  HomologyClass a = {1, 0}, b = {0, 1};
  std::vector<ClassTwist> w = {{a, 1}, {b, 1}};
  // (T_a T_b)(x) = T_a(T_b(x))
  CHECK(act_on_curve(w, a) == apply_transvection(a, 1, apply_transvection(b, 1, a)));
}

TEST_CASE("chain relator is a homology relator") {
  auto t = sigma3_curves();
  auto w = named_word(t, {"B0", "B1", "B2", "C", "B0", "B1", "B2", "B0p", "B1p", "B2p", "Cp",
                          "B0p", "B1p", "B2p"});
  CHECK(verify_identity(w, 3));
}

TEST_CASE("Matsumoto relators, genus 2 through 6") {
  auto t = sigma3_curves();
  auto m3 = named_word(t, {"be0", "be1", "be2", "be3", "a", "a", "b", "b",
                           "be0", "be1", "be2", "be3", "a", "a", "b", "b"});
  CHECK(verify_identity(m3, 3));
  for (int m : {1, 2, 3}) {
    int g = 2 * m;
    auto w = word_from_table(matsumoto_even_words(m), matsumoto_even_letter_names(m), g);
    CHECK(verify_identity(w, g));
  }
}

TEST_CASE("W_k relators up to k = 5") {
  for (int k = 1; k <= 5; ++k) {
    int g = 3 * k;
    auto w = word_from_table(wk_words(k), wk_letter_names(k), g);
    CHECK(verify_identity(w, g));
  }
}

TEST_CASE("lantern shadows") {
  auto t = sigma3_curves();
  SUBCASE("t_c1 t_c3 t_c5 t_c7 = t_d t_y t_a") {
    CHECK(evaluate_word(named_word(t, {"c1", "c3", "c5", "c7"}), 3) ==
          evaluate_word(named_word(t, {"d", "y", "a"}), 3));
  }
  SUBCASE("t_a t_a t_C t_Cp = t_x t_b t_z") {
    CHECK(evaluate_word(named_word(t, {"a", "a", "C", "Cp"}), 3) ==
          evaluate_word(named_word(t, {"x", "b", "z"}), 3));
  }
  SUBCASE("the c-chain curves pairwise commute on homology") {
    for (const char* u : {"c1", "c3", "c5", "c7"})
      for (const char* v : {"c1", "c3", "c5", "c7"})
        CHECK(pairing(t.at(u).homology, t.at(v).homology) == 0);
  }
}

TEST_CASE("X family products are relators") {
  auto t = sigma3_curves();
  std::vector<std::string> base;
  for (int i = 1; i <= 10; ++i) base.push_back("Up" + std::to_string(i));
  for (int i = 1; i <= 10; ++i) base.push_back("U" + std::to_string(i));
  SUBCASE("X1") {
    auto n = base;
    for (const char* c : {"c1", "c1", "c3", "c3", "c5", "c5", "c7", "c7"}) n.push_back(c);
    CHECK(verify_identity(named_word(t, n), 3));
  }
  SUBCASE("X3") {
    auto n = base;
    for (const char* c : {"d", "y", "a", "d", "y", "a"}) n.push_back(c);
    CHECK(verify_identity(named_word(t, n), 3));
  }
}

TEST_CASE("M19 product is a relator") {
  auto t = sigma3_curves();
  std::vector<std::string> n;
  for (int r = 0; r < 2; ++r)
    for (const char* c : {"be0", "be1", "be2", "be3", "a", "a", "b", "b"}) n.push_back(c);
  for (int r = 0; r < 2; ++r)
    for (const char* c : {"be0", "be1", "be2", "be3", "a", "a", "b", "b"})
      n.push_back(std::string("phi(") + c + ")");
  CHECK(verify_identity(named_word(t, n), 3));
}
