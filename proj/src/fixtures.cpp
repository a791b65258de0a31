#include "lefib/fixtures.hpp"

#include <nlohmann/json.hpp>

namespace lefib {

namespace {

Curve word_curve(const std::string& name, int genus, const std::string& word,
                 const std::string& provenance = "paper") {
  Curve c;
  c.name = name;
  c.surface = {genus, 0};
  c.pi1_word = word;
  c.homology = abelianize(parse_surface_word(word, genus), genus);
  c.separating = is_zero(c.homology);
  c.provenance = provenance;
  return c;
}

Curve class_curve(const std::string& name, int genus, const std::vector<int>& cls,
                  const std::string& provenance = "paper") {
  Curve c;
  c.name = name;
  c.surface = {genus, 0};
  c.homology.assign(cls.begin(), cls.end());
  c.separating = is_zero(c.homology);
  c.provenance = provenance;
  return c;
}

Curve derived_class_curve(const std::string& name, int genus, const HomologyClass& cls) {
  Curve c;
  c.name = name;
  c.surface = {genus, 0};
  c.homology = cls;
  c.separating = is_zero(cls);
  c.provenance = "derived";
  return c;
}

const char* kU4 =
    "a1 a2 b1^-1 a1 b1 a2^-1 b3 a3^-1 b3^-1 b2^-1 a2^-1 a1 a2 b1^-1 a1 b1 a2^-1 b3 a3^-1 "
    "b3^-1 b2^-1 a2^-1 a1 a2 b1^-1 a1^-2 a2 b2^-1 b3 a3 b3^-1 a2^2 b1^-1 a1";
const char* kU4p =
    "a1 b1^-1 b2 [b3,a3] a2 b2^-1 b3^-1 a3^-1 a2 b2^-1 a2 b2^-1 b1 b2 [b3,a3] a2 b2^-1 "
    "a3^-1 a2 b2^-1";
const char* kU6 =
    "a1^-1 a2 b2^-1 b1^-1 a1 b1 b3 a2 b2^-1 b3 a3 b3^-1 a2 b2^-1 b1^-1";
const char* kU7 =
    "a1^-1 a2 b2^-1 b1^-1 a1 b1 b3 a3 a2 b2^-1 a2^-1 a1 a2 b2^-1 b1^-1";
const char* kU8 = "a1^-1 a2 b2 a2^-1 a3 a2 b2^-1 a2^-1 a1 b3 a3^-1 b3^-1";

}  // namespace

std::map<std::string, Curve> sigma3_curves() {
  const int g = 3;
  std::map<std::string, Curve> m;
  auto put = [&](Curve c) { m.emplace(c.name, std::move(c)); };

  // vanishing cycles of the 14-letter chain relator
  put(word_curve("B0", g, "b1 b2"));
  put(word_curve("B1", g, "a2^-1 [a3,b3] b2^-1 b1^-1 a1^-1"));
  put(word_curve("B2", g, "a2^-1 [a1,b1^-1] a1^-1"));
  put(word_curve("B0p", g, "b2 b3"));
  put(word_curve("B1p", g, "a3^-1 b3^-1 b2^-1 a2^-1"));
  put(word_curve("B2p", g, "b3 a3^-1 b3^-1 a2^-1"));
  put(word_curve("C", g, "[a1,b1]"));
  put(word_curve("Cp", g, "[a3,b3]"));

  // genus-3 Matsumoto cycles
  put(word_curve("be0", g, "b1 b2 b3"));
  put(word_curve("be1", g, "b1 b2 b3 a3 a1"));
  put(word_curve("be2", g, "b2 b3 a3 b3^-1 a1"));
  put(word_curve("be3", g, "a2 b2 [b3,a3] a2"));
  put(word_curve("a", g, "a2"));
  put(word_curve("b", g, "[a1,b1^-1] a2^-1"));

  // chain and lantern curves, by their stated homology classes
  put(class_curve("c1", g, {1, 0, 0, 0, 0, 0}));
  put(class_curve("c2", g, {0, 1, 0, 0, 0, 0}));
  put(class_curve("c3", g, {1, 0, -1, 0, 0, 0}));
  put(class_curve("c4", g, {0, 0, 0, 1, 0, 0}));
  put(class_curve("c5", g, {0, 0, 1, 0, -1, 0}));
  put(class_curve("c6", g, {0, 0, 0, 0, 0, 1}));
  put(class_curve("c7", g, {0, 0, 0, 0, 1, 0}));
  put(class_curve("d", g, {1, 0, 0, 0, -1, 0}));
  put(class_curve("y", g, {1, 0, -1, 0, 1, 0}));
  put(class_curve("b3c", g, {0, 0, 0, 0, 0, 1}));
  put(class_curve("x", g, {0, 0, 0, 0, 0, 0}, "derived"));
  put(class_curve("z", g, {0, 0, 1, 0, 0, 0}, "derived"));

  // the V-form letters of the chain relator and their alpha/beta images
  auto cls = [&](const std::string& n) { return m.at(n).homology; };
  std::vector<HomologyClass> V;
  auto tw = [&](const std::string& n, int e, const HomologyClass& x) {
    return apply_transvection(cls(n), e, x);
  };
  V.push_back(tw("B2", -1, tw("B2", -1, cls("B0"))));
  V.push_back(tw("B2", -1, tw("B2", -1, cls("B1"))));
  V.push_back(tw("B2", -1, cls("C")));
  V.push_back(tw("B2", -1, cls("B0")));
  V.push_back(tw("B2", -1, cls("B1")));
  V.push_back(cls("B0p"));
  V.push_back(cls("B1p"));
  V.push_back(tw("B2p", 1, cls("Cp")));
  V.push_back(tw("B2p", 1, cls("B0p")));
  V.push_back(tw("B2p", 1, cls("B1p")));
  for (int i = 0; i < 10; ++i)
    put(derived_class_curve("V" + std::to_string(i + 1), g, V[i]));

  std::vector<ClassTwist> alpha, beta;
  for (const char* n : {"c4", "c3", "B2p", "c4", "c2", "c1", "B2", "c2"})
    alpha.push_back({cls(n), 1});
  for (const char* n : {"c2", "c4", "c5", "B2", "c4", "c6", "c7", "B2p", "c6"})
    beta.push_back({cls(n), 1});
  SpMat A = evaluate_word(alpha, g), B = evaluate_word(beta, g);
  for (int i = 0; i < 10; ++i) {
    put(derived_class_curve("U" + std::to_string(i + 1), g, lefib::apply(A, V[i])));
    put(derived_class_curve("Up" + std::to_string(i + 1), g, lefib::apply(B, V[i])));
  }
  m.at("U4").pi1_word = kU4;
  m.at("U6").pi1_word = kU6;
  m.at("U7").pi1_word = kU7;
  m.at("U8").pi1_word = kU8;
  m.at("Up4").pi1_word = kU4p;

  // phi-conjugated Matsumoto cycles
  std::vector<ClassTwist> phi;
  for (const char* n : {"b3c", "be0", "c1"}) phi.push_back({cls(n), 1});
  SpMat P = evaluate_word(phi, g);
  for (const char* n : {"be0", "be1", "be2", "be3", "a", "b"})
    put(derived_class_curve(std::string("phi(") + n + ")", g, lefib::apply(P, cls(n))));

  return m;
}

std::map<std::string, std::string> wk_words(int k) {
  auto cword = [](int j) {
    std::string s;
    for (int t = 1; t <= j; ++t) {
      if (!s.empty()) s += ' ';
      s += "[a" + std::to_string(t) + ",b" + std::to_string(t) + "]";
    }
    return s;
  };
  auto brange = [](int lo, int hi) {
    std::string s;
    for (int t = lo; t <= hi; ++t) {
      if (!s.empty()) s += ' ';
      s += "b" + std::to_string(t);
    }
    return s;
  };
  auto join = [](std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) {
      if (p.empty()) continue;
      if (!s.empty()) s += ' ';
      s += p;
    }
    return s;
  };
  auto a = [](int i) { return "a" + std::to_string(i); };
  std::map<std::string, std::string> W;
  W["B0"] = brange(1, 2 * k);
  for (int i = 1; i <= k; ++i)
    W["B" + std::to_string(2 * i - 1)] =
        join({a(i), brange(i, 2 * k + 1 - i), cword(2 * k + 1 - i), a(2 * k + 1 - i)});
  for (int i = 1; i < k; ++i)
    W["B" + std::to_string(2 * i)] =
        join({a(i), brange(i + 1, 2 * k - i), cword(2 * k - i), a(2 * k + 1 - i)});
  W["B" + std::to_string(2 * k)] = join({a(k), cword(k), a(k + 1)});
  W["B0p"] = brange(k + 1, 3 * k);
  for (int i = 1; i <= k; ++i)
    W["B" + std::to_string(2 * i - 1) + "p"] =
        join({a(k + i), brange(k + i, 3 * k + 1 - i), cword(3 * k + 1 - i), a(3 * k + 1 - i)});
  for (int i = 1; i < k; ++i)
    W["B" + std::to_string(2 * i) + "p"] =
        join({a(k + i), brange(k + i + 1, 3 * k - i), cword(3 * k - i), a(3 * k + 1 - i)});
  W["B" + std::to_string(2 * k) + "p"] = join({a(2 * k), cword(2 * k), a(2 * k + 1)});
  W["C"] = cword(k);
  W["Cp"] = cword(2 * k);
  return W;
}

std::vector<std::string> wk_letter_names(int k) {
  std::vector<std::string> B, Bp, out;
  for (int i = 0; i <= 2 * k; ++i) {
    B.push_back("B" + std::to_string(i));
    Bp.push_back("B" + std::to_string(i) + "p");
  }
  for (const auto& n : B) out.push_back(n);
  out.push_back("C");
  for (const auto& n : B) out.push_back(n);
  for (const auto& n : Bp) out.push_back(n);
  out.push_back("Cp");
  for (const auto& n : Bp) out.push_back(n);
  return out;
}

std::map<std::string, std::string> matsumoto_even_words(int m) {
  // same shapes as the unprimed half of W_k, on genus 2m
  auto cword = [](int j) {
    std::string s;
    for (int t = 1; t <= j; ++t) {
      if (!s.empty()) s += ' ';
      s += "[a" + std::to_string(t) + ",b" + std::to_string(t) + "]";
    }
    return s;
  };
  auto brange = [](int lo, int hi) {
    std::string s;
    for (int t = lo; t <= hi; ++t) {
      if (!s.empty()) s += ' ';
      s += "b" + std::to_string(t);
    }
    return s;
  };
  auto join = [](std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) {
      if (p.empty()) continue;
      if (!s.empty()) s += ' ';
      s += p;
    }
    return s;
  };
  auto a = [](int i) { return "a" + std::to_string(i); };
  std::map<std::string, std::string> W;
  W["B0"] = brange(1, 2 * m);
  for (int i = 1; i <= m; ++i)
    W["B" + std::to_string(2 * i - 1)] =
        join({a(i), brange(i, 2 * m + 1 - i), cword(2 * m + 1 - i), a(2 * m + 1 - i)});
  for (int i = 1; i < m; ++i)
    W["B" + std::to_string(2 * i)] =
        join({a(i), brange(i + 1, 2 * m - i), cword(2 * m - i), a(2 * m + 1 - i)});
  W["B" + std::to_string(2 * m)] = join({a(m), cword(m), a(m + 1)});
  W["C"] = cword(m);
  return W;
}

std::vector<std::string> matsumoto_even_letter_names(int m) {
  std::vector<std::string> half;
  for (int i = 0; i <= 2 * m; ++i) half.push_back("B" + std::to_string(i));
  half.push_back("C");
  std::vector<std::string> out = half;
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

Presentation build_presentation(const NamedPresentation& np) {
  if (np.surface_genus >= 0) {
    std::vector<Word> cycles;
    for (const auto& r : np.relators)
      cycles.push_back(parse_surface_word(r, np.surface_genus));
    return vanishing_cycle_quotient(np.surface_genus, cycles);
  }
  Presentation p;
  p.gens = np.generators;
  for (const auto& r : np.relators) p.relators.push_back(parse_word(r, p.gens));
  return p;
}

const Curve& Scenario::curve(const std::string& n) const {
  for (const auto& c : curves)
    if (c.name == n) return c;
  throw std::invalid_argument(name + ": unknown curve " + n);
}

Factorization Scenario::factorization() const {
  Factorization f;
  f.surface = surface;
  for (const auto& [n, e] : letters) f.letters.push_back({curve(n), e});
  f.history = history;
  f.disjoint_pairs = disjoint_pairs;
  return f;
}

std::vector<TwistLetter> Scenario::twist_word(const std::string& n) const {
  auto it = twist_words.find(n);
  if (it == twist_words.end()) throw std::invalid_argument(name + ": unknown word " + n);
  std::vector<TwistLetter> out;
  for (const auto& [cn, e] : it->second) out.push_back({curve(cn), e});
  return out;
}

// ---- scenario builders ---------------------------------------------------

namespace {

using nlohmann::json;

std::vector<std::pair<std::string, int>> plain(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& n : names) out.emplace_back(n, 1);
  return out;
}

json letters_json(const std::vector<std::pair<std::string, int>>& ls) {
  json arr = json::array();
  for (const auto& [n, e] : ls) arr.push_back(json::array({n, e}));
  return arr;
}

void add_curves(Scenario& s, const std::map<std::string, Curve>& table,
                const std::vector<std::string>& names) {
  for (const auto& n : names) {
    bool have = false;
    for (const auto& c : s.curves)
      if (c.name == n) {
        have = true;
        break;
      }
    if (!have) s.curves.push_back(table.at(n));
  }
}

const std::vector<std::string> kWLetters = {"B0", "B1",  "B2",  "C",   "B0",  "B1",  "B2",
                                            "B0p", "B1p", "B2p", "Cp", "B0p", "B1p", "B2p"};
const std::vector<std::string> kMat3Letters = {"be0", "be1", "be2", "be3", "a", "a", "b", "b",
                                               "be0", "be1", "be2", "be3", "a", "a", "b", "b"};

std::vector<std::string> prefixed(const std::string& tag, const std::vector<std::string>& ns) {
  std::vector<std::string> out;
  for (const auto& n : ns) out.push_back(tag + "(" + n + ")");
  return out;
}

NamedPresentation x_subset_presentation() {
  NamedPresentation np;
  np.name = "vanishing-cycle-subset";
  np.surface_genus = 3;
  np.relators = {kU4, kU4p, kU6, kU7, kU8, "a1", "a1 a2^-1", "a2 a3^-1", "a3"};
  np.expect_abelianization = "Z/9";
  np.tc_expect_index = 9;
  return np;
}

NamedPresentation mat3_presentation(bool exact) {
  NamedPresentation np;
  np.name = exact ? "pi1" : "pi1-upper-bound";
  np.surface_genus = 3;
  np.relators = {"b1 b2 b3", "b1 b2 b3 a3 a1", "b2 b3 a3 b3^-1 a1",
                 "a2 b2 [b3,a3] a2", "a2", "[a1,b1^-1] a2^-1"};
  np.expect_abelianization = "Z^2";
  np.certificate = "free_abelian";
  np.exact = exact;
  return np;
}

std::vector<std::string> w3_word_list() {
  return {"b1 b2", "a2^-1 [a3,b3] b2^-1 b1^-1 a1^-1", "a2^-1 [a1,b1^-1] a1^-1",
          "b2 b3", "a3^-1 b3^-1 b2^-1 a2^-1", "b3 a3^-1 b3^-1 a2^-1",
          "[a1,b1]", "[a3,b3]"};
}

Scenario make_X(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "X";
  s.surface = {3, 0};
  add_curves(s, t, {"B0", "B1", "B2", "C", "B0p", "B1p", "B2p", "Cp"});
  s.letters = plain(kWLetters);
  s.history = {
      {HistoryStep::BaseRelator,
       "chain relator: two even Matsumoto squares (-4 each), two inverted separating twists "
       "(+1 each)",
       -6, true},
      {HistoryStep::CapBoundary, "section of square -1", 0, true}};
  s.pipeline = json::array(
      {{{"op", "cap_off"}, {"target_multiplicity", 1}, {"base", letters_json(s.letters)}}});
  NamedPresentation np;
  np.name = "pi1";
  np.surface_genus = 3;
  np.relators = w3_word_list();
  np.expect_abelianization = "Z^2";
  np.certificate = "free_abelian";
  np.exact = true;
  s.presentations = {np};
  s.expect = {6,    -6,   -6,   1,    7,  14, 12, 2, "Z^2", std::nullopt, false,
              "not minimal: blow-up of a ruled surface", {}};
  return s;
}

Expectations expect_basic(long long e, long long sigma, long long c1sq, long long b2p,
                          long long b2m, long long nletters, long long nonsep, long long sep,
                          const std::string& h1, std::optional<std::string> label,
                          std::optional<bool> pi1_trivial, const std::string& minimality,
                          std::vector<std::string> caveats) {
  Expectations x;
  x.e = e;
  x.sigma = sigma;
  x.c1sq = c1sq;
  x.b2plus = b2p;
  x.b2minus = b2m;
  x.letters = nletters;
  x.nonseparating = nonsep;
  x.separating = sep;
  x.h1 = h1;
  x.label = std::move(label);
  x.pi1_trivial = pi1_trivial;
  x.minimality = minimality;
  x.caveats = std::move(caveats);
  return x;
}

const char* kTorsionCaveat =
    "computed H1 contains Z/3 torsion, so the total space is not simply connected; "
    "e, sigma, c1^2 and b2 are unaffected (b1 = 0)";

std::vector<std::string> x_family_letters(int variant) {
  std::vector<std::string> ls;
  for (int i = 1; i <= 10; ++i) ls.push_back("Up" + std::to_string(i));
  for (int i = 1; i <= 10; ++i) ls.push_back("U" + std::to_string(i));
  if (variant == 1)
    for (const char* n : {"c1", "c1", "c3", "c3", "c5", "c5", "c7", "c7"}) ls.push_back(n);
  else if (variant == 2)
    for (const char* n : {"d", "y", "a", "c1", "c3", "c5", "c7"}) ls.push_back(n);
  else
    for (const char* n : {"d", "y", "a", "d", "y", "a"}) ls.push_back(n);
  return ls;
}

std::vector<std::pair<std::string, std::string>> c_pairs() {
  std::vector<std::string> cs = {"c1", "c3", "c5", "c7"};
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) out.emplace_back(cs[i], cs[j]);
  return out;
}

void add_x_family_curves(Scenario& s, const std::map<std::string, Curve>& t) {
  std::vector<std::string> names;
  for (int i = 1; i <= 10; ++i) {
    names.push_back("U" + std::to_string(i));
    names.push_back("Up" + std::to_string(i));
  }
  for (const char* n : {"c1", "c3", "c5", "c7", "d", "y", "a"}) names.push_back(n);
  add_curves(s, t, names);
}

Scenario make_X1(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "X1";
  s.surface = {3, 0};
  add_x_family_curves(s, t);
  s.letters = plain(x_family_letters(1));
  s.history = {{HistoryStep::BaseRelator, "chain relator conjugated by beta", -6, true},
               {HistoryStep::TwistedFiberSum, "chain relator conjugated by alpha", -6, true}};
  s.presentations = {x_subset_presentation()};
  s.expect = expect_basic(20, -12, 4, 3, 15, 28, 24, 4, "Z/3", std::nullopt, false,
                          "minimal: nontrivial fiber sum decomposition", {kTorsionCaveat});
  return s;
}

json substitution_pipeline(const std::vector<std::string>& base,
                           const std::vector<std::size_t>& transpositions, std::size_t start,
                           std::size_t count, const std::vector<std::string>& replacement,
                           const std::string& detail) {
  json op;
  op["op"] = "substitute";
  op["base"] = letters_json(plain(base));
  op["transpositions"] = transpositions;
  op["start"] = start;
  op["count"] = count;
  op["replacement"] = letters_json(plain(replacement));
  op["delta"] = 1;
  op["detail"] = detail;
  return json::array({op});
}

Scenario make_X2(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "X2";
  s.surface = {3, 0};
  add_x_family_curves(s, t);
  s.disjoint_pairs = c_pairs();
  s.letters = plain(x_family_letters(2));
  s.history = {{HistoryStep::BaseRelator, "chain relator conjugated by beta", -6, true},
               {HistoryStep::TwistedFiberSum, "chain relator conjugated by alpha", -6, true},
               {HistoryStep::RelatorSubstitution, "lantern c1 c3 c5 c7 -> d y a", 1, true}};
  s.pipeline = substitution_pipeline(x_family_letters(1), {21, 23, 22, 25, 24, 23}, 20, 4,
                                     {"d", "y", "a"}, "lantern c1 c3 c5 c7 -> d y a");
  s.expect = expect_basic(19, -11, 5, 3, 14, 27, 23, 4, "Z/3", std::nullopt, false,
                          "lantern substitution chain from X1 (1 step)", {kTorsionCaveat});
  return s;
}

Scenario make_X3(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "X3";
  s.surface = {3, 0};
  add_x_family_curves(s, t);
  s.disjoint_pairs = c_pairs();
  s.letters = plain(x_family_letters(3));
  s.history = {{HistoryStep::BaseRelator, "chain relator conjugated by beta", -6, true},
               {HistoryStep::TwistedFiberSum, "chain relator conjugated by alpha", -6, true},
               {HistoryStep::RelatorSubstitution, "lantern c1 c3 c5 c7 -> d y a", 1, true},
               {HistoryStep::RelatorSubstitution, "lantern c1 c3 c5 c7 -> d y a", 1, true}};
  s.pipeline = substitution_pipeline(x_family_letters(2), {}, 23, 4, {"d", "y", "a"},
                                     "lantern c1 c3 c5 c7 -> d y a");
  s.expect = expect_basic(18, -10, 6, 3, 13, 26, 22, 4, "Z/3", std::nullopt, false,
                          "lantern substitution chain from X1 (2 steps)", {kTorsionCaveat});
  return s;
}

Scenario make_Mat3(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "Mat3";
  s.surface = {3, 0};
  add_curves(s, t, {"be0", "be1", "be2", "be3", "a", "b"});
  s.letters = plain(kMat3Letters);
  s.history = {{HistoryStep::BaseRelator, "genus-3 Matsumoto square", -8, true}};
  s.presentations = {mat3_presentation(true)};
  s.expect = expect_basic(8, -8, -8, 1, 9, 16, 16, 0, "Z^2", std::nullopt, false,
                          "unknown", {});
  return s;
}

Scenario make_M19(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "M19";
  s.surface = {3, 0};
  add_curves(s, t, {"be0", "be1", "be2", "be3", "a", "b", "b3c", "c1"});
  add_curves(s, t, prefixed("phi", {"be0", "be1", "be2", "be3", "a", "b"}));
  s.twist_words["phi"] = {{"b3c", 1}, {"be0", 1}, {"c1", 1}};
  auto ls = kMat3Letters;
  for (const auto& n : kMat3Letters) ls.push_back("phi(" + n + ")");
  s.letters = plain(ls);
  s.history = {{HistoryStep::BaseRelator, "genus-3 Matsumoto square", -8, true},
               {HistoryStep::TwistedFiberSum, "phi-conjugate Matsumoto square", -8, true}};
  json op;
  op["op"] = "fiber_sum";
  op["left"] = letters_json(plain(kMat3Letters));
  op["right"] = letters_json(plain(kMat3Letters));
  op["conjugate_right_by"] = "phi";
  s.pipeline = json::array({op});
  s.presentations = {mat3_presentation(false)};
  s.expect = expect_basic(24, -16, 0, 3, 19, 32, 32, 0, "0", "(3,19)", true,
                          "minimal: nontrivial fiber sum decomposition", {});
  return s;
}

const std::vector<std::string> kT1 = {"be0", "be1", "be2", "be3", "a", "a", "b", "b",
                                      "be0", "be1", "be2", "be3", "a", "b"};
const std::vector<std::string> kT4 = {"be0", "be1", "be2", "be3", "a", "a", "b", "b",
                                      "be0", "be1", "be2", "be3", "b", "b"};
const std::vector<std::string> kT3 = {"B0", "B1", "B2", "B0", "B1", "B2",
                                      "B0p", "B1p", "B2p", "B0p", "B1p", "B2p"};

Scenario make_M18(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "M18";
  s.surface = {3, 0};
  add_curves(s, t, {"be0", "be1", "be2", "be3", "a", "b", "c3", "C", "B2"});
  add_curves(s, t, prefixed("phi", {"be1", "be2", "be3", "a", "b"}));
  auto ls = kT1;
  for (const char* n : {"c3", "C", "B2"}) ls.push_back(n);
  std::vector<std::string> t2 = prefixed("phi", {"be1", "be2", "be3", "a", "a", "b", "b"});
  ls.insert(ls.end(), t2.begin(), t2.end());
  ls.insert(ls.end(), t2.begin(), t2.end());
  s.letters = plain(ls);
  s.history = {{HistoryStep::BaseRelator, "genus-3 Matsumoto square", -8, true},
               {HistoryStep::TwistedFiberSum, "phi-conjugate Matsumoto square", -8, true},
               {HistoryStep::RelatorSubstitution, "lantern a b c1 c1 -> c3 C B2", 1, true}};
  s.presentations = {mat3_presentation(false)};
  s.expect = expect_basic(23, -15, 1, 3, 18, 31, 30, 1, "0", "(3,18)", true,
                          "lantern substitution chain from M19 (1 step)", {});
  return s;
}

Scenario make_M17(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "M17";
  s.surface = {3, 0};
  add_curves(s, t, {"be0", "be1", "be2", "be3", "a", "b", "C", "Cp",
                    "B0", "B1", "B2", "B0p", "B1p", "B2p"});
  auto ls = kT4;
  for (const char* n : {"a", "a", "C", "Cp"}) ls.push_back(n);
  ls.insert(ls.end(), kT3.begin(), kT3.end());
  s.letters = plain(ls);
  s.history = {{HistoryStep::BaseRelator, "genus-3 Matsumoto square", -8, true},
               {HistoryStep::TwistedFiberSum, "phi-conjugate Matsumoto square", -8, true},
               {HistoryStep::RelatorSubstitution, "lantern", 1, true},
               {HistoryStep::RelatorSubstitution, "lantern", 1, true}};
  NamedPresentation np;
  np.name = "vanishing-cycle-subset";
  np.surface_genus = 3;
  np.relators = {"b1 b2 b3", "b1 b2 b3 a3 a1", "b2 b3 a3 b3^-1 a1",
                 "a2 b2 [b3,a3] a2", "a2", "[a1,b1^-1] a2^-1"};
  for (const auto& w : w3_word_list()) np.relators.push_back(w);
  np.expect_abelianization = "0";
  np.tc_expect_index = 1;
  s.presentations = {np};
  s.expect = expect_basic(22, -14, 2, 3, 17, 30, 28, 2, "0", "(3,17)", true,
                          "minimal: nontrivial fiber sum decomposition", {});
  return s;
}

Scenario make_M16(const std::map<std::string, Curve>& t) {
  Scenario s;
  s.name = "M16";
  s.surface = {3, 0};
  add_curves(s, t, {"be0", "be1", "be2", "be3", "a", "b", "x", "z", "C", "Cp",
                    "B0", "B1", "B2", "B0p", "B1p", "B2p"});
  auto ls = kT4;
  for (const char* n : {"x", "b", "z"}) ls.push_back(n);
  ls.insert(ls.end(), kT3.begin(), kT3.end());
  s.letters = plain(ls);
  s.history = {{HistoryStep::BaseRelator, "genus-3 Matsumoto square", -8, true},
               {HistoryStep::TwistedFiberSum, "phi-conjugate Matsumoto square", -8, true},
               {HistoryStep::RelatorSubstitution, "lantern", 1, true},
               {HistoryStep::RelatorSubstitution, "lantern", 1, true},
               {HistoryStep::RelatorSubstitution, "lantern a a C Cp -> x b z", 1, true}};
  auto base = kT4;
  for (const char* n : {"a", "a", "C", "Cp"}) base.push_back(n);
  base.insert(base.end(), kT3.begin(), kT3.end());
  s.pipeline = substitution_pipeline(base, {}, 14, 4, {"x", "b", "z"},
                                     "lantern a a C Cp -> x b z");
  NamedPresentation np;
  np.name = "vanishing-cycle-subset";
  np.surface_genus = 3;
  np.relators = {"b1 b2 b3", "b1 b2 b3 a3 a1", "b2 b3 a3 b3^-1 a1",
                 "a2 b2 [b3,a3] a2", "a2", "[a1,b1^-1] a2^-1",
                 "b1 b2", "a2^-1 [a3,b3] b2^-1 b1^-1 a1^-1", "a2^-1 [a1,b1^-1] a1^-1",
                 "b2 b3", "a3^-1 b3^-1 b2^-1 a2^-1", "b3 a3^-1 b3^-1 a2^-1"};
  np.expect_abelianization = "0";
  np.tc_expect_index = 1;
  s.presentations = {np};
  s.expect = expect_basic(21, -13, 3, 3, 16, 29, 28, 1, "0", "(3,16)", true,
                          "lantern substitution chain from M17 (1 step)", {});
  return s;
}

Scenario make_even_matsumoto(int m) {
  Scenario s;
  int g = 2 * m;
  s.name = "Mat" + std::to_string(g);
  s.surface = {g, 0};
  for (const auto& [n, w] : matsumoto_even_words(m)) s.curves.push_back(word_curve(n, g, w));
  s.letters = plain(matsumoto_even_letter_names(m));
  s.history = {{HistoryStep::BaseRelator, "even-genus Matsumoto square", -4, true}};
  long long nl = 2 * (g + 2);
  long long e = 2 * (2 - 2 * g) + nl;
  long long b2 = e - 2 + 2 * g;
  s.expect = expect_basic(e, -4, 2 * e - 12, (b2 - 4) / 2, (b2 + 4) / 2, nl, nl - 2, 2,
                          g == 2 ? "Z^2" : (g == 4 ? "Z^4" : "Z^6"), std::nullopt, false,
                          "unknown", {});
  return s;
}

Scenario make_Xk(int k) {
  Scenario s;
  int g = 3 * k;
  s.name = "X(" + std::to_string(k) + ")";
  s.surface = {g, 0};
  for (const auto& [n, w] : wk_words(k)) s.curves.push_back(word_curve(n, g, w));
  s.letters = plain(wk_letter_names(k));
  s.history = {
      {HistoryStep::BaseRelator,
       "chain relator: two even Matsumoto squares (-4 each), two inverted separating twists "
       "(+1 each)",
       -6, true}};
  NamedPresentation np;
  np.name = "pi1";
  np.surface_genus = g;
  for (const auto& [n, w] : wk_words(k)) np.relators.push_back(w);
  np.expect_abelianization = "Z^" + std::to_string(2 * k);
  np.exact = true;
  s.presentations = {np};
  s.expect = expect_basic(-4 * k + 10, -6, -8 * k + 2, 1, 7, 8 * k + 6, 8 * k + 4, 2,
                          k == 0 ? "0" : "Z^" + std::to_string(2 * k), std::nullopt, false,
                          "not minimal: blow-up of a ruled surface", {});
  return s;
}

Scenario make_Xkk(int k) {
  Scenario s;
  int g = 3 * k;
  s.name = "X(" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
  s.surface = {g, 0};
  s.given_e = 8LL * k * k + 2 * k + 10;
  s.history = {{HistoryStep::BaseRelator, "chain relator", -6, true}};
  for (int i = 0; i < k; ++i)
    s.history.push_back(
        {HistoryStep::TwistedFiberSum, "self-sum with a conjugated copy", -6, true});
  NamedPresentation np;
  np.name = "augmented-presentation";
  np.surface_genus = g;
  for (const auto& [n, w] : wk_words(k)) np.relators.push_back(w);
  for (int i = 1; i <= k; ++i) {
    np.relators.push_back("a" + std::to_string(i));
    np.relators.push_back("b" + std::to_string(i));
  }
  np.expect_abelianization = "0";
  np.exact = true;
  if (k <= 2)
    np.tc_expect_index = 1;
  else
    np.tc_best_effort = true;
  s.presentations = {np};
  long long e = *s.given_e, sigma = -6LL * (k + 1), b2 = e - 2;
  Expectations x;
  x.e = e;
  x.sigma = sigma;
  x.c1sq = 2 * e + 3 * sigma;
  x.b2plus = (b2 + sigma) / 2;
  x.b2minus = (b2 - sigma) / 2;
  x.h1 = "0";
  x.label = "(" + std::to_string(x.b2plus.value()) + "," + std::to_string(x.b2minus.value()) + ")";
  if (k <= 2) x.pi1_trivial = true;
  x.minimality = "unknown";
  if (k > 2)
    x.caveats = {"coset enumeration is best-effort at this size; only H1 = 0 is mandatory"};
  s.expect = x;
  return s;
}

std::vector<std::string> yk_relators(int k) {
  auto al = [](int i) { return "a" + std::to_string(i); };   // alpha_i
  auto be = [](int i) { return "b" + std::to_string(i); };   // beta_i
  std::vector<std::string> rels;
  for (int i = 1; i <= k; ++i)
    rels.push_back("[" + al(i) + "^-1,d] " + be(2 * k - 1 + i) + "^-1");
  for (int i = k + 1; i <= 3 * k - 1; ++i)
    rels.push_back("[" + al(i) + "^-1,d] " + be(i - k) + "^-1");
  rels.push_back("[c^-1," + be(3 * k) + "]^-1 d^-1");
  for (int i = 1; i <= 3 * k - 1; ++i)
    rels.push_back("[" + be(i) + "^-1,d^-1] " + al(i) + "^-1");
  rels.push_back("[d^-1," + be(3 * k) + "^-1] c^-1");
  for (int j = 1; j <= 3 * k - 1; ++j) rels.push_back("[" + be(j) + ",c]");
  rels.push_back("[" + al(3 * k) + ",d]");
  for (int j = 1; j <= 3 * k - 1; ++j) rels.push_back("[" + al(j) + ",c]");
  rels.push_back("[" + al(3 * k) + ",c]");
  std::string surf;
  for (int i = 1; i <= 3 * k; ++i) surf += "[" + al(i) + "," + be(i) + "] ";
  rels.push_back(surf);
  rels.push_back("[c,d]");
  return rels;
}

Scenario make_Zk(int k) {
  Scenario s;
  int g = 3 * k;
  s.name = "Z(" + std::to_string(k) + ")";
  s.surface = {g, 0};
  s.given_e = 8LL * k + 6;
  s.history = {
      {HistoryStep::BaseRelator, "chain relator total space", -6, true},
      {HistoryStep::TwistedFiberSum, "signature-0 torus-surgered product piece", 0, true}};
  // amalgamated presentation: Lefschetz-fibration side glued to the
  // torus-surgered product side along the fiber
  std::vector<Word> cycles;
  for (const auto& [n, w] : wk_words(k)) cycles.push_back(parse_surface_word(w, g));
  Presentation p1 = vanishing_cycle_quotient(g, cycles);
  Presentation p2;
  for (int i = 1; i <= g; ++i) {
    p2.gens.push_back("al" + std::to_string(i));
    p2.gens.push_back("be" + std::to_string(i));
  }
  p2.gens.push_back("c");
  p2.gens.push_back("d");
  {
    // the same relator set, written over alpha/beta names
    std::vector<std::string> raw = yk_relators(k);
    std::vector<std::string> names = p2.gens;
    for (auto& r : raw) {
      std::size_t pos = 0;
      while ((pos = r.find('a', pos)) != std::string::npos) {
        if (pos + 1 < r.size() && std::isdigit(static_cast<unsigned char>(r[pos + 1])))
          r.replace(pos, 1, "al");
        ++pos;
      }
      pos = 0;
      while ((pos = r.find('b', pos)) != std::string::npos) {
        if (pos + 1 < r.size() && std::isdigit(static_cast<unsigned char>(r[pos + 1])))
          r.replace(pos, 1, "be");
        ++pos;
      }
      p2.relators.push_back(parse_word(r, p2.gens));
    }
  }
  std::vector<std::pair<std::string, std::string>> identify;
  for (int i = 1; i <= g; ++i) {
    identify.emplace_back("a" + std::to_string(i), "al" + std::to_string(i));
    identify.emplace_back("b" + std::to_string(i), "be" + std::to_string(i));
  }
  Presentation amal = amalgamate(p1, p2, identify);
  NamedPresentation np;
  np.name = "amalgamated-presentation";
  np.surface_genus = -1;
  np.generators = amal.gens;
  for (const auto& r : amal.relators) np.relators.push_back(print_word(r, amal.gens));
  np.expect_abelianization = "0";
  np.exact = true;
  s.presentations = {np};
  long long e = *s.given_e, sigma = -6, b2 = e - 2;
  Expectations x;
  x.e = e;
  x.sigma = sigma;
  x.c1sq = 2 * e + 3 * sigma;
  x.b2plus = (b2 + sigma) / 2;   // 4k - 1
  x.b2minus = (b2 - sigma) / 2;  // 4k + 5
  x.h1 = "0";
  x.label = "(" + std::to_string(x.b2plus.value()) + "," + std::to_string(x.b2minus.value()) + ")";
  x.minimality = "minimal: Luttinger surgeries preserve minimality";
  x.caveats = {"fundamental group triviality rests on the amalgamated abelianization only"};
  s.expect = x;
  return s;
}

}  // namespace

std::vector<Scenario> build_all_scenarios() {
  auto t = sigma3_curves();
  std::vector<Scenario> out;
  out.push_back(make_X(t));
  out.push_back(make_X1(t));
  out.push_back(make_X2(t));
  out.push_back(make_X3(t));
  out.push_back(make_Mat3(t));
  out.push_back(make_M19(t));
  out.push_back(make_M18(t));
  out.push_back(make_M17(t));
  out.push_back(make_M16(t));
  for (int m : {1, 2, 3}) out.push_back(make_even_matsumoto(m));
  for (int k = 1; k <= 5; ++k) out.push_back(make_Xk(k));
  for (int k = 1; k <= 3; ++k) out.push_back(make_Xkk(k));
  for (int k = 1; k <= 3; ++k) out.push_back(make_Zk(k));
  return out;
}

}  // namespace lefib
