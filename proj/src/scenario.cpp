#include <fstream>
#include <nlohmann/json.hpp>

#include "lefib/fixtures.hpp"

namespace lefib {

using nlohmann::json;

namespace {

const char* kind_names[] = {"base-relator",         "global-conjugate", "twisted-fiber-sum",
                            "relator-substitution", "hurwitz-move",     "cap-boundary"};

HistoryStep::Kind kind_from_name(const std::string& n) {
  for (int k = 0; k <= HistoryStep::CapBoundary; ++k)
    if (n == kind_names[k]) return static_cast<HistoryStep::Kind>(k);
  throw std::invalid_argument("unknown history kind: " + n);
}

json curve_to_json(const Curve& c) {
  json j;
  j["name"] = c.name;
  json h = json::array();
  for (const auto& x : c.homology) h.push_back(static_cast<long long>(x));
  j["homology"] = h;
  j["separating"] = c.separating;
  if (c.pi1_word) j["pi1_word"] = *c.pi1_word;
  j["provenance"] = c.provenance;
  return j;
}

Curve curve_from_json(const json& j, Surface surface) {
  Curve c;
  c.name = j.at("name").get<std::string>();
  c.surface = surface;
  for (const auto& x : j.at("homology")) c.homology.push_back(Int(x.get<long long>()));
  c.separating = j.at("separating").get<bool>();
  if (j.contains("pi1_word")) c.pi1_word = j.at("pi1_word").get<std::string>();
  c.provenance = j.at("provenance").get<std::string>();
  return c;
}

json letters_to_json(const std::vector<std::pair<std::string, int>>& ls) {
  json arr = json::array();
  for (const auto& [n, e] : ls) arr.push_back(json::array({n, e}));
  return arr;
}

std::vector<std::pair<std::string, int>> letters_from_json(const json& arr) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& l : arr) out.emplace_back(l.at(0).get<std::string>(), l.at(1).get<int>());
  return out;
}

json presentation_to_json(const NamedPresentation& np) {
  json j;
  j["name"] = np.name;
  j["surface_genus"] = np.surface_genus;
  if (np.surface_genus < 0) j["generators"] = np.generators;
  j["relators"] = np.relators;
  j["expect_abelianization"] = np.expect_abelianization;
  if (np.tc_expect_index) j["tc_expect_index"] = *np.tc_expect_index;
  if (np.tc_best_effort) j["tc_best_effort"] = true;
  if (!np.certificate.empty()) j["certificate"] = np.certificate;
  if (np.exact) j["exact"] = true;
  return j;
}

NamedPresentation presentation_from_json(const json& j) {
  NamedPresentation np;
  np.name = j.at("name").get<std::string>();
  np.surface_genus = j.at("surface_genus").get<int>();
  if (j.contains("generators"))
    np.generators = j.at("generators").get<std::vector<std::string>>();
  np.relators = j.at("relators").get<std::vector<std::string>>();
  np.expect_abelianization = j.at("expect_abelianization").get<std::string>();
  if (j.contains("tc_expect_index")) np.tc_expect_index = j.at("tc_expect_index").get<long>();
  np.tc_best_effort = j.value("tc_best_effort", false);
  np.certificate = j.value("certificate", std::string());
  np.exact = j.value("exact", false);
  return np;
}

template <typename T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (j.contains(key)) return j.at(key).get<T>();
  return std::nullopt;
}

json expect_to_json(const Expectations& x) {
  json j;
  put_opt(j, "e", x.e);
  put_opt(j, "sigma", x.sigma);
  put_opt(j, "c1sq", x.c1sq);
  put_opt(j, "b2plus", x.b2plus);
  put_opt(j, "b2minus", x.b2minus);
  put_opt(j, "letters", x.letters);
  put_opt(j, "nonseparating", x.nonseparating);
  put_opt(j, "separating", x.separating);
  put_opt(j, "h1", x.h1);
  put_opt(j, "label", x.label);
  put_opt(j, "pi1_trivial", x.pi1_trivial);
  j["minimality"] = x.minimality;
  j["caveats"] = x.caveats;
  return j;
}

Expectations expect_from_json(const json& j) {
  Expectations x;
  x.e = get_opt<long long>(j, "e");
  x.sigma = get_opt<long long>(j, "sigma");
  x.c1sq = get_opt<long long>(j, "c1sq");
  x.b2plus = get_opt<long long>(j, "b2plus");
  x.b2minus = get_opt<long long>(j, "b2minus");
  x.letters = get_opt<long long>(j, "letters");
  x.nonseparating = get_opt<long long>(j, "nonseparating");
  x.separating = get_opt<long long>(j, "separating");
  x.h1 = get_opt<std::string>(j, "h1");
  x.label = get_opt<std::string>(j, "label");
  x.pi1_trivial = get_opt<bool>(j, "pi1_trivial");
  x.minimality = j.at("minimality").get<std::string>();
  x.caveats = j.at("caveats").get<std::vector<std::string>>();
  return x;
}

}  // namespace

json scenario_to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  j["surface"] = {{"genus", s.surface.genus}, {"boundary", s.surface.boundary}};
  json cs = json::array();
  for (const auto& c : s.curves) cs.push_back(curve_to_json(c));
  j["curves"] = cs;
  if (!s.disjoint_pairs.empty()) {
    json dp = json::array();
    for (const auto& [a, b] : s.disjoint_pairs) dp.push_back(json::array({a, b}));
    j["disjoint_pairs"] = dp;
  }
  if (!s.twist_words.empty()) {
    json tw = json::object();
    for (const auto& [n, w] : s.twist_words) tw[n] = letters_to_json(w);
    j["twist_words"] = tw;
  }
  j["letters"] = letters_to_json(s.letters);
  json hs = json::array();
  for (const auto& h : s.history)
    hs.push_back({{"kind", history_kind_name(h.kind)},
                  {"detail", h.detail},
                  {"delta", h.signature_delta},
                  {"delta_known", h.delta_known}});
  j["history"] = hs;
  if (s.pipeline.is_array() && !s.pipeline.empty()) j["pipeline"] = s.pipeline;
  if (!s.presentations.empty()) {
    json ps = json::array();
    for (const auto& p : s.presentations) ps.push_back(presentation_to_json(p));
    j["presentations"] = ps;
  }
  put_opt(j, "given_e", s.given_e);
  j["expect"] = expect_to_json(s.expect);
  return j;
}

Scenario scenario_from_json(const json& j) {
  Scenario s;
  s.name = j.at("name").get<std::string>();
  s.surface = {j.at("surface").at("genus").get<int>(),
               j.at("surface").at("boundary").get<int>()};
  for (const auto& c : j.at("curves")) s.curves.push_back(curve_from_json(c, s.surface));
  if (j.contains("disjoint_pairs"))
    for (const auto& p : j.at("disjoint_pairs"))
      s.disjoint_pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  if (j.contains("twist_words"))
    for (const auto& [n, w] : j.at("twist_words").items())
      s.twist_words[n] = letters_from_json(w);
  s.letters = letters_from_json(j.at("letters"));
  for (const auto& h : j.at("history"))
    s.history.push_back({kind_from_name(h.at("kind").get<std::string>()),
                         h.at("detail").get<std::string>(),
                         h.at("delta").get<long long>(), h.at("delta_known").get<bool>()});
  if (j.contains("pipeline")) s.pipeline = j.at("pipeline");
  if (j.contains("presentations"))
    for (const auto& p : j.at("presentations"))
      s.presentations.push_back(presentation_from_json(p));
  s.given_e = get_opt<long long>(j, "given_e");
  s.expect = expect_from_json(j.at("expect"));
  return s;
}

std::vector<Scenario> load_scenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  std::vector<Scenario> out;
  for (const auto& sj : j.at("scenarios")) out.push_back(scenario_from_json(sj));
  return out;
}

void save_scenarios(const std::vector<Scenario>& ss, const std::string& path) {
  json arr = json::array();
  for (const auto& s : ss) arr.push_back(scenario_to_json(s));
  json j;
  j["scenarios"] = arr;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

// ---- runners -------------------------------------------------------------

namespace {

std::vector<TwistLetter> resolve_letters(const Scenario& s, const json& arr, int boundary) {
  std::vector<TwistLetter> out;
  for (const auto& l : arr) {
    Curve c = s.curve(l.at(0).get<std::string>());
    c.surface.boundary = boundary;
    out.push_back({std::move(c), l.at(1).get<int>()});
  }
  return out;
}

void compare_letters(const std::string& what, const std::vector<TwistLetter>& got,
                     const Factorization& want, std::vector<std::string>& problems) {
  if (got.size() != want.letters.size()) {
    problems.push_back(what + ": replay produced " + std::to_string(got.size()) +
                       " letters, scenario has " + std::to_string(want.letters.size()));
    return;
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].curve.homology != want.letters[i].curve.homology ||
        got[i].exponent != want.letters[i].exponent) {
      problems.push_back(what + ": replay letter " + std::to_string(i) + " (" +
                         got[i].curve.name + ") differs from scenario letter " +
                         want.letters[i].curve.name);
      return;
    }
  }
}

void replay_pipeline(const Scenario& s, std::vector<std::string>& problems) {
  Factorization target = s.factorization();
  for (const auto& op : s.pipeline) {
    std::string kind = op.at("op").get<std::string>();
    try {
      if (kind == "cap_off") {
        Factorization base;
        base.surface = {s.surface.genus, 1};
        base.letters = resolve_letters(s, op.at("base"), 1);
        base.boundary_target = {{0, op.at("target_multiplicity").get<int>()}};
        auto bp = verify_factorization(base);
        for (auto& p : bp) problems.push_back("cap_off base: " + p);
        Factorization res = cap_off(std::move(base));
        compare_letters("cap_off", res.letters, target, problems);
      } else if (kind == "fiber_sum") {
        Factorization left, right;
        left.surface = right.surface = s.surface;
        left.letters = resolve_letters(s, op.at("left"), 0);
        right.letters = resolve_letters(s, op.at("right"), 0);
        std::string by = op.at("conjugate_right_by").get<std::string>();
        Factorization res = twisted_fiber_sum(left, right, s.twist_word(by), by);
        compare_letters("fiber_sum", res.letters, target, problems);
      } else if (kind == "substitute") {
        Factorization base;
        base.surface = s.surface;
        base.letters = resolve_letters(s, op.at("base"), 0);
        base.disjoint_pairs = s.disjoint_pairs;
        SubstitutionSite site;
        for (const auto& t : op.at("transpositions"))
          site.transpositions.push_back(t.get<std::size_t>());
        site.start = op.at("start").get<std::size_t>();
        site.count = op.at("count").get<std::size_t>();
        site.replacement = resolve_letters(s, op.at("replacement"), 0);
        site.signature_delta = op.at("delta").get<long long>();
        site.detail = op.at("detail").get<std::string>();
        Factorization res = relator_substitute(std::move(base), site);
        compare_letters("substitute", res.letters, target, problems);
      } else {
        problems.push_back("unknown pipeline op: " + kind);
      }
    } catch (const std::exception& ex) {
      problems.push_back("pipeline " + kind + ": " + ex.what());
    }
  }
}

// H1 evidence used in the certification routes: the letter classes when
// present, else the abelianization of an exact presentation.
std::optional<AbelianGroup> h1_evidence(const Scenario& s) {
  if (s.has_letters()) return h1_from_letters(s.factorization());
  for (const auto& np : s.presentations)
    if (np.exact) return abelianization(build_presentation(np));
  return std::nullopt;
}

}  // namespace

std::vector<std::string> run_verify(const Scenario& s) {
  std::vector<std::string> problems;
  for (const auto& c : s.curves) {
    auto cp = validate_curve(c);
    for (auto& p : cp) problems.push_back(s.name + "/" + c.name + ": " + p);
  }
  if (s.has_letters()) {
    Factorization f = s.factorization();
    auto fp = verify_factorization(f);
    for (auto& p : fp) problems.push_back(s.name + ": " + p);
    long long n = 0, sep = 0;
    for (const auto& l : f.letters) {
      n += std::abs(l.exponent);
      if (l.curve.separating) sep += std::abs(l.exponent);
    }
    if (s.expect.letters && n != *s.expect.letters)
      problems.push_back(s.name + ": letter count " + std::to_string(n) + " != expected " +
                         std::to_string(*s.expect.letters));
    if (s.expect.separating && sep != *s.expect.separating)
      problems.push_back(s.name + ": separating count " + std::to_string(sep) +
                         " != expected " + std::to_string(*s.expect.separating));
    if (s.expect.nonseparating && n - sep != *s.expect.nonseparating)
      problems.push_back(s.name + ": nonseparating count " + std::to_string(n - sep) +
                         " != expected " + std::to_string(*s.expect.nonseparating));
  }
  if (s.pipeline.is_array() && !s.pipeline.empty()) replay_pipeline(s, problems);
  return problems;
}

Pi1Outcome run_pi1(const Scenario& s, long max_cosets, std::size_t tietze_budget) {
  Pi1Outcome o;
  auto h1 = h1_evidence(s);
  for (const auto& np : s.presentations) {
    Presentation p = build_presentation(np);
    AbelianGroup ab = abelianization(p);
    if (!np.expect_abelianization.empty() && ab.str() != np.expect_abelianization) {
      o.failures.push_back(s.name + "/" + np.name + ": abelianization " + ab.str() +
                           " != expected " + np.expect_abelianization);
      continue;
    }
    o.notes.push_back(s.name + "/" + np.name + ": abelianization " + ab.str());
    if (np.certificate == "free_abelian") {
      TietzeResult tz = tietze_simplify(p, tietze_budget);
      auto rank = recognize_free_abelian(tz.pres);
      if (!rank) {
        o.failures.push_back(s.name + "/" + np.name +
                             ": free-abelian certificate did not verify");
      } else {
        o.notes.push_back(s.name + "/" + np.name + ": certified Z^" + std::to_string(*rank));
        if (*rank != ab.free_rank || !ab.torsion.empty())
          o.failures.push_back(s.name + "/" + np.name +
                               ": certificate rank disagrees with abelianization");
        // the presented group is abelian, so pi1 (its quotient) is abelian
        // and equals H1
        else if (h1 && h1->trivial())
          o.certified_trivial = true;
      }
    }
    if (np.tc_expect_index) {
      TCResult tc = todd_coxeter(p, max_cosets);
      if (!tc.index || *tc.index != *np.tc_expect_index) {
        o.failures.push_back(s.name + "/" + np.name + ": coset enumeration gave " +
                             (tc.index ? std::to_string(*tc.index) : std::string("no closure")) +
                             ", expected " + std::to_string(*np.tc_expect_index));
      } else {
        o.notes.push_back(s.name + "/" + np.name + ": coset enumeration closed at index " +
                          std::to_string(*tc.index) + " (" +
                          std::to_string(tc.cosets_defined) + " cosets defined)");
        if (*tc.index == 1) o.certified_trivial = true;
      }
    } else if (np.tc_best_effort) {
      TCResult tc = todd_coxeter(p, max_cosets);
      if (tc.index) {
        o.notes.push_back(s.name + "/" + np.name + ": coset enumeration closed at index " +
                          std::to_string(*tc.index));
        if (*tc.index == 1) o.certified_trivial = true;
      } else {
        o.notes.push_back(s.name + "/" + np.name +
                          ": coset enumeration did not close within the budget");
      }
    }
  }
  if (h1 && !h1->trivial()) {
    o.certified_nontrivial = true;
    o.notes.push_back(s.name + ": H1 = " + h1->str() + " obstructs triviality");
  }
  if (s.expect.pi1_trivial) {
    if (*s.expect.pi1_trivial && !o.certified_trivial)
      o.failures.push_back(s.name + ": expected a triviality certificate, none obtained");
    if (!*s.expect.pi1_trivial && !o.certified_nontrivial)
      o.failures.push_back(s.name + ": expected a nontriviality certificate, none obtained");
  }
  return o;
}

InvariantReport run_report(const Scenario& s, std::vector<std::string>* problems) {
  auto note = [&](const std::string& p) {
    if (problems) problems->push_back(p);
  };
  long long e;
  Factorization f;
  if (s.has_letters()) {
    f = s.factorization();
    e = euler_characteristic(f);
  } else if (s.given_e) {
    f.surface = s.surface;
    f.history = s.history;
    e = *s.given_e;
  } else {
    throw std::invalid_argument(s.name + ": no letters and no recorded Euler characteristic");
  }
  long long sigma = signature_endo_nagami(f);
  if (s.has_letters()) {
    long long sm = signature_meyer(f);
    if (sm != sigma)
      note(s.name + ": Meyer signature " + std::to_string(sm) + " != ledger signature " +
           std::to_string(sigma));
  }
  auto h1 = h1_evidence(s);
  if (!h1) throw std::invalid_argument(s.name + ": no H1 evidence available");
  Pi1Outcome pi1 = run_pi1(s);
  for (auto& p : pi1.failures) note(p);
  return make_report(e, sigma, *h1, pi1.certified_trivial, s.expect.minimality,
                     s.expect.caveats);
}

std::vector<std::string> check_expectations(const Scenario& s, const InvariantReport& r) {
  std::vector<std::string> problems;
  auto chk = [&](const char* what, const std::optional<long long>& want, long long got) {
    if (want && got != *want)
      problems.push_back(s.name + ": " + what + " = " + std::to_string(got) +
                         " != expected " + std::to_string(*want));
  };
  chk("e", s.expect.e, r.e);
  chk("sigma", s.expect.sigma, r.sigma);
  chk("c1^2", s.expect.c1sq, r.c1sq);
  chk("b2+", s.expect.b2plus, r.b2plus);
  chk("b2-", s.expect.b2minus, r.b2minus);
  if (s.expect.h1 && r.h1.str() != *s.expect.h1)
    problems.push_back(s.name + ": H1 = " + r.h1.str() + " != expected " + *s.expect.h1);
  if (s.expect.label && r.label != *s.expect.label)
    problems.push_back(s.name + ": label '" + r.label + "' != expected '" + *s.expect.label +
                       "'");
  return problems;
}

}  // namespace lefib
