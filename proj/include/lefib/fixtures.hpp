#pragma once

#include <map>
#include <nlohmann/json.hpp>

#include "lefib/factorization.hpp"
#include "lefib/invariants.hpp"

namespace lefib {

// ---- curve and word tables ----------------------------------------------

// Genus-3 chain-configuration curves: vanishing cycles B0..B2', C, C' of the
// 14-letter relator W, the Matsumoto curves beta0..beta3, a, b, the chain
// curves c1..c7, d, y, and the lantern curves x, z.
std::map<std::string, Curve> sigma3_curves();

// pi1 words of the genus-3k relator W_k; cword(j) = [a1,b1]...[aj,bj].
std::map<std::string, std::string> wk_words(int k);
std::vector<std::string> wk_letter_names(int k);
// Generalized Matsumoto words on genus 2m (the unprimed half-family).
std::map<std::string, std::string> matsumoto_even_words(int m);
std::vector<std::string> matsumoto_even_letter_names(int m);

// ---- scenarios -----------------------------------------------------------

struct NamedPresentation {
  std::string name;
  int surface_genus = -1;                // >= 0: surface group quotient
  std::vector<std::string> generators;   // used when surface_genus < 0
  std::vector<std::string> relators;
  std::string expect_abelianization;
  std::optional<long> tc_expect_index;
  bool tc_best_effort = false;
  std::string certificate;  // "" | "free_abelian"
  bool exact = false;       // presents pi1 exactly (vs an upper-bound quotient)
};

Presentation build_presentation(const NamedPresentation& np);

struct Expectations {
  std::optional<long long> e, sigma, c1sq, b2plus, b2minus;
  std::optional<long long> letters, nonseparating, separating;
  std::optional<std::string> h1;
  std::optional<std::string> label;
  std::optional<bool> pi1_trivial;
  std::string minimality;
  std::vector<std::string> caveats;
};

struct Scenario {
  std::string name;
  Surface surface;
  std::vector<Curve> curves;
  std::vector<std::pair<std::string, std::string>> disjoint_pairs;
  std::map<std::string, std::vector<std::pair<std::string, int>>> twist_words;
  std::vector<std::pair<std::string, int>> letters;
  std::vector<HistoryStep> history;
  nlohmann::json pipeline;  // array of replayable construction ops
  std::vector<NamedPresentation> presentations;
  std::optional<long long> given_e;  // for scenarios without explicit letters
  Expectations expect;

  const Curve& curve(const std::string& name) const;
  bool has_letters() const { return !letters.empty(); }
  Factorization factorization() const;
  std::vector<TwistLetter> twist_word(const std::string& name) const;
};

std::vector<Scenario> build_all_scenarios();

// ---- scenario JSON -------------------------------------------------------

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
std::vector<Scenario> load_scenarios(const std::string& path);
void save_scenarios(const std::vector<Scenario>& ss, const std::string& path);

// ---- runners -------------------------------------------------------------

struct Pi1Outcome {
  bool certified_trivial = false;
  bool certified_nontrivial = false;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};
Pi1Outcome run_pi1(const Scenario& s, long max_cosets = 1000000,
                   std::size_t tietze_budget = 4);

// Structural verification: curves, Sp identity, letter census, pipeline
// replay.  Empty result = pass.
std::vector<std::string> run_verify(const Scenario& s);

// Invariant report; checks the two signature computations against each other
// (failures reported through *problems when given).
InvariantReport run_report(const Scenario& s, std::vector<std::string>* problems = nullptr);

// Compares a report against the scenario expectations.
std::vector<std::string> check_expectations(const Scenario& s, const InvariantReport& r);

}  // namespace lefib
