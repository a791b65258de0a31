#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>

#include "lefib/fixtures.hpp"

using namespace lefib;
using nlohmann::json;

namespace {

std::vector<Scenario> pick(const std::vector<Scenario>& all, const std::string& name) {
  if (name.empty()) return all;
  for (const auto& s : all)
    if (s.name == name) return {s};
  throw CLI::ValidationError("--scenario", "unknown scenario: " + name);
}

// Runs fn over the scenarios on up to `jobs` threads; collects output in
// input order.  Returns the number of scenarios with problems.
int for_scenarios(const std::vector<Scenario>& ss, int jobs,
                  const std::function<std::string(const Scenario&, bool&)>& fn) {
  std::vector<std::string> out(ss.size());
  std::vector<char> bad(ss.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ss.size()) return;
      bool failed = false;
      try {
        out[i] = fn(ss[i], failed);
      } catch (const std::exception& ex) {
        out[i] = ss[i].name + ": error: " + ex.what() + "\n";
        failed = true;
      }
      bad[i] = failed ? 1 : 0;
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(ss.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int failures = 0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    std::cout << out[i];
    failures += bad[i];
  }
  return failures;
}

SpMat random_sp(int g, std::mt19937_64& rng, int nletters) {
  std::uniform_int_distribution<int> coef(-2, 2), expo(-2, 2);
  std::vector<ClassTwist> w;
  while (static_cast<int>(w.size()) < nletters) {
    HomologyClass c(2 * g);
    for (auto& x : c) x = coef(rng);
    int e = expo(rng);
    if (is_zero(c) || e == 0) continue;
    w.push_back({c, e});
  }
  return evaluate_word(w, g);
}

int meyer_self_test(int rounds) {
  unsigned long long seed = 0x6c666962;
  if (const char* s = std::getenv("LF_SEED")) seed = std::strtoull(s, nullptr, 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < rounds; ++i) {
    int g = 1 + static_cast<int>(rng() % 3);
    SpMat A = random_sp(g, rng, 4), B = random_sp(g, rng, 4), C = random_sp(g, rng, 4);
    int lhs = meyer_tau(A, B) + meyer_tau(mul(A, B), C);
    int rhs = meyer_tau(B, C) + meyer_tau(A, mul(B, C));
    if (lhs != rhs) {
      std::cout << "FAIL cocycle identity at round " << i << " (g=" << g << ")\n";
      return 1;
    }
    if (meyer_tau(SpMat::identity(2 * g), B) != 0) {
      std::cout << "FAIL tau(I,B) != 0 at round " << i << "\n";
      return 1;
    }
    int t = meyer_tau(A, B);
    if (t < -2 * g || t > 2 * g) {
      std::cout << "FAIL |tau| bound at round " << i << "\n";
      return 1;
    }
  }
  std::cout << "meyer self-test: " << rounds << " rounds ok (seed " << seed << ")\n";
  return 0;
}

json report_json(const Scenario& s, std::vector<std::string>& problems) {
  InvariantReport r = run_report(s, &problems);
  json j;
  j["name"] = s.name;
  j["e"] = r.e;
  j["sigma"] = r.sigma;
  j["c1sq"] = r.c1sq;
  j["b1"] = r.b1;
  j["b2plus"] = r.b2plus;
  j["b2minus"] = r.b2minus;
  j["h1"] = r.h1.str();
  j["label"] = r.label;
  j["minimality"] = r.minimality;
  j["caveats"] = r.caveats;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz fibration monodromy factorizations: verification and invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string data = "data/paper.scen";
  std::string scenario;
  int jobs = 1;
  app.add_option("--data", data, "scenario file")->capture_default_str();
  app.add_option("--scenario", scenario, "restrict to one scenario by name");
  app.add_option("--jobs", jobs, "worker threads (scenario level)")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "structural checks and pipeline replay");
  auto* report = app.add_subcommand("report", "invariant reports");
  auto* pi1 = app.add_subcommand("pi1", "fundamental group certificates");
  auto* meyer = app.add_subcommand("meyer", "Meyer cocycle self-test");
  for (auto* sc : {verify, report, pi1})
    sc->add_option("file", data, "scenario file")->capture_default_str();
  std::string format = "json";
  report->add_option("--format", format, "json|table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  long max_cosets = 1000000;
  std::size_t tietze_budget = 4;
  pi1->add_option("--max-cosets", max_cosets, "coset enumeration limit")
      ->capture_default_str();
  pi1->add_option("--tietze-budget", tietze_budget, "relator length growth cap factor")
      ->capture_default_str();
  int rounds = 100;
  meyer->add_option("--self-test", rounds, "number of random triples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (meyer->parsed()) return meyer_self_test(rounds) ? 1 : 0;
    std::vector<Scenario> ss = pick(load_scenarios(data), scenario);
    int failures = 0;
    if (verify->parsed()) {
      failures = for_scenarios(ss, jobs, [](const Scenario& s, bool& failed) {
        auto problems = run_verify(s);
        std::string out;
        if (problems.empty()) {
          out = s.name + ": ok\n";
        } else {
          failed = true;
          for (const auto& p : problems) out += s.name + ": FAIL " + p + "\n";
        }
        return out;
      });
    } else if (report->parsed()) {
      failures = for_scenarios(ss, jobs, [&format](const Scenario& s, bool& failed) {
        std::vector<std::string> problems;
        json j = report_json(s, problems);
        std::string out;
        if (format == "json") {
          out = j.dump() + "\n";
        } else {
          out = j["name"].get<std::string>() + ": e=" + std::to_string(j["e"].get<long long>()) +
                " sigma=" + std::to_string(j["sigma"].get<long long>()) +
                " c1sq=" + std::to_string(j["c1sq"].get<long long>()) +
                " b1=" + std::to_string(j["b1"].get<long long>()) +
                " b2+=" + std::to_string(j["b2plus"].get<long long>()) +
                " b2-=" + std::to_string(j["b2minus"].get<long long>()) +
                " H1=" + j["h1"].get<std::string>();
          std::string label = j["label"].get<std::string>();
          if (!label.empty()) out += " label=" + label;
          out += "\n";
        }
        for (const auto& p : problems) {
          failed = true;
          out += s.name + ": FAIL " + p + "\n";
        }
        return out;
      });
    } else if (pi1->parsed()) {
      failures = for_scenarios(ss, jobs, [&](const Scenario& s, bool& failed) {
        Pi1Outcome o = run_pi1(s, max_cosets, tietze_budget);
        std::string out = s.name + ": " +
                          (o.certified_trivial
                               ? "pi1 trivial (certified)"
                               : o.certified_nontrivial ? "pi1 nontrivial (certified)"
                                                        : "no certificate") +
                          "\n";
        for (const auto& n : o.notes) out += "  " + n + "\n";
        for (const auto& f : o.failures) {
          failed = true;
          out += s.name + ": FAIL " + f + "\n";
        }
        return out;
      });
    }
    return failures ? 1 : 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
