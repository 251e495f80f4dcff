// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fairagg/acts_mixing.hpp"
#include "fairagg/axiom_harness.hpp"
#include "fairagg/cli.hpp"
#include "fairagg/random.hpp"
#include "fairagg/rules.hpp"
#include "fairagg/welfare_analysis.hpp"

using namespace fairagg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Problem with random raw values and beliefs.
Problem random_problem(Rng& rng, std::size_t n, std::size_t outcomes, std::size_t cells,
                       bool common_values = false) {
  std::vector<std::string> xs, cs;
  for (std::size_t k = 0; k < outcomes; ++k) xs.push_back("o" + std::to_string(k));
  for (std::size_t c = 0; c < cells; ++c) cs.push_back("s" + std::to_string(c));
  std::vector<Individual> people;
  ValueFunction shared(outcomes);
  for (auto& v : shared) v = rng.uniform(-3.0, 7.0);
  for (std::size_t i = 0; i < n; ++i) {
    ValueFunction v = shared;
    if (!common_values) {
      for (auto& x : v) x = rng.uniform(-3.0, 7.0);
    }
    Belief b(cells);
    double total = 0.0;
    for (auto& p : b) total += (p = rng.uniform(0.02, 1.0));
    for (auto& p : b) p /= total;
    people.push_back({v, b});
  }
  return Problem(xs, cs, people);
}

Act random_act(Rng& rng, const Problem& p) {
  std::vector<std::size_t> out(p.num_cells());
  for (auto& o : out) o = rng.index(p.num_outcomes());
  return Act(out);
}

// Normalized SEU profile computed here from the raw numbers.
std::vector<double> profile_oracle(const Problem& p, const Act& f) {
  std::vector<double> u(p.num_individuals(), 0.0);
  for (std::size_t i = 0; i < p.num_individuals(); ++i) {
    const auto& v = p.individual(i).values;
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    for (std::size_t c = 0; c < p.num_cells(); ++c) {
      u[i] += p.individual(i).belief[c] * (v[f[c]] - lo) / (hi - lo);
    }
  }
  return u;
}

WeightVector random_weight(Rng& rng, std::size_t n, double floor = 0.0) {
  auto w = rng.dirichlet(n);
  for (auto& x : w) x = floor + (1.0 - n * floor) * x;
  return WeightVector(w);
}

WeightSet random_polytope(Rng& rng, std::size_t n, std::size_t max_vertices, double floor = 0.0) {
  const std::size_t k = 1 + rng.index(max_vertices);
  std::vector<WeightVector> vs;
  for (std::size_t j = 0; j < k; ++j) vs.push_back(random_weight(rng, n, floor));
  return WeightSet(vs);
}

GeneratorConfig config_for(std::size_t n, std::size_t trials = 1000) {
  GeneratorConfig c;
  c.n = n;
  c.trials = trials;
  return c;
}

void expect_clean(Outcome& r, const AggregationRule& rule, Axiom ax, const GeneratorConfig& c,
                  const std::string& what) {
  const auto rep = check_axiom(rule, ax, c);
  if (rep.status != VerdictStatus::kNoViolationFound) {
    r.fail(what + " violates " + std::string(axiom_name(ax)) + ": " + rep.detail);
  } else if (rep.trials < c.trials) {
    r.fail(what + " ran only " + std::to_string(rep.trials) + " trials of " +
           std::string(axiom_name(ax)));
  }
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  Outcome r;
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 2 + t % 3;
    const Problem p = random_problem(rng, n, 2 + rng.index(4), 1 + rng.index(5));
    const Act f = random_act(rng, p);
    const WeightVector mu = random_weight(rng, n);
    std::vector<WeightVector> corners;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> e(n, 0.0);
      e[i] = 1.0;
      corners.emplace_back(e);
    }
    const double fair_single = relative_fair(WeightSet::singleton(mu)).evaluate(p, f);
    const double util = relative_utilitarian(mu).evaluate(p, f);
    const double fair_full = relative_fair(WeightSet(corners)).evaluate(p, f);
    const double maximin = relative_maximin().evaluate(p, f);
    const auto u = profile_oracle(p, f);
    const double oracle_min = *std::min_element(u.begin(), u.end());
    double oracle_util = 0.0;
    for (std::size_t i = 0; i < n; ++i) oracle_util += mu[i] * u[i];
    for (double d : {fair_single - util, fair_full - maximin, maximin - oracle_min,
                     util - oracle_util}) {
      worst = std::max(worst, std::fabs(d));
    }
  }
  if (worst > 1e-12) r.fail("max deviation " + fmt(worst));
  r.detail = r.pass ? "10^4 pairs, max deviation " + fmt(worst) : r.detail;
  return r;
}

Outcome ac2() {
  Outcome r;
  Rng rng(202);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.index(3);
    const Problem p = random_problem(rng, n, 2 + rng.index(4), 1 + rng.index(5));
    const Act f = random_act(rng, p);
    const std::size_t x = rng.index(p.num_outcomes());
    const double alpha = t == 0 ? 1.0 : rng.uniform(0.001, 1.0);
    const PseudoMixture mix = pseudo_mixed_act(p, f, x, alpha);
    const Problem& q = mix.map.refined;
    const auto u_f = profile_oracle(p, f);
    const auto u_mix = profile_oracle(q, mix.act);
    for (std::size_t i = 0; i < n; ++i) {
      // alpha times the distribution of f, plus the rest on x.
      std::vector<double> want(p.num_outcomes(), 0.0), got(p.num_outcomes(), 0.0);
      for (std::size_t c = 0; c < p.num_cells(); ++c) {
        want[f[c]] += alpha * p.individual(i).belief[c];
      }
      want[x] += 1.0 - alpha;
      for (std::size_t c = 0; c < q.num_cells(); ++c) got[mix.act[c]] += q.individual(i).belief[c];
      const auto lib = outcome_masses(q, i, mix.act);
      for (std::size_t k = 0; k < want.size(); ++k) {
        worst = std::max({worst, std::fabs(want[k] - got[k]), std::fabs(want[k] - lib[k])});
      }
      const auto& v = p.individual(i).values;
      const double lo = *std::min_element(v.begin(), v.end());
      const double hi = *std::max_element(v.begin(), v.end());
      const double ux = (v[x] - lo) / (hi - lo);
      const double lin = alpha * u_f[i] + (1.0 - alpha) * ux;
      worst = std::max({worst, std::fabs(u_mix[i] - lin),
                        std::fabs(normalized_seu(q, i, mix.act) - lin)});
    }
  }
  if (worst > 1e-12) r.fail("max deviation " + fmt(worst));
  r.detail = r.pass ? "10^3 cases, max deviation " + fmt(worst) : r.detail;
  return r;
}

Outcome ac3() {
  Outcome r;
  Rng rng(303);
  std::size_t rules = 0;
  for (int m = 0; m < 20; ++m) {
    const std::size_t n = m % 2 ? 3 : 2;
    const auto rule = relative_fair(random_polytope(rng, n, 5));
    const auto c = config_for(n);
    for (Axiom ax : characterization_axioms()) {
      expect_clean(r, rule, ax, c, "M#" + std::to_string(m));
    }
    ++rules;
  }
  if (r.pass) r.detail = std::to_string(rules) + " random polytopes, six axioms each";
  return r;
}

Outcome ac4() {
  Outcome r;
  const auto c = config_for(2);
  for (const auto& ce : counterexample_rules()) {
    const std::string who = ce.rule.label();
    for (Axiom ax : characterization_axioms()) {
      const auto rep = check_axiom(ce.rule, ax, c);
      if (ax == ce.axiom) {
        if (rep.status != VerdictStatus::kViolated) {
          r.fail(who + " not caught on " + std::string(axiom_name(ax)));
        } else if (replay(ce.rule, rep) != VerdictStatus::kViolated) {
          r.fail(who + " witness does not replay");
        }
        // The golden witness on its own must also convict.
        bool golden_hit = false;
        for (const auto& w : golden_witnesses(ax, 2)) {
          golden_hit = golden_hit || find_violation(ax, ce.rule, w).has_value();
        }
        if (!golden_hit) r.fail(who + " golden witness does not replay as violated");
      } else if (rep.status != VerdictStatus::kNoViolationFound || rep.trials < c.trials) {
        r.fail(who + " unexpectedly on " + std::string(axiom_name(ax)) + ": " + rep.detail);
      }
    }
  }
  if (r.pass) r.detail = "six rules, each violates exactly its designated axiom";
  return r;
}

Outcome ac5() {
  Outcome r;
  const auto segment = WeightSet({WeightVector({0.3, 0.7}), WeightVector({0.7, 0.3})});
  std::vector<std::pair<std::string, WelfareFunction>> fs;
  fs.emplace_back("maximin", welfare_of_rule(relative_maximin(), 2));
  fs.emplace_back("util_equal", welfare_of_rule(relative_utilitarian(WeightVector::equal(2)), 2));
  fs.emplace_back("util_asym", welfare_of_rule(relative_utilitarian(WeightVector({0.9, 0.1})), 2));
  fs.emplace_back("nash", welfare_of_rule(nash_rule(), 2));
  fs.emplace_back("max_weight", welfare_of_rule(max_weight_rule(segment), 2));
  const std::map<std::string, std::set<std::string>> expected{
      {"maximin", {}},
      {"util_equal", {}},
      {"util_asym", {"symmetric"}},
      {"nash", {"homogeneous", "translation_invariant"}},
      {"max_weight", {"quasiconcave"}}};
  const auto rows = property_matrix(fs, 10000, kDefaultSeed);
  const auto& props = all_welfare_properties();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::set<std::string> failed;
    for (std::size_t j = 0; j < props.size(); ++j) {
      const auto& v = rows[k].verdicts[j];
      if (v.status == VerdictStatus::kViolated) {
        failed.insert(std::string(property_name(props[j])));
        if (!witness_violates(fs[k].second, v)) r.fail(rows[k].name + " witness does not replay");
      }
    }
    if (failed != expected.at(rows[k].name)) r.fail(rows[k].name + " pattern differs");
  }
  if (r.pass) r.detail = "five functions at 10^4 samples match the expected pattern";
  return r;
}

Outcome ac6() {
  Outcome r;
  Rng rng(606);
  double worst_h = 0.0, worst_score = 0.0;
  for (int m = 0; m < 20; ++m) {
    const std::size_t n = m % 2 ? 3 : 2;
    const WeightSet truth = random_polytope(rng, n, 5);
    const auto original = relative_fair(truth);
    const auto rec = recover_weight_set(welfare_of_rule(original, n),
                                        make_direction_grid(n, 1000, derive_seed(606, 1, m)));
    worst_h = std::max(worst_h, hausdorff_distance(truth, rec));
    const auto rebuilt = relative_fair(to_weight_set(rec));
    for (int t = 0; t < 1000; ++t) {
      const Problem p = random_problem(rng, n, 2 + rng.index(3), 1 + rng.index(4));
      const Act f = random_act(rng, p);
      worst_score = std::max(worst_score,
                             std::fabs(original.evaluate(p, f) - rebuilt.evaluate(p, f)));
    }
  }
  if (worst_h > 0.01) r.fail("Hausdorff distance " + fmt(worst_h));
  if (worst_score > 1e-6) r.fail("score gap " + fmt(worst_score));
  if (r.pass) {
    r.detail = "20 sets, max Hausdorff " + fmt(worst_h) + ", max score gap " + fmt(worst_score);
  }
  return r;
}

Outcome ac7() {
  Outcome r;
  const auto rule = relative_leximin();
  for (std::size_t n : {2, 3}) {
    const auto c = config_for(n);
    for (Axiom ax : {Axiom::kStrongPareto, Axiom::kIie, Axiom::kBeliefIrrelevance,
                     Axiom::kAnonymity, Axiom::kSpm, Axiom::kSeparability}) {
      expect_clean(r, rule, ax, c, "leximin n=" + std::to_string(n));
    }
    const auto cont = check_continuity_witness(rule, c);
    if (cont.status != VerdictStatus::kViolated) {
      r.fail("continuity sequence not violated for n=" + std::to_string(n));
    }
  }
  if (r.pass) r.detail = "six axioms clean, continuity sequence violated (n = 2, 3)";
  return r;
}

Outcome ac8() {
  Outcome r;
  for (std::size_t n : {2, 3}) {
    const auto c = config_for(n);
    expect_clean(r, relative_maximin(), Axiom::kSpm, c, "maximin");
    expect_clean(r, relative_maximin(), Axiom::kSaa, c, "maximin");
  }
  Rng rng(808);
  std::size_t worst = 0;
  for (int m = 0; m < 20; ++m) {
    const std::size_t n = m % 2 ? 3 : 2;
    // At least two distinct vertices, all coordinates strictly positive.
    WeightSet set = random_polytope(rng, n, 4, 1e-3);
    while (set.is_singleton()) set = random_polytope(rng, n, 4, 1e-3);
    const auto rule = relative_fair(set);
    auto c = config_for(n, 10000);
    c.inject_golden = false;
    c.seed = derive_seed(808, 2, m);
    const auto a = check_axiom(rule, Axiom::kSaa, c);
    const auto b = check_axiom(rule, Axiom::kSaa, c);
    if (a.status != VerdictStatus::kViolated) {
      r.fail("M#" + std::to_string(m) + " not caught in 10^4 trials");
    } else if (a.trials != b.trials || a.detail != b.detail) {
      r.fail("search not reproducible");
    } else if (a.source != "search") {
      r.fail("violation did not come from search");
    }
    worst = std::max(worst, a.trials);
  }
  if (r.pass) {
    r.detail = "maximin clean; 20 interior sets caught, worst at trial " + std::to_string(worst);
  }
  return r;
}

Outcome ac9() {
  Outcome r;
  Rng rng(909);
  for (int m = 0; m < 10; ++m) {
    const std::size_t n = m % 2 ? 3 : 2;
    std::vector<PenalizedWeight> cands{{random_weight(rng, n), 0.0}};
    const std::size_t extra = 1 + rng.index(4);
    for (std::size_t k = 0; k < extra; ++k) {
      cands.push_back({random_weight(rng, n), rng.uniform(0.0, 0.3)});
    }
    const auto rule = variational(CostFunction(cands));
    const auto c = config_for(n);
    for (Axiom ax : {Axiom::kWrci, Axiom::kWpm, Axiom::kPareto, Axiom::kIie,
                     Axiom::kBeliefIrrelevance}) {
      expect_clean(r, rule, ax, c, "variational#" + std::to_string(m));
    }
  }
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.index(3);
    std::vector<PenalizedWeight> cands;
    std::vector<WeightVector> hull;
    const std::size_t k = 1 + rng.index(5);
    for (std::size_t j = 0; j < k; ++j) {
      hull.push_back(random_weight(rng, n));
      cands.push_back({hull.back(), 0.0});
    }
    const Problem p = random_problem(rng, n, 2 + rng.index(4), 1 + rng.index(5));
    const Act f = random_act(rng, p);
    worst = std::max(worst, std::fabs(variational(CostFunction(cands)).evaluate(p, f) -
                                      relative_fair(WeightSet(hull)).evaluate(p, f)));
  }
  if (worst > 1e-12) r.fail("zero-penalty gap " + fmt(worst));
  if (r.pass) r.detail = "ten cost functions clean; zero-penalty gap " + fmt(worst);
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac10() {
  Outcome r;
  const auto base = std::filesystem::temp_directory_path() / "fairagg_acceptance_gallery";
  std::filesystem::remove_all(base);
  std::ostringstream log;
  const auto first = write_gallery((base / "a").string(), GalleryOptions{}, log);
  const auto second = write_gallery((base / "b").string(), GalleryOptions{}, log);
  if (first != second) r.fail("file lists differ");
  for (const auto& name : first) {
    if (slurp(base / "a" / name) != slurp(base / "b" / name)) r.fail(name + " differs");
    const auto frozen = std::filesystem::path(FAIRAGG_FIXTURE_DIR) / "gallery" / name;
    if (slurp(base / "a" / name) != slurp(frozen)) r.fail(name + " differs from the fixture");
  }
  std::filesystem::remove_all(base);
  if (r.pass) r.detail = std::to_string(first.size()) + " files identical across runs";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double budget_s;  // 0 when no time limit applies
  };
  const std::vector<Criterion> all{{1, ac1, 10.0}, {2, ac2, 0.0}, {3, ac3, 120.0},
                                   {4, ac4, 0.0},  {5, ac5, 0.0}, {6, ac6, 60.0},
                                   {7, ac7, 0.0},  {8, ac8, 0.0}, {9, ac9, 0.0},
                                   {10, ac10, 0.0}};
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s > c.budget_s) o.fail("took " + fmt(s) + " s, limit " + fmt(c.budget_s));
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2d %s  %.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", s,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
