#include "fairagg/axiom_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <utility>

#include "fairagg/acts_mixing.hpp"
#include "fairagg/errors.hpp"
#include "fairagg/parallel.hpp"
#include "fairagg/random.hpp"
#include "fairagg/tolerances.hpp"

namespace fairagg {

namespace {

using Vec = std::vector<double>;

constexpr std::size_t kSequenceFirst = 2;
constexpr std::size_t kSequenceLast = 64;
constexpr std::size_t kMinJumpSegments = 100;  // scan at least this many segments
constexpr std::size_t kJumpGrid = 64;
constexpr std::size_t kJumpBisections = 50;
constexpr double kJumpThreshold = 1e-6;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s + ")";
}

std::vector<std::string> labels(const char* stem, std::size_t count) {
  std::vector<std::string> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = stem + std::to_string(k);
  return out;
}

Belief random_belief(Rng& rng, std::size_t cells) {
  Belief b(cells);
  for (auto& v : b) v = rng.uniform(0.01, 1.0);
  const double total = std::accumulate(b.begin(), b.end(), 0.0);
  for (auto& v : b) v /= total;
  return b;
}

ValueFunction random_values(Rng& rng, std::size_t outcomes) {
  ValueFunction v(outcomes);
  do {
    for (auto& x : v) x = rng.uniform(-5.0, 5.0);
  } while (*std::max_element(v.begin(), v.end()) == *std::min_element(v.begin(), v.end()));
  return v;
}

Act random_act(Rng& rng, const Problem& p) {
  std::vector<std::size_t> out(p.num_cells());
  for (auto& o : out) o = rng.index(p.num_outcomes());
  return Act(std::move(out));
}

std::pair<std::size_t, std::size_t> distinct_pair(Rng& rng, std::size_t count) {
  const std::size_t x = rng.index(count);
  std::size_t y = rng.index(count - 1);
  if (y >= x) ++y;
  return {x, y};
}

bool common_values(const Problem& p) {
  for (std::size_t i = 1; i < p.num_individuals(); ++i) {
    if (p.normalized(i) != p.normalized(0)) return false;
  }
  return true;
}

std::string ord(Ordering o) { return std::string(ordering_name(o)); }

// Two-outcome problem where individual i's values are {0, 1} and act k puts
// the best outcome on event k, so that its profile is q[k].
struct ProbeActs {
  Problem problem;
  std::vector<Act> acts;
};

ProbeActs probe_pair(const std::vector<Vec>& q, std::vector<ValueFunction> values = {},
                     std::vector<std::string> outcomes = {"worst", "best"}) {
  const std::size_t n = q.front().size();
  if (values.empty()) values.assign(n, ValueFunction{0.0, 1.0});
  auto ev = problem_with_events(std::move(outcomes), std::move(values), q);
  const std::size_t best = ev.problem.outcome_index("best");
  const std::size_t worst = ev.problem.outcome_index("worst");
  std::vector<Act> acts;
  for (const auto& e : ev.events) acts.push_back(binary_act(ev.problem, best, e, worst));
  return ProbeActs{std::move(ev.problem), std::move(acts)};
}

// ---------------------------------------------------------------------------
// Judges

std::optional<std::string> judge_pareto(const AggregationRule& rule, const Witness& w,
                                        bool strong) {
  const Problem& p = w.problems.at(0);
  const Act& f = w.acts.at(0);
  const Act& g = w.acts.at(1);
  const Vec u = normalized_profile(p, f);
  const Vec v = normalized_profile(p, g);
  const Ordering o = rule.compare(p, f, g);
  // Checks "a over b" with a = first act when first_is_a.
  auto check = [&](const Vec& a, const Vec& b, bool first_is_a) -> std::optional<std::string> {
    bool weak = true, all_strict = true, some_strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i] >= b[i])) weak = false;
      const bool s = a[i] > b[i] + kDerivedTolerance;
      all_strict = all_strict && s;
      some_strict = some_strict || s;
    }
    if (!weak) return std::nullopt;
    const Ordering want_strict = first_is_a ? Ordering::kFirstStrict : Ordering::kSecondStrict;
    const Ordering forbidden = reversed(want_strict);
    const std::string who = first_is_a ? "f" : "g";
    const bool need_strict = strong ? some_strict : all_strict;
    if (need_strict && o != want_strict) {
      return std::string(strong ? "everybody weakly and someone strictly"
                                : "everybody strictly") +
             " prefers " + who + " (" + fmt(a) + " vs " + fmt(b) + ") but the rule says " + ord(o);
    }
    if (o == forbidden) {
      return "everybody weakly prefers " + who + " (" + fmt(a) + " vs " + fmt(b) +
             ") but the rule says " + ord(o);
    }
    return std::nullopt;
  };
  if (auto r = check(u, v, true)) return r;
  return check(v, u, false);
}

double psi_raw(const AggregationRule& rule, const Vec& u) { return psi_of_rule(rule, u); }

std::optional<std::string> judge_continuity(const AggregationRule& rule, const Witness& w) {
  if (!w.scalars.empty()) {
    if (rule.comparator_only()) return std::nullopt;
    const std::size_t n = w.scalars.size() / 2;
    const Vec lo(w.scalars.begin(), w.scalars.begin() + n);
    const Vec hi(w.scalars.begin() + n, w.scalars.end());
    const double a = psi_raw(rule, lo);
    const double b = psi_raw(rule, hi);
    if (std::abs(b - a) > kJumpThreshold) {
      return "psi jumps from " + fmt(a) + " to " + fmt(b) + " between " + fmt(lo) + " and " +
             fmt(hi);
    }
    return std::nullopt;
  }
  const Problem& p = w.problems.at(0);
  const std::size_t m = w.acts.size();
  if (m < 3) return std::nullopt;
  const Act& g = w.acts[m - 2];
  const Act& f = w.acts[m - 1];
  const Ordering limit = rule.compare(p, f, g);
  if (limit == Ordering::kIndifferent) return std::nullopt;
  // The sequence stays on one side of g while the limit lands strictly on the
  // other side.
  const Ordering side = reversed(limit);
  for (std::size_t k = 0; k + 2 < m; ++k) {
    const Ordering o = rule.compare(p, w.acts[k], g);
    if (o != side && o != Ordering::kIndifferent) return std::nullopt;
  }
  return "every act of the sequence is weakly " +
         std::string(side == Ordering::kSecondStrict ? "below" : "above") +
         " the reference act, yet the limit " + fmt(normalized_profile(p, f)) + " is strictly " +
         (limit == Ordering::kFirstStrict ? "above" : "below") + " it";
}

bool is_inessential_expansion(const Problem& p, const Problem& q) {
  if (q.num_outcomes() <= p.num_outcomes() || q.cells() != p.cells() ||
      q.num_individuals() != p.num_individuals() ||
      q.reference_event() != p.reference_event()) {
    return false;
  }
  for (std::size_t k = 0; k < p.num_outcomes(); ++k) {
    if (q.outcomes()[k] != p.outcomes()[k]) return false;
  }
  for (std::size_t i = 0; i < p.num_individuals(); ++i) {
    const auto& a = p.individual(i);
    const auto& b = q.individual(i);
    if (a.belief != b.belief) return false;
    const double lo = *std::min_element(a.values.begin(), a.values.end());
    const double hi = *std::max_element(a.values.begin(), a.values.end());
    for (std::size_t k = 0; k < q.num_outcomes(); ++k) {
      if (k < p.num_outcomes() ? b.values[k] != a.values[k]
                               : !(b.values[k] >= lo && b.values[k] <= hi)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::string> judge_iie(const AggregationRule& rule, const Witness& w) {
  const Problem& p = w.problems.at(0);
  const Problem& q = w.problems.at(1);
  if (!is_inessential_expansion(p, q)) return std::nullopt;
  const Ordering a = rule.compare(p, w.acts.at(0), w.acts.at(1));
  const Ordering b = rule.compare(q, w.acts.at(0), w.acts.at(1));
  if (a == b) return std::nullopt;
  return "f vs g is " + ord(a) + " with " + std::to_string(p.num_outcomes()) +
         " outcomes but " + ord(b) + " after adding an inessential outcome";
}

std::optional<std::string> judge_mixing(const AggregationRule& rule, const Problem& p,
                                        std::size_t x, std::size_t y,
                                        const std::vector<std::size_t>& event) {
  const Act mix = binary_act(p, x, event, y);
  const Act cx = Act::constant(p, x);
  const Act cy = Act::constant(p, y);
  const Ordering ox = rule.compare(p, cx, mix);
  const Ordering oy = rule.compare(p, cy, mix);
  if (ox != Ordering::kFirstStrict || oy != Ordering::kFirstStrict) return std::nullopt;
  return "the mixture " + fmt(normalized_profile(p, mix)) + " is strictly worse than both " +
         fmt(normalized_profile(p, cx)) + " and " + fmt(normalized_profile(p, cy));
}

std::optional<std::string> judge_wpm(const AggregationRule& rule, const Witness& w) {
  const auto& p = w.problems.at(0);
  const std::size_t x = w.outcomes.at(0), y = w.outcomes.at(1);
  auto ct = coin_toss_event(p);
  return judge_mixing(rule, ct.map.refined, x, y, ct.event);
}

std::optional<std::string> judge_spm(const AggregationRule& rule, const Witness& w) {
  const auto& p = w.problems.at(0);
  if (w.indices.empty()) return std::nullopt;
  for (std::size_t c : w.indices) {
    if (c >= p.num_cells()) return std::nullopt;
  }
  return judge_mixing(rule, p, w.outcomes.at(0), w.outcomes.at(1), w.indices);
}

std::optional<std::string> judge_belief_irrelevance(const AggregationRule& rule,
                                                    const Witness& w) {
  const Problem& p = w.problems.at(0);
  const Problem& q = w.problems.at(1);
  if (p.outcomes() != q.outcomes() || p.num_individuals() != q.num_individuals()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < p.num_individuals(); ++i) {
    if (p.normalized(i) != q.normalized(i)) return std::nullopt;
  }
  const std::size_t x = w.outcomes.at(0), y = w.outcomes.at(1);
  const Ordering a = rule.compare(p, Act::constant(p, x), Act::constant(p, y));
  const Ordering b = rule.compare(q, Act::constant(q, x), Act::constant(q, y));
  if (a == b) return std::nullopt;
  return "constant acts " + p.outcomes()[x] + " vs " + p.outcomes()[y] + " are " + ord(a) +
         " under one belief profile and " + ord(b) + " under another";
}

std::optional<std::string> judge_ci(const AggregationRule& rule, const Witness& w,
                                    bool restricted) {
  const Problem& p = w.problems.at(0);
  if (restricted && !common_values(p)) return std::nullopt;
  const Act& f = w.acts.at(0);
  const Act& g = w.acts.at(1);
  const std::size_t x = w.outcomes.at(0);
  const double alpha = w.scalars.at(0);
  const RefinementMap split = refine_every_cell(p, alpha);
  const Act fx = mix_on_split(split, f, x);
  const Act gx = mix_on_split(split, g, x);
  const Ordering before = rule.compare(p, f, g);
  const Ordering after = rule.compare(split.refined, fx, gx);
  if (before == after) return std::nullopt;
  return "f vs g is " + ord(before) + " (" + fmt(normalized_profile(p, f)) + " vs " +
         fmt(normalized_profile(p, g)) + ") but " + ord(after) + " after mixing with " +
         p.outcomes()[x] + " at alpha " + fmt(alpha) + " (" +
         fmt(normalized_profile(split.refined, fx)) + " vs " +
         fmt(normalized_profile(split.refined, gx)) + ")";
}

std::optional<std::string> judge_wrci(const AggregationRule& rule, const Witness& w) {
  const Problem& p = w.problems.at(0);
  if (!common_values(p)) return std::nullopt;
  const Act& f = w.acts.at(0);
  const Act& g = w.acts.at(1);
  const std::size_t x = w.outcomes.at(0), y = w.outcomes.at(1);
  const double alpha = w.scalars.at(0);
  const RefinementMap split = refine_every_cell(p, alpha);
  const Ordering ox =
      rule.compare(split.refined, mix_on_split(split, f, x), mix_on_split(split, g, x));
  const Ordering oy =
      rule.compare(split.refined, mix_on_split(split, f, y), mix_on_split(split, g, y));
  if (ox == oy) return std::nullopt;
  return "mixed with " + p.outcomes()[x] + " the pair is " + ord(ox) + ", mixed with " +
         p.outcomes()[y] + " it is " + ord(oy) + " (alpha " + fmt(alpha) + ")";
}

std::optional<std::string> judge_anonymity(const AggregationRule& rule, const Witness& w) {
  const Problem& p = w.problems.at(0);
  const Problem q = permute_individuals(p, w.indices);
  const Ordering a = rule.compare(p, w.acts.at(0), w.acts.at(1));
  const Ordering b = rule.compare(q, w.acts.at(0), w.acts.at(1));
  if (a == b) return std::nullopt;
  return "f vs g is " + ord(a) + " but " + ord(b) + " after relabeling the individuals";
}

std::optional<std::string> judge_separability(const AggregationRule& rule, const Witness& w) {
  const Problem& p = w.problems.at(0);
  const Problem& q = w.problems.at(1);
  const Act& f = w.acts.at(0);
  const Act& g = w.acts.at(1);
  const std::size_t n = p.num_individuals();
  if (q.num_individuals() != n || q.outcomes() != p.outcomes() || q.cells() != p.cells()) {
    return std::nullopt;
  }
  std::vector<bool> inside(n, false);
  for (std::size_t i : w.indices) {
    if (i >= n) return std::nullopt;
    inside[i] = true;
  }
  const Vec pf = normalized_profile(p, f), pg = normalized_profile(p, g);
  const Vec qf = normalized_profile(q, f), qg = normalized_profile(q, g);
  for (std::size_t i = 0; i < n; ++i) {
    if (inside[i]) {
      if (p.individual(i).values != q.individual(i).values ||
          p.individual(i).belief != q.individual(i).belief) {
        return std::nullopt;
      }
    } else if (pf[i] != pg[i] || qf[i] != qg[i]) {
      return std::nullopt;
    }
  }
  const Ordering a = rule.compare(p, f, g);
  const Ordering b = rule.compare(q, f, g);
  if (a == b) return std::nullopt;
  return "f vs g is " + ord(a) + " at " + fmt(pf) + " vs " + fmt(pg) + " but " + ord(b) +
         " at " + fmt(qf) + " vs " + fmt(qg) + "; only indifferent individuals changed";
}

std::optional<std::string> judge_saa(const AggregationRule& rule, const Witness& w) {
  const Problem& p = w.problems.at(0);
  if (!common_values(p)) return std::nullopt;
  const Act& f = w.acts.at(0);
  const Act cx = Act::constant(p, w.outcomes.at(0));
  const Vec uf = normalized_profile(p, f);
  const Vec ux = normalized_profile(p, cx);
  bool someone = false;
  for (std::size_t i = 0; i < uf.size(); ++i) someone = someone || ux[i] > uf[i] + kDerivedTolerance;
  if (!someone) return std::nullopt;
  const Ordering o = rule.compare(p, cx, f);
  if (o == Ordering::kFirstStrict) return std::nullopt;
  return "someone strictly prefers the sure outcome " + fmt(ux) + " to " + fmt(uf) +
         " but the rule says " + ord(o);
}

// ---------------------------------------------------------------------------
// Samplers

GeneratorConfig with_values(GeneratorConfig c, ValueMode m) {
  c.values = m;
  return c;
}

Witness sample_pareto(const GeneratorConfig& c, Rng& rng, bool strong) {
  const std::size_t mode = rng.index(3);
  if (mode == 0) {
    Problem p = gen_problem(c, rng.next());
    Act f = random_act(rng, p);
    Act g = random_act(rng, p);
    return Witness{{std::move(p)}, {std::move(f), std::move(g)}, {}, {}, {}};
  }
  // Designed pairs: u dominates v, with equal coordinates in weak mode.
  const bool weak = strong || mode == 2;
  Vec u(c.n), v(c.n);
  bool any_gap = false;
  for (std::size_t i = 0; i < c.n; ++i) {
    v[i] = rng.uniform(0.0, 0.95);
    if (weak && rng.bernoulli(0.5)) {
      u[i] = v[i];
    } else {
      u[i] = std::min(1.0, v[i] + rng.uniform(1e-3, 1.0 - v[i]));
      any_gap = true;
    }
  }
  if (!any_gap) u[0] = std::min(1.0, v[0] + 0.05);
  if (rng.bernoulli(0.5)) std::swap(u, v);
  auto probe = probe_pair({u, v});
  return Witness{{std::move(probe.problem)}, std::move(probe.acts), {}, {}, {}};
}

Witness sample_iie(const GeneratorConfig& c, Rng& rng) {
  Problem p = gen_problem(c, rng.next());
  Act f = random_act(rng, p);
  Act g = random_act(rng, p);
  Problem q = gen_inessential_expansion(p, rng.next());
  return Witness{{std::move(p), std::move(q)}, {std::move(f), std::move(g)}, {}, {}, {}};
}

Witness sample_wpm(const GeneratorConfig& c, Rng& rng) {
  Problem p = gen_problem(c, rng.next());
  auto [x, y] = distinct_pair(rng, p.num_outcomes());
  return Witness{{std::move(p)}, {}, {x, y}, {}, {}};
}

Witness sample_spm(const GeneratorConfig& c, Rng& rng) {
  Problem base = gen_problem(c, rng.next());
  Vec q(c.n);
  for (auto& v : q) v = rng.uniform(0.02, 0.98);
  std::vector<ValueFunction> values;
  for (const auto& ind : base.individuals()) values.push_back(ind.values);
  auto ev = problem_with_event(base.outcomes(), std::move(values), q);
  auto [x, y] = distinct_pair(rng, ev.problem.num_outcomes());
  return Witness{{std::move(ev.problem)}, {}, {x, y}, {}, ev.event};
}

Witness sample_belief_irrelevance(const GeneratorConfig& c, Rng& rng) {
  Problem p = gen_problem(c, rng.next());
  std::vector<Individual> people = p.individuals();
  const Belief shared = random_belief(rng, p.num_cells());
  for (auto& ind : people) {
    ind.belief = c.beliefs == BeliefMode::kCommonBeliefs ? shared
                                                          : random_belief(rng, p.num_cells());
  }
  Problem q(p.outcomes(), p.cells(), std::move(people), p.reference_event());
  auto [x, y] = distinct_pair(rng, p.num_outcomes());
  return Witness{{std::move(p), std::move(q)}, {}, {x, y}, {}, {}};
}

Witness sample_ci(const GeneratorConfig& c, Rng& rng, bool restricted, bool two_outcomes) {
  Problem p = gen_problem(restricted ? with_values(c, ValueMode::kCommonValues) : c, rng.next());
  Act f = random_act(rng, p);
  Act g = random_act(rng, p);
  std::vector<std::size_t> xs;
  if (two_outcomes) {
    auto [x, y] = distinct_pair(rng, p.num_outcomes());
    xs = {x, y};
  } else {
    xs = {rng.index(p.num_outcomes())};
  }
  const double alpha = rng.uniform(0.05, 0.95);
  return Witness{{std::move(p)}, {std::move(f), std::move(g)}, std::move(xs), {alpha}, {}};
}

Witness sample_anonymity(const GeneratorConfig& c, Rng& rng) {
  Problem p = gen_problem(c, rng.next());
  Act f = random_act(rng, p);
  Act g = random_act(rng, p);
  std::vector<std::size_t> perm;
  do {
    perm = rng.permutation(c.n);
  } while (std::is_sorted(perm.begin(), perm.end()));
  return Witness{{std::move(p)}, {std::move(f), std::move(g)}, {}, {}, std::move(perm)};
}

Witness sample_separability(const GeneratorConfig& c, Rng& rng) {
  const std::size_t size = 1 + rng.index(c.n - 1);
  std::vector<std::size_t> s = rng.subset(c.n, size);
  std::vector<bool> inside(c.n, false);
  for (std::size_t i : s) inside[i] = true;
  Vec u(c.n), v(c.n), u2(c.n), v2(c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    if (inside[i]) {
      u[i] = u2[i] = rng.uniform();
      v[i] = v2[i] = rng.uniform();
    } else {
      u[i] = v[i] = rng.uniform();
      u2[i] = v2[i] = rng.uniform();
    }
  }
  auto a = probe_pair({u, v});
  auto b = probe_pair({u2, v2});
  return Witness{{std::move(a.problem), std::move(b.problem)}, std::move(a.acts), {}, {},
                 std::move(s)};
}

Witness sample_saa(const GeneratorConfig& c, Rng& rng) {
  if (rng.bernoulli(0.5)) {
    Problem p = gen_problem(with_values(c, ValueMode::kCommonValues), rng.next());
    Act f = random_act(rng, p);
    const std::size_t x = rng.index(p.num_outcomes());
    return Witness{{std::move(p)}, {std::move(f)}, {x}, {}, {}};
  }
  // One individual slightly below the sure level, the others well above.
  const double level = rng.uniform(0.05, 0.95);
  const double gap = level * std::pow(10.0, -rng.uniform(0.0, 6.0));
  const std::size_t k = rng.index(c.n);
  Vec q(c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    q[i] = i == k ? level - gap : (rng.bernoulli(0.5) ? 1.0 : rng.uniform(level, 1.0));
  }
  std::vector<ValueFunction> values(c.n, ValueFunction{0.0, level, 1.0});
  auto ev = problem_with_event({"worst", "sure", "best"}, std::move(values), q);
  Act f = binary_act(ev.problem, 2, ev.event, 0);
  return Witness{{std::move(ev.problem)}, {std::move(f)}, {1}, {}, {}};
}

std::uint64_t axiom_stream(Axiom a) { return 1000 + static_cast<std::uint64_t>(a); }

// ---------------------------------------------------------------------------
// Continuity scan for score-based rules.

struct SegmentScan {
  Vec lo, hi;
  double increment = 0.0;
};

// Largest increment of psi along one random segment: coarse grid first, then
// repeated halving of the steepest interval.
SegmentScan scan_segment(const AggregationRule& rule, std::size_t n, std::uint64_t seed,
                         std::size_t segment) {
  Rng rng(derive_seed(seed, axiom_stream(Axiom::kContinuity), segment));
  Vec a(n), b(n);
  for (auto& v : a) v = rng.uniform();
  for (auto& v : b) v = rng.uniform();
  auto point = [&](double t) {
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(a[i] + t * (b[i] - a[i]), 0.0, 1.0);
    return x;
  };
  double best = -1.0, lo = 0.0, hi = 0.0;
  double prev = psi_raw(rule, a);
  for (std::size_t k = 1; k <= kJumpGrid; ++k) {
    const double t = static_cast<double>(k) / kJumpGrid;
    const double cur = psi_raw(rule, point(t));
    if (std::abs(cur - prev) > best) {
      best = std::abs(cur - prev);
      lo = static_cast<double>(k - 1) / kJumpGrid;
      hi = t;
    }
    prev = cur;
  }
  double flo = psi_raw(rule, point(lo)), fhi = psi_raw(rule, point(hi));
  for (std::size_t k = 0; k < kJumpBisections; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = psi_raw(rule, point(mid));
    if (std::abs(fmid - flo) >= std::abs(fhi - fmid)) {
      hi = mid;
      fhi = fmid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return SegmentScan{point(lo), point(hi), std::abs(fhi - flo)};
}

std::optional<Witness> jump_scan(const AggregationRule& rule, std::size_t n, std::uint64_t seed,
                                 std::size_t segments, std::size_t& segments_done) {
  auto found = first_index_where(segments, [&](std::size_t s) {
    return scan_segment(rule, n, seed, s).increment > kJumpThreshold;
  });
  segments_done = found ? *found + 1 : segments;
  if (!found) return std::nullopt;
  SegmentScan scan = scan_segment(rule, n, seed, *found);
  Witness w;
  w.scalars = std::move(scan.lo);
  w.scalars.insert(w.scalars.end(), scan.hi.begin(), scan.hi.end());
  return w;
}

}  // namespace

std::string_view value_mode_name(ValueMode m) {
  return m == ValueMode::kIid ? "iid" : "common_values";
}

std::string_view belief_mode_name(BeliefMode m) {
  switch (m) {
    case BeliefMode::kIid: return "iid";
    case BeliefMode::kCommonBeliefs: return "common_beliefs";
    case BeliefMode::kDesignedEvent: return "designed_event";
  }
  return "?";
}

std::optional<ValueMode> value_mode_from_name(std::string_view name) {
  for (auto m : {ValueMode::kIid, ValueMode::kCommonValues}) {
    if (value_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<BeliefMode> belief_mode_from_name(std::string_view name) {
  for (auto m : {BeliefMode::kIid, BeliefMode::kCommonBeliefs, BeliefMode::kDesignedEvent}) {
    if (belief_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

void validate_config(const GeneratorConfig& c) {
  if (c.n < 2) throw Error(ErrorCode::kInvalidConfig, "need n >= 2");
  if (c.outcomes < 2) throw Error(ErrorCode::kInvalidConfig, "need at least 2 outcomes");
  if (c.cells < 1) throw Error(ErrorCode::kInvalidConfig, "need at least 1 cell");
  if (c.cells > 4096) throw Error(ErrorCode::kInvalidConfig, "at most 4096 cells");
  if (c.trials < 1) throw Error(ErrorCode::kInvalidConfig, "need trials >= 1");
}

Problem gen_problem(const GeneratorConfig& c, std::uint64_t seed) {
  validate_config(c);
  Rng rng(seed);
  std::vector<ValueFunction> values;
  if (c.values == ValueMode::kCommonValues) {
    values.assign(c.n, random_values(rng, c.outcomes));
  } else {
    for (std::size_t i = 0; i < c.n; ++i) values.push_back(random_values(rng, c.outcomes));
  }
  if (c.beliefs == BeliefMode::kDesignedEvent) {
    std::size_t k = 1;
    while ((std::size_t{2} << k) <= c.cells) ++k;
    std::vector<Vec> q(k, Vec(c.n));
    for (auto& row : q) {
      for (auto& v : row) v = rng.uniform(0.05, 0.95);
    }
    return problem_with_events(labels("x", c.outcomes), std::move(values), q).problem;
  }
  std::vector<Individual> people;
  const Belief shared = random_belief(rng, c.cells);
  for (std::size_t i = 0; i < c.n; ++i) {
    people.push_back({std::move(values[i]), c.beliefs == BeliefMode::kCommonBeliefs
                                                ? shared
                                                : random_belief(rng, c.cells)});
  }
  return Problem(labels("x", c.outcomes), labels("s", c.cells), std::move(people));
}

Problem expand_with_outcome(const Problem& problem, const std::string& label,
                            const std::vector<double>& values) {
  if (values.size() != problem.num_individuals()) {
    throw Error(ErrorCode::kDimensionMismatch, "one value per individual expected");
  }
  if (label.empty() || problem.has_outcome(label)) {
    throw Error(ErrorCode::kInvalidProblem, "outcome label '" + label + "' is taken");
  }
  std::vector<Individual> people = problem.individuals();
  for (std::size_t i = 0; i < people.size(); ++i) {
    const auto& v = people[i].values;
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    if (!(values[i] >= lo && values[i] <= hi)) {
      throw Error(ErrorCode::kNotInessential, "value " + fmt(values[i]) + " for individual " +
                                                  std::to_string(i) + " leaves [" + fmt(lo) +
                                                  ", " + fmt(hi) + "]");
    }
    people[i].values.push_back(values[i]);
  }
  std::vector<std::string> outcomes = problem.outcomes();
  outcomes.push_back(label);
  return Problem(std::move(outcomes), problem.cells(), std::move(people),
                 problem.reference_event());
}

Problem gen_inessential_expansion(const Problem& problem, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> values;
  for (const auto& ind : problem.individuals()) {
    const auto& v = ind.values;
    // Now and then reuse an existing level, ties with the extremes included.
    values.push_back(rng.bernoulli(0.25) ? v[rng.index(v.size())]
                                         : rng.uniform(*std::min_element(v.begin(), v.end()),
                                                       *std::max_element(v.begin(), v.end())));
  }
  std::string label = "added";
  while (problem.has_outcome(label)) label += "'";
  return expand_with_outcome(problem, label, values);
}

Problem permute_individuals(const Problem& problem, const std::vector<std::size_t>& perm) {
  const std::size_t n = problem.num_individuals();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != n || sorted[i] != i) {
      throw Error(ErrorCode::kInvalidVector, "not a permutation of the individuals");
    }
  }
  std::vector<Individual> people;
  for (std::size_t i = 0; i < n; ++i) people.push_back(problem.individual(perm[i]));
  return Problem(problem.outcomes(), problem.cells(), std::move(people),
                 problem.reference_event());
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kPareto: return "pareto";
    case Axiom::kStrongPareto: return "strong_pareto";
    case Axiom::kContinuity: return "continuity";
    case Axiom::kIie: return "iie";
    case Axiom::kWpm: return "wpm";
    case Axiom::kSpm: return "spm";
    case Axiom::kBeliefIrrelevance: return "belief_irrelevance";
    case Axiom::kRci: return "rci";
    case Axiom::kCi: return "ci";
    case Axiom::kWrci: return "wrci";
    case Axiom::kAnonymity: return "anonymity";
    case Axiom::kSeparability: return "separability";
    case Axiom::kSaa: return "saa";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom a : all_axioms()) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all{
      Axiom::kPareto, Axiom::kStrongPareto, Axiom::kContinuity,  Axiom::kIie,
      Axiom::kWpm,    Axiom::kSpm,          Axiom::kBeliefIrrelevance, Axiom::kRci,
      Axiom::kCi,     Axiom::kWrci,         Axiom::kAnonymity,   Axiom::kSeparability,
      Axiom::kSaa};
  return all;
}

const std::vector<Axiom>& characterization_axioms() {
  static const std::vector<Axiom> six{Axiom::kPareto, Axiom::kContinuity,
                                      Axiom::kIie,    Axiom::kWpm,
                                      Axiom::kBeliefIrrelevance, Axiom::kRci};
  return six;
}

const std::vector<Axiom>& sampled_axioms() {
  static const std::vector<Axiom> sampled = [] {
    std::vector<Axiom> out;
    for (Axiom a : all_axioms()) {
      if (a != Axiom::kContinuity) out.push_back(a);
    }
    return out;
  }();
  return sampled;
}

std::optional<std::string> find_violation(Axiom axiom, const AggregationRule& rule,
                                          const Witness& w) {
  switch (axiom) {
    case Axiom::kPareto: return judge_pareto(rule, w, false);
    case Axiom::kStrongPareto: return judge_pareto(rule, w, true);
    case Axiom::kContinuity: return judge_continuity(rule, w);
    case Axiom::kIie: return judge_iie(rule, w);
    case Axiom::kWpm: return judge_wpm(rule, w);
    case Axiom::kSpm: return judge_spm(rule, w);
    case Axiom::kBeliefIrrelevance: return judge_belief_irrelevance(rule, w);
    case Axiom::kRci: return judge_ci(rule, w, true);
    case Axiom::kCi: return judge_ci(rule, w, false);
    case Axiom::kWrci: return judge_wrci(rule, w);
    case Axiom::kAnonymity: return judge_anonymity(rule, w);
    case Axiom::kSeparability: return judge_separability(rule, w);
    case Axiom::kSaa: return judge_saa(rule, w);
  }
  return std::nullopt;
}

Witness continuity_sequence(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidConfig, "need n >= 2");
  // Individual 0 spreads its belief over nested pieces K_t of the region it
  // cares about; the others only see the two halves B1, B2.
  std::vector<std::string> cells;
  Belief first, others;
  for (std::size_t t = kSequenceFirst + 1; t <= kSequenceLast; ++t) {
    cells.push_back("k" + std::to_string(t));
    first.push_back(1.0 / static_cast<double>(t - 1) - 1.0 / static_cast<double>(t));
    others.push_back(0.0);
  }
  cells.insert(cells.end(), {"k_lim", "rest", "b1", "b2"});
  const double tail = 1.0 / static_cast<double>(kSequenceLast);
  first.insert(first.end(), {tail, 0.5, 0.0, 0.0});
  others.insert(others.end(), {0.0, 0.0, 0.5, 0.5});
  std::vector<Individual> people{{ValueFunction{0.0, 1.0}, first}};
  for (std::size_t i = 1; i < n; ++i) people.push_back({ValueFunction{0.0, 1.0}, others});
  Problem p({"worst", "best"}, cells, std::move(people));

  const std::size_t pieces = kSequenceLast - kSequenceFirst;  // k3 .. k64
  const std::size_t rest = pieces + 1, b1 = pieces + 2, b2 = pieces + 3;
  std::vector<Act> acts;
  for (std::size_t t = kSequenceFirst; t <= kSequenceLast; ++t) {
    std::vector<std::size_t> out(p.num_cells(), 0);
    for (std::size_t k = 0; k < t - kSequenceFirst; ++k) out[k] = 1;
    out[b1] = out[b2] = 1;
    acts.emplace_back(std::move(out));
  }
  std::vector<std::size_t> g(p.num_cells(), 0);
  g[rest] = g[b1] = 1;
  acts.emplace_back(std::move(g));
  std::vector<std::size_t> f(p.num_cells(), 1);
  f[rest] = 0;
  acts.emplace_back(std::move(f));
  return Witness{{std::move(p)}, std::move(acts), {}, {}, {}};
}

std::vector<Witness> golden_witnesses(Axiom axiom, std::size_t n) {
  std::vector<Witness> out;
  if (n != 2) return out;
  switch (axiom) {
    case Axiom::kPareto: {
      // Best for everybody against worst for everybody.
      Problem p({"worst", "best"}, {"s"}, {{{0.0, 1.0}, {1.0}}, {{0.0, 1.0}, {1.0}}});
      out.push_back({{p}, {Act::constant(p, 1), Act::constant(p, 0)}, {}, {}, {}});
      break;
    }
    case Axiom::kStrongPareto: {
      auto probe = probe_pair({{0.5, 1.0}, {0.5, 0.5}});
      out.push_back({{probe.problem}, probe.acts, {}, {}, {}});
      break;
    }
    case Axiom::kContinuity:
      out.push_back(continuity_sequence(2));
      break;
    case Axiom::kIie: {
      // Three outcomes: the mean prefers a, the minimum prefers c.
      Problem p({"a", "b", "c"}, {"s"},
                {{{1.0, 0.0, 0.4}, {1.0}}, {{0.0, 1.0, 0.4}, {1.0}}});
      Problem q = expand_with_outcome(p, "d", {0.4, 0.4});
      out.push_back({{p, q}, {Act::constant(p, 0), Act::constant(p, 2)}, {}, {}, {}});
      break;
    }
    case Axiom::kWpm: {
      Problem p({"x", "y"}, {"s"}, {{{1.0, 0.0}, {1.0}}, {{0.0, 1.0}, {1.0}}});
      out.push_back({{p}, {}, {0, 1}, {}, {}});
      break;
    }
    case Axiom::kSpm: {
      auto ev = problem_with_event({"x", "y"}, {{1.0, 0.0}, {0.0, 1.0}}, {0.1, 0.9});
      out.push_back({{ev.problem}, {}, {0, 1}, {}, ev.event});
      break;
    }
    case Axiom::kBeliefIrrelevance: {
      Problem p({"a", "b"}, {"e0", "e1"},
                {{{0.0, 1.0}, {0.9, 0.1}}, {{1.0, 0.0}, {0.1, 0.9}}});
      Problem q({"a", "b"}, {"e0", "e1"},
                {{{0.0, 1.0}, {0.1, 0.9}}, {{1.0, 0.0}, {0.9, 0.1}}});
      out.push_back({{p, q}, {}, {0, 1}, {}, {}});
      break;
    }
    case Axiom::kRci: {
      auto probe = probe_pair({{0.5, 0.5}, {0.9, 0.2}});
      out.push_back({{probe.problem}, probe.acts, {1}, {0.5}, {}});
      break;
    }
    case Axiom::kCi: {
      // The sure outcome is best for individual 0 and worst for individual 1.
      auto probe = probe_pair({{0.4, 0.4}, {0.3, 1.0}}, {{0.0, 1.0, 1.0}, {0.0, 1.0, 0.0}},
                              {"worst", "best", "x"});
      out.push_back({{probe.problem}, probe.acts, {2}, {0.5}, {}});
      break;
    }
    case Axiom::kWrci: {
      auto probe = probe_pair({{0.5, 0.5}, {0.9, 0.2}});
      out.push_back({{probe.problem}, probe.acts, {0, 1}, {0.5}, {}});
      break;
    }
    case Axiom::kAnonymity: {
      Problem p({"a", "b"}, {"s"}, {{{1.0, 0.0}, {1.0}}, {{0.0, 1.0}, {1.0}}});
      out.push_back({{p}, {Act::constant(p, 0), Act::constant(p, 1)}, {}, {}, {1, 0}});
      break;
    }
    case Axiom::kSeparability: {
      // Individual 1 is indifferent; its level moves from above to below.
      auto a = probe_pair({{0.3, 0.9}, {0.5, 0.9}});
      auto b = probe_pair({{0.3, 0.1}, {0.5, 0.1}});
      out.push_back({{a.problem, b.problem}, a.acts, {}, {}, {0}});
      break;
    }
    case Axiom::kSaa: {
      auto ev = problem_with_event({"worst", "sure", "best"},
                                   {{0.0, 0.5, 1.0}, {0.0, 0.5, 1.0}}, {0.4, 1.0});
      out.push_back({{ev.problem}, {binary_act(ev.problem, 2, ev.event, 0)}, {1}, {}, {}});
      break;
    }
  }
  return out;
}

Witness sample_witness(Axiom axiom, const GeneratorConfig& config, std::uint64_t trial) {
  validate_config(config);
  Rng rng(derive_seed(config.seed, axiom_stream(axiom), trial));
  switch (axiom) {
    case Axiom::kPareto: return sample_pareto(config, rng, false);
    case Axiom::kStrongPareto: return sample_pareto(config, rng, true);
    case Axiom::kContinuity:
      throw Error(ErrorCode::kInvalidConfig, "continuity has no random trials");
    case Axiom::kIie: return sample_iie(config, rng);
    case Axiom::kWpm: return sample_wpm(config, rng);
    case Axiom::kSpm: return sample_spm(config, rng);
    case Axiom::kBeliefIrrelevance: return sample_belief_irrelevance(config, rng);
    case Axiom::kRci: return sample_ci(config, rng, true, false);
    case Axiom::kCi: return sample_ci(config, rng, false, false);
    case Axiom::kWrci: return sample_ci(config, rng, true, true);
    case Axiom::kAnonymity: return sample_anonymity(config, rng);
    case Axiom::kSeparability: return sample_separability(config, rng);
    case Axiom::kSaa: return sample_saa(config, rng);
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown axiom");
}

AxiomReport check_continuity_witness(const AggregationRule& rule, const GeneratorConfig& config) {
  validate_config(config);
  AxiomReport r;
  r.axiom = Axiom::kContinuity;
  r.rule = rule.label();
  r.config = config;
  if (!rule.accepts(config.n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                rule.label() + " does not accept n = " + std::to_string(config.n));
  }
  Witness seq = continuity_sequence(config.n);
  r.trials = 1;
  if (auto d = find_violation(Axiom::kContinuity, rule, seq)) {
    r.status = VerdictStatus::kViolated;
    r.witness = std::move(seq);
    r.source = "construction";
    r.detail = *d;
    return r;
  }
  if (rule.has_score()) {
    std::size_t segments = 0;
    auto jump = jump_scan(rule, config.n, config.seed,
                          std::max(kMinJumpSegments, config.trials), segments);
    r.trials += segments;
    if (jump) {
      r.status = VerdictStatus::kViolated;
      r.detail = find_violation(Axiom::kContinuity, rule, *jump).value_or("jump");
      r.witness = std::move(jump);
      r.source = "scan";
    }
  }
  return r;
}

AxiomReport check_axiom(const AggregationRule& rule, Axiom axiom, const GeneratorConfig& config) {
  if (axiom == Axiom::kContinuity) return check_continuity_witness(rule, config);
  validate_config(config);
  if (!rule.accepts(config.n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                rule.label() + " does not accept n = " + std::to_string(config.n));
  }
  if (axiom == Axiom::kSeparability && config.n < 2) {
    throw Error(ErrorCode::kInvalidConfig, "separability needs n >= 2");
  }
  const std::vector<Witness> golden =
      config.inject_golden ? golden_witnesses(axiom, config.n) : std::vector<Witness>{};
  const std::size_t total = golden.size() + config.trials;
  auto witness_at = [&](std::size_t k) {
    return k < golden.size() ? golden[k] : sample_witness(axiom, config, k - golden.size());
  };
  auto hit = first_index_where(total, [&](std::size_t k) {
    return find_violation(axiom, rule, witness_at(k)).has_value();
  });

  AxiomReport r;
  r.axiom = axiom;
  r.rule = rule.label();
  r.config = config;
  r.golden = golden.size();
  r.trials = hit ? *hit + 1 : total;
  if (hit) {
    Witness w = witness_at(*hit);
    r.status = VerdictStatus::kViolated;
    r.detail = *find_violation(axiom, rule, w);
    r.witness = std::move(w);
    r.source = *hit < golden.size() ? "golden" : "search";
  }
  return r;
}

AxiomReport check_pareto(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kPareto, c);
}
AxiomReport check_strong_pareto(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kStrongPareto, c);
}
AxiomReport check_iie(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kIie, c);
}
AxiomReport check_wpm(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kWpm, c);
}
AxiomReport check_spm(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kSpm, c);
}
AxiomReport check_belief_irrelevance(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kBeliefIrrelevance, c);
}
AxiomReport check_rci(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kRci, c);
}
AxiomReport check_ci(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kCi, c);
}
AxiomReport check_wrci(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kWrci, c);
}
AxiomReport check_anonymity(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kAnonymity, c);
}
AxiomReport check_separability(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kSeparability, c);
}
AxiomReport check_saa(const AggregationRule& r, const GeneratorConfig& c) {
  return check_axiom(r, Axiom::kSaa, c);
}

VerdictStatus replay(const AggregationRule& rule, const AxiomReport& report) {
  if (!report.witness) return VerdictStatus::kNoViolationFound;
  return find_violation(report.axiom, rule, *report.witness) ? VerdictStatus::kViolated
                                                             : VerdictStatus::kNoViolationFound;
}

std::vector<AxiomMatrixRow> axiom_matrix(const std::vector<AggregationRule>& rules,
                                         const std::vector<Axiom>& axioms,
                                         const GeneratorConfig& config) {
  std::vector<AxiomMatrixRow> rows;
  for (const auto& rule : rules) {
    AxiomMatrixRow row{rule.label(), {}};
    for (Axiom a : axioms) row.reports.push_back(check_axiom(rule, a, config));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fairagg
