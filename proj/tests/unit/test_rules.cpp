#include <doctest.h>

#include <cmath>

#include "fairagg/acts_mixing.hpp"
#include "fairagg/errors.hpp"
#include "fairagg/rules.hpp"
#include "test_support.hpp"

using namespace fairagg;

namespace {

// Any problem works for profile-only rules; parity needs |X| chosen by caller.
Problem dummy(std::size_t n, std::size_t outcomes = 2) {
  std::vector<Individual> people(n, Individual{ValueFunction(outcomes, 0.0), {1.0}});
  for (auto& p : people) p.values[0] = 1.0;
  return Problem(testing_support::labels("x", outcomes), {"s"}, people);
}

double score(const AggregationRule& r, std::vector<double> u, std::size_t outcomes = 2) {
  return r.score_profile(dummy(u.size(), outcomes), u);
}

WeightSet segment(double a, double b) {
  return WeightSet({WeightVector({a, 1 - a}), WeightVector({b, 1 - b})});
}

}  // namespace

TEST_CASE("weight vectors and sets validate their input") {
  CHECK_THROWS_AS(WeightVector({0.5, 0.6}), Error);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}), Error);
  try {
    WeightSet(std::vector<WeightVector>{});
    FAIL("expected EmptyWeightSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyWeightSet);
  }
  WeightSet dup({WeightVector({0.5, 0.5}), WeightVector({0.5, 0.5})});
  CHECK(dup.vertices().size() == 1);
  CHECK(WeightSet::simplex(3).full_simplex());
}

TEST_CASE("relative fair scores") {
  CHECK(score(relative_fair(WeightSet::singleton(WeightVector({0.5, 0.5}))), {0.3, 0.7}) ==
        doctest::Approx(0.5));
  CHECK(score(relative_fair(WeightSet::simplex(2)), {0.3, 0.7}) == 0.3);
  CHECK(score(relative_fair(segment(0.3, 0.7)), {1.0, 0.0}) == doctest::Approx(0.3));

  // Oracle: dense sampling of the hull.
  Rng rng(31);
  AggregationRule r = relative_fair(segment(0.3, 0.7));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> u{rng.uniform(), rng.uniform()};
    double best = 1e9;
    for (int k = 0; k <= 1000; ++k) {
      double t = 0.3 + 0.4 * k / 1000.0;
      best = std::min(best, t * u[0] + (1 - t) * u[1]);
    }
    CHECK(std::abs(score(r, u) - best) <= 1e-12);
  }
}

TEST_CASE("utilitarian, maximin and leximin") {
  CHECK(score(relative_utilitarian(WeightVector({1.0, 0.0})), {0.42, 0.9}) == 0.42);
  CHECK(score(relative_utilitarian(WeightVector({0.5, 0.5})), {0.2, 0.8}) ==
        doctest::Approx(0.5));
  CHECK(score(relative_maximin(), {0.3, 0.7}) == 0.3);
  CHECK(score(relative_maximin(), {0.6, 0.6, 0.6}) == 0.6);

  CHECK(leximin_key({0.7, 0.2, 0.5}) == std::vector<double>{0.2, 0.5, 0.7});
  CHECK(leximin_key({0.4, 0.4}) == std::vector<double>{0.4, 0.4});
  CHECK(leximin_key({0.5, 0.7, 0.2}) == leximin_key({0.2, 0.5, 0.7}));

  Problem p = dummy(2);
  AggregationRule lex = relative_leximin();
  CHECK(lex.compare_profiles(p, {0.2, 0.5}, {0.2, 0.4}) == Ordering::kFirstStrict);
  CHECK(lex.compare_profiles(p, {0.5, 1.0}, {0.5, 0.5}) == Ordering::kFirstStrict);
  CHECK(relative_maximin().compare_profiles(p, {0.5, 1.0}, {0.5, 0.5}) ==
        Ordering::kIndifferent);
  CHECK(lex.compare_profiles(p, {0.3, 0.6}, {0.6, 0.3}) == Ordering::kIndifferent);
  CHECK(lex.comparator_only());
  try {
    lex.evaluate(p, Act::constant(p, 0));
    FAIL("expected ComparatorOnly");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kComparatorOnly);
  }
}

TEST_CASE("variational rule") {
  CostFunction phi({{WeightVector({1.0, 0.0}), 0.2},
                    {WeightVector({0.0, 1.0}), 0.0},
                    {WeightVector({0.5, 0.5}), 0.0}});
  CHECK(score(variational(phi), {0.1, 0.9}) == doctest::Approx(0.3));
  CHECK(score(variational(CostFunction({{WeightVector({0.2, 0.8}), 0.0}})), {0.5, 0.25}) ==
        score(relative_utilitarian(WeightVector({0.2, 0.8})), {0.5, 0.25}));
  try {
    CostFunction({{WeightVector({1.0, 0.0}), 0.1}});
    FAIL("expected NotGrounded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotGrounded);
  }
  CHECK_THROWS_AS(CostFunction({{WeightVector({1.0, 0.0}), 0.0},
                                {WeightVector({0.0, 1.0}), -0.1}}),
                  Error);
}

TEST_CASE("counterexample rules") {
  CHECK(score(indifference_rule(), {0.9, 0.9}) == 0.0);
  Problem p = dummy(2);
  CHECK(indifference_rule().compare_profiles(p, {1.0, 1.0}, {0.0, 0.0}) ==
        Ordering::kIndifferent);

  CHECK(score(parity_rule(), {0.2, 0.8}, 3) == doctest::Approx(0.5));
  CHECK(score(parity_rule(), {0.2, 0.8}, 4) == 0.2);

  AggregationRule mw = max_weight_rule(segment(0.3, 0.7));
  CHECK(score(mw, {1.0, 0.0}) == doctest::Approx(0.7));
  CHECK(score(mw, {0.0, 1.0}) == doctest::Approx(0.7));
  CHECK(score(mw, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(score(max_weight_rule(WeightSet::singleton(WeightVector({0.25, 0.75}))), {0.4, 0.8}) ==
        doctest::Approx(0.7));

  CHECK(score(nash_rule(), {0.5, 0.5}) == 0.25);
  CHECK(score(nash_rule(), {0.0, 0.9}) == 0.0);
  CHECK(score(nash_rule(), {0.9, 0.2}) == doctest::Approx(0.18));
  CHECK(score(nash_rule(), {0.75, 0.75}) == doctest::Approx(0.5625));
  CHECK(score(nash_rule(), {0.95, 0.6}) == doctest::Approx(0.57));
}

TEST_CASE("belief weighted utilitarian weights") {
  Problem p({"a", "b"}, {"e0", "e1"},
            {{{0.0, 1.0}, {0.9, 0.1}}, {{1.0, 0.0}, {0.1, 0.9}}});
  auto w = belief_weights(p, BeliefWeightedParams{});
  CHECK(w[0] == doctest::Approx(10.0 / 12.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(2.0 / 12.0).epsilon(1e-15));

  Problem same({"a", "b"}, {"e0", "e1"},
               {{{0.0, 1.0}, {0.3, 0.7}}, {{1.0, 0.0}, {0.3, 0.7}}});
  AggregationRule bw = belief_weighted_utilitarian();
  AggregationRule eq = relative_utilitarian(WeightVector::equal(2));
  Act f({0, 1});
  CHECK(bw.evaluate(same, f) == doctest::Approx(eq.evaluate(same, f)).epsilon(1e-15));

  // Weights survive refinement of the reference cell.
  auto map = refine_every_cell(p, 0.37);
  auto w2 = belief_weights(map.refined, BeliefWeightedParams{});
  CHECK(std::abs(w2[0] - w[0]) <= 1e-15);
}

TEST_CASE("compare agrees with evaluate and the strict threshold") {
  Problem p = dummy(2);
  CHECK(relative_maximin().compare_profiles(p, {0.3, 0.7}, {0.4, 0.4}) ==
        Ordering::kSecondStrict);
  CHECK(relative_utilitarian(WeightVector({0.5, 0.5}))
            .compare_profiles(p, {0.3, 0.7}, {0.4, 0.6}) == Ordering::kIndifferent);
  AggregationRule m = relative_maximin();
  CHECK(m.compare_profiles(p, {0.3 + 5e-13, 1.0}, {0.3, 1.0}) == Ordering::kIndifferent);
  m.set_strict_threshold(0.0);
  CHECK(m.compare_profiles(p, {0.3 + 5e-13, 1.0}, {0.3, 1.0}) == Ordering::kFirstStrict);

  AggregationRule three = relative_utilitarian(WeightVector::equal(3));
  CHECK_FALSE(three.accepts(2));
  CHECK_THROWS_AS(three.evaluate(p, Act::constant(p, 0)), Error);
}

TEST_CASE("property: fair rule specializations coincide with their closed forms") {
  Rng rng(32);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    Problem p = testing_support::random_problem(rng, n, 2 + rng.index(4), 1 + rng.index(4));
    Act f = testing_support::random_act(rng, p);
    WeightVector mu(rng.dirichlet(n));
    CHECK(relative_fair(WeightSet::singleton(mu)).evaluate(p, f) ==
          relative_utilitarian(mu).evaluate(p, f));
    CHECK(relative_fair(WeightSet::simplex(n)).evaluate(p, f) ==
          relative_maximin().evaluate(p, f));
  }
}
