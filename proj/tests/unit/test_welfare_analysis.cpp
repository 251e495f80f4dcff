#include <doctest.h>

#include <cmath>

#include "fairagg/errors.hpp"
#include "fairagg/random.hpp"
#include "fairagg/welfare_analysis.hpp"

using namespace fairagg;

namespace {

WeightSet segment(double a, double b) {
  return WeightSet({WeightVector({a, 1 - a}), WeightVector({b, 1 - b})});
}

// Brute-force distance from a point to a segment or triangle by dense
// barycentric sampling (used as an oracle for distance_to_hull).
double sampled_distance(const std::vector<double>& p,
                        const std::vector<std::vector<double>>& hull) {
  double best = 1e9;
  const int steps = 400;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= (hull.size() > 2 ? steps - i : 0); ++j) {
      double a = static_cast<double>(i) / steps;
      double b = hull.size() > 2 ? static_cast<double>(j) / steps : 0.0;
      double c = 1.0 - a - b;
      std::vector<double> w(p.size(), 0.0);
      for (std::size_t k = 0; k < p.size(); ++k) {
        w[k] = a * hull[0][k] + (hull.size() > 2 ? b * hull[2][k] : 0.0) + c * hull[1][k];
      }
      double d = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) d += (w[k] - p[k]) * (w[k] - p[k]);
      best = std::min(best, std::sqrt(d));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("probe acts realize the requested profile") {
  auto ones = probe_act({1.0, 1.0});
  CHECK(ones.act == Act::constant(ones.problem, ones.problem.outcome_index("best")));
  auto zeros = probe_act({0.0, 0.0, 0.0});
  CHECK(zeros.act == Act::constant(zeros.problem, zeros.problem.outcome_index("worst")));
  auto p = probe_act({0.3, 0.8});
  auto prof = normalized_profile(p.problem, p.act);
  CHECK(std::abs(prof[0] - 0.3) <= 1e-12);
  CHECK(std::abs(prof[1] - 0.8) <= 1e-12);
  auto split = probe_act({0.3, 0.8}, ProbeBeliefs::kSplitComplement);
  CHECK(split.problem.num_cells() == 3);
  auto prof2 = normalized_profile(split.problem, split.act);
  CHECK(std::abs(prof2[1] - 0.8) <= 1e-12);
  try {
    probe_act({0.3, 1.2});
    FAIL("expected InvalidVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidVector);
  }

  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> u(2 + rng.index(3));
    for (auto& v : u) v = rng.uniform();
    auto pa = probe_act(u);
    REQUIRE(validate_problem(pa.problem).empty());
    auto pr = normalized_profile(pa.problem, pa.act);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(pr[i] - u[i]) <= 1e-12);
  }
}

TEST_CASE("psi of the basic rules") {
  CHECK(psi_of_rule(relative_maximin(), {0.2, 0.9}) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(psi_of_rule(relative_utilitarian(WeightVector::equal(2)), {0.2, 0.9}) ==
        doctest::Approx(0.55).epsilon(1e-12));
  CHECK(psi_of_rule(nash_rule(), {0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_THROWS_AS(psi_of_rule(relative_leximin(), {0.5, 0.5}), Error);

  auto psi = welfare_of_rule(relative_maximin(), 3);
  CHECK(psi.calibrated());
  CHECK(psi({0.0, 0.0, 0.0}) == 0.0);
  CHECK(psi({1.0, 1.0, 1.0}) == 1.0);
  CHECK(std::abs(psi({0.4, 0.4, 0.4}) - 0.4) <= 1e-12);

  WelfareFunction flat(2, [](const std::vector<double>&) { return 3.0; }, "flat");
  CHECK_FALSE(flat.calibrated());
}

TEST_CASE("property checks on the reference welfare functions") {
  const std::size_t s = 2000;
  auto maximin = welfare_of_rule(relative_maximin(), 2);
  auto util = welfare_of_rule(relative_utilitarian(WeightVector::equal(2)), 2);
  auto skew = welfare_of_rule(relative_utilitarian(WeightVector({0.9, 0.1})), 2);
  auto nash = welfare_of_rule(nash_rule(), 2);
  auto mw = welfare_of_rule(max_weight_rule(segment(0.3, 0.7)), 2);
  WelfareFunction flat(2, [](const std::vector<double>&) { return 0.0; }, "flat");

  for (auto p : all_welfare_properties()) {
    CHECK(check_property(maximin, p, s, 1).status == VerdictStatus::kNoViolationFound);
    CHECK(check_property(util, p, s, 1).status == VerdictStatus::kNoViolationFound);
  }
  CHECK(check_monotone(flat, s, 1).status == VerdictStatus::kViolated);
  CHECK(check_monotone(mw, s, 1).status == VerdictStatus::kNoViolationFound);

  auto qc = check_quasiconcave(mw, s, 1);
  REQUIRE(qc.status == VerdictStatus::kViolated);
  CHECK(qc.points[0] == std::vector<double>{1.0, 0.0});
  CHECK(qc.points[1] == std::vector<double>{0.0, 1.0});
  CHECK(qc.scalar == 0.5);
  CHECK(witness_violates(mw, qc));
  CHECK_FALSE(witness_violates(maximin, qc));

  auto hom = check_homogeneous(nash, s, 1);
  REQUIRE(hom.status == VerdictStatus::kViolated);
  CHECK(witness_violates(nash, hom));
  CHECK(check_translation_invariant(nash, s, 1).status == VerdictStatus::kViolated);
  CHECK(check_homogeneous(mw, s, 1).status == VerdictStatus::kNoViolationFound);

  auto sym = check_symmetric(skew, s, 1);
  REQUIRE(sym.status == VerdictStatus::kViolated);
  CHECK(sym.points[0] == std::vector<double>{1.0, 0.0});
  CHECK(check_symmetric(skew, s, 1).samples == 1);

  // Same seed, same verdict; thread count does not matter.
  auto again = check_quasiconcave(mw, s, 1);
  CHECK(again.points == qc.points);
  CHECK(again.samples == qc.samples);
}

TEST_CASE("direction grid") {
  auto g = make_direction_grid(3, 50, 9);
  CHECK(g.size() == 50);
  CHECK(g[0] == std::vector<double>{1.0, 0.0, 0.0});
  CHECK(g == make_direction_grid(3, 50, 9));
  for (const auto& u : g) {
    CHECK(*std::min_element(u.begin(), u.end()) == 0.0);
    CHECK(*std::max_element(u.begin(), u.end()) == 1.0);
  }
  CHECK(make_direction_grid(2, 1, 3).size() == 2);
}

TEST_CASE("recovery of simple weight sets") {
  auto maximin = welfare_of_rule(relative_maximin(), 3);
  auto rec = recover_weight_set(maximin, make_direction_grid(3, 100, 1));
  CHECK(hausdorff_distance(WeightSet::simplex(3), rec) <= 1e-9);

  auto util = welfare_of_rule(relative_utilitarian(WeightVector::equal(2)), 2);
  auto r2 = recover_weight_set(util, make_direction_grid(2, 1000, 1));
  CHECK(hausdorff_distance(WeightSet::singleton(WeightVector::equal(2)), r2) <= 0.01);

  auto u3 = welfare_of_rule(relative_utilitarian(WeightVector({0.2, 0.5, 0.3})), 3);
  auto r3 = recover_weight_set(u3, make_direction_grid(3, 1000, 1));
  CHECK(hausdorff_distance(WeightSet::singleton(WeightVector({0.2, 0.5, 0.3})), r3) <= 1e-6);

  // Every stored halfspace holds at every recovered vertex.
  for (const auto& h : r3.halfspaces) {
    for (const auto& v : r3.vertices) {
      double s = 0.0;
      for (std::size_t i = 0; i < 3; ++i) s += v[i] * h.direction[i];
      CHECK(s >= h.bound - 1e-9);
    }
  }

  auto nash = welfare_of_rule(nash_rule(), 2);
  try {
    recover_weight_set(nash, make_direction_grid(2, 10, 1));
    FAIL("expected NotSupportFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotSupportFunction);
  }
}

TEST_CASE("without refinement the grid gives a coarser outer approximation") {
  WeightSet m({WeightVector({0.6, 0.3, 0.1}), WeightVector({0.2, 0.2, 0.6}),
               WeightVector({0.1, 0.7, 0.2})});
  auto psi = welfare_of_rule(relative_fair(m), 3);
  auto grid = make_direction_grid(3, 1000, 5);
  RecoveryOptions coarse;
  coarse.refine = false;
  auto outer = recover_weight_set(psi, grid, coarse);
  auto fine = recover_weight_set(psi, grid);
  double d_outer = hausdorff_distance(m, outer);
  double d_fine = hausdorff_distance(m, fine);
  CHECK(d_outer <= 0.01);
  CHECK(d_fine <= 1e-6);
  CHECK(d_fine <= d_outer);
  // The outer approximation contains M: every vertex of M is inside.
  for (const auto& v : vertex_list(m)) CHECK(distance_to_hull(v, outer.vertices) <= 1e-9);
}

TEST_CASE("hausdorff distance") {
  CHECK(hausdorff_distance(WeightSet::simplex(3), WeightSet::simplex(3)) <= 1e-12);
  CHECK(hausdorff_distance(WeightSet::simplex(2), WeightSet::singleton(WeightVector::equal(2))) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  // A subset is never farther from the whole than a smaller subset is.
  WeightSet small = segment(0.45, 0.55);
  WeightSet mid = segment(0.3, 0.7);
  CHECK(hausdorff_distance(WeightSet::simplex(2), mid) <=
        hausdorff_distance(WeightSet::simplex(2), small));

  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<double>> tri;
    for (int k = 0; k < 3; ++k) tri.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
    std::vector<double> p{rng.uniform(-1, 2), rng.uniform(-1, 2), rng.uniform(-1, 2)};
    double d = distance_to_hull(p, tri);
    double oracle = sampled_distance(p, tri);
    CHECK(d <= oracle + 1e-12);
    CHECK(d >= oracle - 5e-3);
  }
}
