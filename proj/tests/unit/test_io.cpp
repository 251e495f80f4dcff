#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fairagg/errors.hpp"
#include "fairagg/io.hpp"
#include "test_support.hpp"

using namespace fairagg;

namespace {

const std::string kData = FAIRAGG_DATA_DIR;
const std::string kFixtures = FAIRAGG_FIXTURE_DIR;

ErrorCode code_of(const Json& j, bool rule) {
  try {
    if (rule) {
      parse_rule(j);
    } else {
      parse_problem(j);
    }
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::kParseError;
}

bool same_problem(const Problem& a, const Problem& b) {
  if (a.outcomes() != b.outcomes() || a.cells() != b.cells()) return false;
  if (a.reference_event() != b.reference_event()) return false;
  if (a.num_individuals() != b.num_individuals()) return false;
  for (std::size_t i = 0; i < a.num_individuals(); ++i) {
    if (a.individual(i).values != b.individual(i).values) return false;
    if (a.individual(i).belief != b.individual(i).belief) return false;
  }
  return true;
}

std::vector<AggregationRule> rule_panel() {
  return {relative_maximin(),
          relative_leximin(),
          relative_utilitarian(WeightVector({0.9, 0.1})),
          relative_fair(WeightSet({WeightVector({0.2, 0.8}), WeightVector({0.6, 0.4})})),
          variational(CostFunction({{WeightVector({0.5, 0.5}), 0.0},
                                    {WeightVector({1.0, 0.0}), 0.2}})),
          indifference_rule(),
          parity_rule(),
          max_weight_rule(WeightSet({WeightVector({0.3, 0.7}), WeightVector({0.7, 0.3})})),
          nash_rule(),
          belief_weighted_utilitarian(),
          belief_weighted_utilitarian(ReferenceEventSelector::kFirstCell)};
}

}  // namespace

TEST_CASE("sample problem files") {
  const auto two = parse_problem(read_json_file(kData + "/samples/two_person.json"));
  CHECK(two.problem.num_individuals() == 2);
  REQUIRE(two.acts.size() == 2);
  // Normalized values: mid is 0.3 and 0.5; act2 pays high in rain, low in sun.
  const auto p1 = normalized_profile(two.problem, two.act("act1"));
  const auto p2 = normalized_profile(two.problem, two.act("act2"));
  CHECK(p1[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(p1[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p2[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p2[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK_THROWS_AS(two.act("act3"), Error);

  const auto three = parse_problem(read_json_file(kData + "/samples/three_person.json"));
  CHECK(three.problem.num_individuals() == 3);
  CHECK(three.acts.size() == 3);

  const auto common = parse_problem(read_json_file(kData + "/samples/common_values.json"));
  CHECK(common.problem.reference_event() == std::vector<std::size_t>{1});
  CHECK(common.problem.individual(0).values == common.problem.individual(1).values);
}

TEST_CASE("problem round trip") {
  fairagg::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.index(3);
    const Problem p = testing_support::random_problem(rng, n, 2 + rng.index(3), 1 + rng.index(4));
    std::vector<NamedAct> acts{{"f", testing_support::random_act(rng, p)},
                               {"g", testing_support::random_act(rng, p)}};
    const Json j = problem_to_json(p, acts);
    const auto back = parse_problem(Json::parse(dump(j)));
    CHECK(same_problem(p, back.problem));
    CHECK(back.act("f") == acts[0].act);
    CHECK(back.act("g") == acts[1].act);
    CHECK(dump(problem_to_json(back.problem, back.acts)) == dump(j));
  }
}

TEST_CASE("rule round trip") {
  for (const auto& rule : rule_panel()) {
    const Json j = rule_to_json(rule);
    const AggregationRule back = parse_rule(Json::parse(dump(j)));
    CHECK(back.kind() == rule.kind());
    CHECK(back.label() == rule.label());
    CHECK(dump(rule_to_json(back)) == dump(j));
  }
  for (const char* name : {"maximin", "leximin", "utilitarian_equal", "fair_segment", "nash",
                           "max_weight", "variational", "belief_weighted", "fair_triangle"}) {
    CAPTURE(name);
    const auto rule = parse_rule(read_json_file(kData + "/rules/" + name + ".json"));
    CHECK(dump(rule_to_json(parse_rule(rule_to_json(rule)))) == dump(rule_to_json(rule)));
  }
}

TEST_CASE("malformed files") {
  Json p = read_json_file(kData + "/samples/two_person.json");
  SUBCASE("missing schema") {
    p.erase("schema");
    CHECK(code_of(p, false) == ErrorCode::kParseError);
  }
  SUBCASE("unknown outcome in an act") {
    p["acts"]["act1"]["rain"] = "gold";
    CHECK(code_of(p, false) == ErrorCode::kUnknownOutcome);
  }
  SUBCASE("unknown cell in a belief") {
    p["individuals"][0]["belief"]["fog"] = 0.0;
    CHECK(code_of(p, false) == ErrorCode::kUnknownCell);
  }
  SUBCASE("belief not summing to one") {
    p["individuals"][0]["belief"]["rain"] = 0.6;
    CHECK(code_of(p, false) == ErrorCode::kInvalidProblem);
  }
  SUBCASE("missing value") {
    p["individuals"][1]["values"].erase("mid");
    CHECK(code_of(p, false) == ErrorCode::kParseError);
  }
  Json r{{"schema", kRuleSchema}, {"kind", "relative_fair"}};
  SUBCASE("fair rule without vertices") { CHECK(code_of(r, true) == ErrorCode::kParseError); }
  SUBCASE("unknown kind") {
    r["kind"] = "median";
    CHECK(code_of(r, true) == ErrorCode::kParseError);
  }
  SUBCASE("weights off the simplex") {
    r["vertices"] = Json::array({Json::array({0.5, 0.6})});
    CHECK(code_of(r, true) == ErrorCode::kInvalidWeight);
  }
  CHECK_THROWS_AS(read_json_file(kData + "/no_such_file.json"), Error);
}

TEST_CASE("frozen golden witnesses replay") {
  const Json frozen = read_json_file(kFixtures + "/golden_witnesses.json");
  const auto rules = rule_panel();
  for (Axiom ax : all_axioms()) {
    CAPTURE(axiom_name(ax));
    const auto live = golden_witnesses(ax, 2);
    const Json& list = frozen.at("witnesses").at(std::string(axiom_name(ax)));
    REQUIRE(list.size() == live.size());
    for (std::size_t k = 0; k < live.size(); ++k) {
      const Witness w = parse_witness(list[k]);
      CHECK(dump(witness_to_json(w)) == dump(list[k]));
      for (const auto& rule : rules) {
        CAPTURE(rule.label());
        CHECK(find_violation(ax, rule, w).has_value() ==
              find_violation(ax, rule, live[k]).has_value());
      }
    }
  }
}

TEST_CASE("reports round trip and replay") {
  GeneratorConfig c;
  c.trials = 100;
  const auto rule = nash_rule();
  std::vector<AxiomReport> reports;
  for (Axiom ax : characterization_axioms()) reports.push_back(check_axiom(rule, ax, c));
  const Json j = Json::parse(dump(reports_to_json(rule, reports)));
  const auto back_rule = parse_rule(j.at("rule"));
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const AxiomReport r = parse_report(j.at("reports")[k]);
    CHECK(r.axiom == reports[k].axiom);
    CHECK(r.status == reports[k].status);
    CHECK(r.trials == reports[k].trials);
    CHECK(dump(report_to_json(r)) == dump(j.at("reports")[k]));
    if (r.witness) CHECK(replay(back_rule, r) == VerdictStatus::kViolated);
  }
}

TEST_CASE("generator config round trip") {
  GeneratorConfig c;
  c.n = 3;
  c.values = ValueMode::kCommonValues;
  c.beliefs = BeliefMode::kDesignedEvent;
  c.inject_golden = false;
  const auto back = parse_generator_config(generator_config_to_json(c));
  CHECK(back.n == 3);
  CHECK(back.values == ValueMode::kCommonValues);
  CHECK(back.beliefs == BeliefMode::kDesignedEvent);
  CHECK_FALSE(back.inject_golden);
  Json bad = generator_config_to_json(c);
  bad["values"] = "shared";
  CHECK_THROWS_AS(parse_generator_config(bad), Error);
}
