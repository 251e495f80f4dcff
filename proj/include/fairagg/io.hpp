#ifndef FAIRAGG_IO_HPP_
#define FAIRAGG_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fairagg/axiom_harness.hpp"
#include "fairagg/core_model.hpp"
#include "fairagg/rules.hpp"
#include "fairagg/welfare_analysis.hpp"

namespace fairagg {

// Insertion-ordered so that written files keep a stable, readable layout.
using Json = nlohmann::ordered_json;

inline constexpr const char* kProblemSchema = "fairagg.problem/1";
inline constexpr const char* kRuleSchema = "fairagg.rule/1";
inline constexpr const char* kGeneratorSchema = "fairagg.generator/1";
inline constexpr const char* kReportSchema = "fairagg.axiom_reports/1";
inline constexpr const char* kMatrixSchema = "fairagg.axiom_matrix/1";
inline constexpr const char* kPropertySchema = "fairagg.property_matrix/1";
inline constexpr const char* kRecoverySchema = "fairagg.recovered_weight_set/1";
inline constexpr const char* kEvaluationSchema = "fairagg.evaluation/1";

struct NamedAct {
  std::string name;
  Act act;
};

struct ProblemFile {
  Problem problem;
  std::vector<NamedAct> acts;

  // Throws ParseError for an unknown name.
  const Act& act(const std::string& name) const;
};

// Parsing throws Error with kParseError for malformed JSON or missing fields,
// the core error codes for unknown labels, and kInvalidProblem when the
// result fails validate_problem.
ProblemFile parse_problem(const Json& j);
Json problem_to_json(const Problem& problem, const std::vector<NamedAct>& acts = {});

AggregationRule parse_rule(const Json& j);
Json rule_to_json(const AggregationRule& rule);

GeneratorConfig parse_generator_config(const Json& j);
Json generator_config_to_json(const GeneratorConfig& config);

// Acts and outcomes are written with the labels of the witness's first
// problem; a jump witness has no problems and only scalars.
Witness parse_witness(const Json& j);
Json witness_to_json(const Witness& witness);

AxiomReport parse_report(const Json& j);
Json report_to_json(const AxiomReport& report);
// Report collection with the rule embedded for replay.
Json reports_to_json(const AggregationRule& rule, const std::vector<AxiomReport>& reports);

Json axiom_matrix_to_json(const std::vector<AxiomMatrixRow>& rows,
                          const std::vector<Axiom>& axioms, const GeneratorConfig& config);

Json property_matrix_to_json(const std::vector<PropertyRow>& rows, std::size_t samples,
                             std::uint64_t seed);

Json recovered_to_json(const RecoveredWeightSet& recovered);

Json read_json_file(const std::string& path);
// Two-space indent and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace fairagg

#endif  // FAIRAGG_IO_HPP_
