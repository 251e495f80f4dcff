#ifndef FAIRAGG_AXIOM_HARNESS_HPP_
#define FAIRAGG_AXIOM_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairagg/core_model.hpp"
#include "fairagg/rules.hpp"
#include "fairagg/welfare_analysis.hpp"

namespace fairagg {

enum class ValueMode { kIid, kCommonValues };
enum class BeliefMode { kIid, kCommonBeliefs, kDesignedEvent };

std::string_view value_mode_name(ValueMode m);
std::string_view belief_mode_name(BeliefMode m);
std::optional<ValueMode> value_mode_from_name(std::string_view name);
std::optional<BeliefMode> belief_mode_from_name(std::string_view name);

struct GeneratorConfig {
  std::size_t n = 2;
  std::size_t outcomes = 3;
  // In designed_event mode the partition has 2^k cells with
  // k = max(1, floor(log2(cells))).
  std::size_t cells = 3;
  ValueMode values = ValueMode::kIid;
  BeliefMode beliefs = BeliefMode::kIid;
  std::size_t trials = 1000;
  std::uint64_t seed = 20240501;
  bool inject_golden = true;
};

// Throws InvalidConfig.
void validate_config(const GeneratorConfig& config);

Problem gen_problem(const GeneratorConfig& config, std::uint64_t seed);

// Appends an outcome whose value lies in [min, max] for every individual.
// Throws NotInessential otherwise.
Problem expand_with_outcome(const Problem& problem, const std::string& label,
                            const std::vector<double>& values);
Problem gen_inessential_expansion(const Problem& problem, std::uint64_t seed);

// Same problem with individual i replaced by individual perm[i].
Problem permute_individuals(const Problem& problem, const std::vector<std::size_t>& perm);

enum class Axiom {
  kPareto,
  kStrongPareto,
  kContinuity,
  kIie,
  kWpm,
  kSpm,
  kBeliefIrrelevance,
  kRci,
  kCi,
  kWrci,
  kAnonymity,
  kSeparability,
  kSaa,
};

std::string_view axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(std::string_view name);
const std::vector<Axiom>& all_axioms();
// Pareto, continuity, IIE, WPM, belief irrelevance, RCI.
const std::vector<Axiom>& characterization_axioms();
// Everything except continuity, which only has a constructive test.
const std::vector<Axiom>& sampled_axioms();

// Primitive objects of one trial. Layout per axiom:
//   pareto, strong_pareto   problems {P}, acts {f, g}
//   continuity              problems {P}, acts {f_2 .. f_64, g, f}
//                           or scalars = lo ++ hi of a jump in psi
//   iie                     problems {P, expanded P}, acts {f, g}
//   wpm                     problems {P}, outcomes {x, y}
//   spm                     problems {P}, outcomes {x, y}, indices = event
//   belief_irrelevance      problems {P, P'}, outcomes {x, y}
//   rci, ci                 problems {P}, acts {f, g}, outcomes {x}, scalars {alpha}
//   wrci                    problems {P}, acts {f, g}, outcomes {x, y}, scalars {alpha}
//   anonymity               problems {P}, acts {f, g}, indices = permutation
//   separability            problems {P, P'}, acts {f, g}, indices = S
//   saa                     problems {P}, acts {f}, outcomes {x}
// Derived objects (coin toss refinements, mixtures) are rebuilt on replay.
struct Witness {
  std::vector<Problem> problems;
  std::vector<Act> acts;
  std::vector<std::size_t> outcomes;
  std::vector<double> scalars;
  std::vector<std::size_t> indices;
};

// Description of the violation, or nothing when the witness's premise fails
// or the rule behaves as the axiom demands.
std::optional<std::string> find_violation(Axiom axiom, const AggregationRule& rule,
                                          const Witness& witness);

// Hand-built witnesses for n individuals (empty when none exists for n).
std::vector<Witness> golden_witnesses(Axiom axiom, std::size_t n);

// One random trial for a sampled axiom.
Witness sample_witness(Axiom axiom, const GeneratorConfig& config, std::uint64_t trial);

// Acts with profiles (0.5 - 1/t, 1, ..., 1), t = 2..64, the reference act
// (0.5, ..., 0.5) and the limit (0.5, 1, ..., 1) in one problem.
Witness continuity_sequence(std::size_t n);

struct AxiomReport {
  Axiom axiom = Axiom::kPareto;
  std::string rule;
  VerdictStatus status = VerdictStatus::kNoViolationFound;
  std::size_t trials = 0;  // trials executed, golden ones included
  std::size_t golden = 0;
  GeneratorConfig config;
  std::optional<Witness> witness;
  std::string source;  // golden, search, construction or scan
  std::string detail;
};

AxiomReport check_axiom(const AggregationRule& rule, Axiom axiom, const GeneratorConfig& config);

AxiomReport check_pareto(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_strong_pareto(const AggregationRule& rule, const GeneratorConfig& config);
// The jump scan covers max(100, trials) segments.
AxiomReport check_continuity_witness(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_iie(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_wpm(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_spm(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_belief_irrelevance(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_rci(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_ci(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_wrci(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_anonymity(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_separability(const AggregationRule& rule, const GeneratorConfig& config);
AxiomReport check_saa(const AggregationRule& rule, const GeneratorConfig& config);

// Re-judges the stored witness; no_violation_found when there is none.
VerdictStatus replay(const AggregationRule& rule, const AxiomReport& report);

struct AxiomMatrixRow {
  std::string rule;
  std::vector<AxiomReport> reports;  // in the order of the requested axioms
};

std::vector<AxiomMatrixRow> axiom_matrix(const std::vector<AggregationRule>& rules,
                                         const std::vector<Axiom>& axioms,
                                         const GeneratorConfig& config);

}  // namespace fairagg

#endif  // FAIRAGG_AXIOM_HARNESS_HPP_
