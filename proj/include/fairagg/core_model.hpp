#ifndef FAIRAGG_CORE_MODEL_HPP_
#define FAIRAGG_CORE_MODEL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fairagg {

// Raw values over the outcome set, indexed like Problem::outcomes().
using ValueFunction = std::vector<double>;
// Probabilities over the cells of the partition, indexed like Problem::cells().
using Belief = std::vector<double>;

struct Individual {
  ValueFunction values;
  Belief belief;
};

// A fixed choice environment: outcomes, a state partition and the n
// individuals' tastes and beliefs. Semantic checks live in validate_problem;
// the constructor only insists on consistent shapes.
class Problem {
 public:
  Problem(std::vector<std::string> outcomes, std::vector<std::string> cells,
          std::vector<Individual> individuals,
          std::vector<std::size_t> reference_event = {});

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<std::string>& cells() const { return cells_; }
  const std::vector<Individual>& individuals() const { return individuals_; }
  const Individual& individual(std::size_t i) const { return individuals_.at(i); }

  std::size_t num_individuals() const { return individuals_.size(); }
  std::size_t num_outcomes() const { return outcomes_.size(); }
  std::size_t num_cells() const { return cells_.size(); }

  std::size_t outcome_index(std::string_view label) const;
  std::size_t cell_index(std::string_view label) const;
  bool has_outcome(std::string_view label) const;
  bool has_cell(std::string_view label) const;

  // Designated event used by rules that look at beliefs directly. Defaults to
  // the first cell and is carried to all children by refinements.
  const std::vector<std::size_t>& reference_event() const { return reference_event_; }

  // Cached (u - min) / (max - min); throws ConstantValueFunction.
  const std::vector<double>& normalized(std::size_t i) const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<std::string> cells_;
  std::vector<Individual> individuals_;
  std::vector<std::size_t> reference_event_;
  std::unordered_map<std::string, std::size_t> outcome_lookup_;
  std::unordered_map<std::string, std::size_t> cell_lookup_;
  std::vector<std::vector<double>> normalized_;
  std::vector<bool> constant_;
};

// Total map from cells to outcomes, stored by index.
class Act {
 public:
  Act() = default;
  explicit Act(std::vector<std::size_t> outcome_of_cell)
      : outcome_of_cell_(std::move(outcome_of_cell)) {}

  static Act constant(const Problem& problem, std::size_t outcome);
  static Act from_labels(const Problem& problem,
                         const std::map<std::string, std::string>& assignment);

  std::size_t operator[](std::size_t cell) const { return outcome_of_cell_[cell]; }
  std::size_t size() const { return outcome_of_cell_.size(); }
  const std::vector<std::size_t>& outcomes() const { return outcome_of_cell_; }

  std::map<std::string, std::string> to_labels(const Problem& problem) const;

  bool operator==(const Act& other) const = default;

 private:
  std::vector<std::size_t> outcome_of_cell_;
};

enum class ViolationCode {
  kTooFewOutcomes,
  kTooFewIndividuals,
  kEmptyPartition,
  kDuplicateOutcome,
  kDuplicateCell,
  kNonFiniteValue,
  kConstantValueFunction,
  kNegativeProbability,
  kBeliefNotNormalized,
  kInvalidReferenceEvent,
};

struct Violation {
  ViolationCode code;
  std::string detail;
};

std::string_view violation_name(ViolationCode code);

std::vector<Violation> validate_problem(const Problem& problem);
// Throws Error(kInvalidProblem) listing every violation.
void require_valid(const Problem& problem);

// Throws PartitionMismatch or UnknownOutcome when the act does not fit.
void check_act(const Problem& problem, const Act& act);

std::vector<double> normalize_values(const ValueFunction& values);

double seu(const Problem& problem, std::size_t individual, const Act& act);

// Mass that the individual's belief puts on each outcome under the act.
std::vector<double> outcome_masses(const Problem& problem, std::size_t individual,
                                   const Act& act);

double normalized_seu(const Problem& problem, std::size_t individual, const Act& act);

std::vector<double> normalized_profile(const Problem& problem, const Act& act);

}  // namespace fairagg

#endif  // FAIRAGG_CORE_MODEL_HPP_
