#include "fairagg/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fairagg/errors.hpp"
#include "fairagg/tolerances.hpp"

namespace fairagg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConstantValueFunction: return "ConstantValueFunction";
    case ErrorCode::kUnknownCell: return "UnknownCell";
    case ErrorCode::kUnknownOutcome: return "UnknownOutcome";
    case ErrorCode::kFractionOutOfRange: return "FractionOutOfRange";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kEmptyWeightSet: return "EmptyWeightSet";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kNotGrounded: return "NotGrounded";
    case ErrorCode::kComparatorOnly: return "ComparatorOnly";
    case ErrorCode::kInvalidVector: return "InvalidVector";
    case ErrorCode::kNotSupportFunction: return "NotSupportFunction";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotInessential: return "NotInessential";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidProblem: return "InvalidProblem";
  }
  return "Unknown";
}

std::string_view violation_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kTooFewOutcomes: return "TooFewOutcomes";
    case ViolationCode::kTooFewIndividuals: return "TooFewIndividuals";
    case ViolationCode::kEmptyPartition: return "EmptyPartition";
    case ViolationCode::kDuplicateOutcome: return "DuplicateOutcome";
    case ViolationCode::kDuplicateCell: return "DuplicateCell";
    case ViolationCode::kNonFiniteValue: return "NonFiniteValue";
    case ViolationCode::kConstantValueFunction: return "ConstantValueFunction";
    case ViolationCode::kNegativeProbability: return "NegativeProbability";
    case ViolationCode::kBeliefNotNormalized: return "BeliefNotNormalized";
    case ViolationCode::kInvalidReferenceEvent: return "InvalidReferenceEvent";
  }
  return "Unknown";
}

Problem::Problem(std::vector<std::string> outcomes, std::vector<std::string> cells,
                 std::vector<Individual> individuals,
                 std::vector<std::size_t> reference_event)
    : outcomes_(std::move(outcomes)),
      cells_(std::move(cells)),
      individuals_(std::move(individuals)),
      reference_event_(std::move(reference_event)) {
  for (std::size_t i = 0; i < individuals_.size(); ++i) {
    if (individuals_[i].values.size() != outcomes_.size()) {
      throw Error(ErrorCode::kPartitionMismatch,
                  "individual " + std::to_string(i) + " has " +
                      std::to_string(individuals_[i].values.size()) +
                      " values for " + std::to_string(outcomes_.size()) + " outcomes");
    }
    if (individuals_[i].belief.size() != cells_.size()) {
      throw Error(ErrorCode::kPartitionMismatch,
                  "individual " + std::to_string(i) + " has " +
                      std::to_string(individuals_[i].belief.size()) +
                      " probabilities for " + std::to_string(cells_.size()) + " cells");
    }
  }
  if (reference_event_.empty() && !cells_.empty()) reference_event_.push_back(0);
  std::sort(reference_event_.begin(), reference_event_.end());
  reference_event_.erase(std::unique(reference_event_.begin(), reference_event_.end()),
                         reference_event_.end());

  // First occurrence wins; duplicates are reported by validate_problem.
  for (std::size_t k = 0; k < outcomes_.size(); ++k) outcome_lookup_.emplace(outcomes_[k], k);
  for (std::size_t k = 0; k < cells_.size(); ++k) cell_lookup_.emplace(cells_[k], k);

  normalized_.resize(individuals_.size());
  constant_.assign(individuals_.size(), false);
  for (std::size_t i = 0; i < individuals_.size(); ++i) {
    const auto& v = individuals_[i].values;
    if (v.empty()) {
      constant_[i] = true;
      continue;
    }
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (!(*hi > *lo) || !std::isfinite(*hi - *lo)) {
      constant_[i] = true;
      continue;
    }
    normalized_[i] = normalize_values(v);
  }
}

std::size_t Problem::outcome_index(std::string_view label) const {
  auto it = outcome_lookup_.find(std::string(label));
  if (it == outcome_lookup_.end()) {
    throw Error(ErrorCode::kUnknownOutcome, "'" + std::string(label) + "'");
  }
  return it->second;
}

std::size_t Problem::cell_index(std::string_view label) const {
  auto it = cell_lookup_.find(std::string(label));
  if (it == cell_lookup_.end()) {
    throw Error(ErrorCode::kUnknownCell, "'" + std::string(label) + "'");
  }
  return it->second;
}

bool Problem::has_outcome(std::string_view label) const {
  return outcome_lookup_.count(std::string(label)) > 0;
}

bool Problem::has_cell(std::string_view label) const {
  return cell_lookup_.count(std::string(label)) > 0;
}

const std::vector<double>& Problem::normalized(std::size_t i) const {
  if (i >= individuals_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "no individual " + std::to_string(i));
  }
  if (constant_[i]) {
    throw Error(ErrorCode::kConstantValueFunction,
                "individual " + std::to_string(i) + " is indifferent among all outcomes");
  }
  return normalized_[i];
}

Act Act::constant(const Problem& problem, std::size_t outcome) {
  if (outcome >= problem.num_outcomes()) {
    throw Error(ErrorCode::kUnknownOutcome, "index " + std::to_string(outcome));
  }
  return Act(std::vector<std::size_t>(problem.num_cells(), outcome));
}

Act Act::from_labels(const Problem& problem,
                     const std::map<std::string, std::string>& assignment) {
  std::vector<std::size_t> out(problem.num_cells(), problem.num_outcomes());
  for (const auto& [cell, outcome] : assignment) {
    out[problem.cell_index(cell)] = problem.outcome_index(outcome);
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (out[c] == problem.num_outcomes()) {
      throw Error(ErrorCode::kPartitionMismatch,
                  "act leaves cell '" + problem.cells()[c] + "' unassigned");
    }
  }
  return Act(std::move(out));
}

std::map<std::string, std::string> Act::to_labels(const Problem& problem) const {
  check_act(problem, *this);
  std::map<std::string, std::string> out;
  for (std::size_t c = 0; c < outcome_of_cell_.size(); ++c) {
    out[problem.cells()[c]] = problem.outcomes()[outcome_of_cell_[c]];
  }
  return out;
}

std::vector<Violation> validate_problem(const Problem& problem) {
  std::vector<Violation> out;
  auto add = [&out](ViolationCode code, std::string detail) {
    out.push_back({code, std::move(detail)});
  };
  if (problem.num_outcomes() < 2) {
    add(ViolationCode::kTooFewOutcomes,
        std::to_string(problem.num_outcomes()) + " outcome(s), need at least 2");
  }
  if (problem.num_individuals() < 2) {
    add(ViolationCode::kTooFewIndividuals,
        std::to_string(problem.num_individuals()) + " individual(s), need at least 2");
  }
  if (problem.num_cells() == 0) add(ViolationCode::kEmptyPartition, "no cells");

  std::set<std::string> seen;
  for (const auto& x : problem.outcomes()) {
    if (!seen.insert(x).second) add(ViolationCode::kDuplicateOutcome, "'" + x + "'");
  }
  seen.clear();
  for (const auto& c : problem.cells()) {
    if (!seen.insert(c).second) add(ViolationCode::kDuplicateCell, "'" + c + "'");
  }
  for (std::size_t e : problem.reference_event()) {
    if (e >= problem.num_cells()) {
      add(ViolationCode::kInvalidReferenceEvent, "cell index " + std::to_string(e));
    }
  }

  for (std::size_t i = 0; i < problem.num_individuals(); ++i) {
    const auto& ind = problem.individual(i);
    const std::string who = "individual " + std::to_string(i);
    bool finite = std::all_of(ind.values.begin(), ind.values.end(),
                              [](double v) { return std::isfinite(v); });
    if (!finite) {
      add(ViolationCode::kNonFiniteValue, who);
    } else if (!ind.values.empty()) {
      auto [lo, hi] = std::minmax_element(ind.values.begin(), ind.values.end());
      if (!(*hi > *lo)) add(ViolationCode::kConstantValueFunction, who);
    }
    double total = 0.0;
    bool negative = false;
    for (double p : ind.belief) {
      if (!(p >= 0.0) || !std::isfinite(p)) negative = true;
      total += p;
    }
    if (negative) add(ViolationCode::kNegativeProbability, who);
    if (!(std::abs(total - 1.0) <= kProbabilityTolerance)) {
      std::ostringstream os;
      os.precision(17);
      os << who << " belief sums to " << total;
      add(ViolationCode::kBeliefNotNormalized, os.str());
    }
  }
  return out;
}

void require_valid(const Problem& problem) {
  auto violations = validate_problem(problem);
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += std::string(violation_name(v.code)) + " (" + v.detail + ")";
  }
  throw Error(ErrorCode::kInvalidProblem, msg);
}

void check_act(const Problem& problem, const Act& act) {
  if (act.size() != problem.num_cells()) {
    throw Error(ErrorCode::kPartitionMismatch,
                "act covers " + std::to_string(act.size()) + " cells, partition has " +
                    std::to_string(problem.num_cells()));
  }
  for (std::size_t c = 0; c < act.size(); ++c) {
    if (act[c] >= problem.num_outcomes()) {
      throw Error(ErrorCode::kUnknownOutcome,
                  "act maps cell '" + problem.cells()[c] + "' to index " +
                      std::to_string(act[c]));
    }
  }
}

std::vector<double> normalize_values(const ValueFunction& values) {
  if (values.empty()) throw Error(ErrorCode::kConstantValueFunction, "no values");
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  if (!(range > 0.0) || !std::isfinite(range)) {
    throw Error(ErrorCode::kConstantValueFunction, "max equals min");
  }
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = (values[k] - lo) / range;
  }
  return out;
}

double seu(const Problem& problem, std::size_t individual, const Act& act) {
  check_act(problem, act);
  const auto& ind = problem.individual(individual);
  double total = 0.0;
  for (std::size_t c = 0; c < act.size(); ++c) total += ind.belief[c] * ind.values[act[c]];
  return total;
}

std::vector<double> outcome_masses(const Problem& problem, std::size_t individual,
                                   const Act& act) {
  check_act(problem, act);
  const auto& belief = problem.individual(individual).belief;
  std::vector<double> mass(problem.num_outcomes(), 0.0);
  for (std::size_t c = 0; c < act.size(); ++c) mass[act[c]] += belief[c];
  return mass;
}

namespace {

double normalized_seu_unchecked(const Problem& problem, std::size_t i, const Act& act,
                                std::vector<double>& mass) {
  const auto& u = problem.normalized(i);
  const auto& belief = problem.individual(i).belief;
  mass.assign(problem.num_outcomes(), 0.0);
  for (std::size_t c = 0; c < act.size(); ++c) mass[act[c]] += belief[c];
  double total = 0.0;
  double acc = 0.0;
  std::size_t carriers = 0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    if (mass[k] > 0.0) {
      ++carriers;
      last = k;
    }
    total += mass[k];
    acc += mass[k] * u[k];
  }
  // Degenerate lotteries return the outcome's value bit-for-bit, so constant
  // acts have identical utilities under any belief.
  if (carriers == 1) return u[last];
  if (carriers == 0) return 0.0;
  return std::clamp(acc / total, 0.0, 1.0);
}

}  // namespace

double normalized_seu(const Problem& problem, std::size_t individual, const Act& act) {
  check_act(problem, act);
  std::vector<double> mass;
  return normalized_seu_unchecked(problem, individual, act, mass);
}

std::vector<double> normalized_profile(const Problem& problem, const Act& act) {
  check_act(problem, act);
  std::vector<double> out(problem.num_individuals());
  std::vector<double> mass;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = normalized_seu_unchecked(problem, i, act, mass);
  }
  return out;
}

}  // namespace fairagg
