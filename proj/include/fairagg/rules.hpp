#ifndef FAIRAGG_RULES_HPP_
#define FAIRAGG_RULES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairagg/core_model.hpp"
#include "fairagg/tolerances.hpp"

namespace fairagg {

enum class Ordering { kFirstStrict, kIndifferent, kSecondStrict };

std::string_view ordering_name(Ordering o);
Ordering reversed(Ordering o);

// Non-negative weights on the individuals summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector equal(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& values() const { return weights_; }
  double dot(const std::vector<double>& u) const;

 private:
  std::vector<double> weights_;
};

// Polytope of weight vectors given by its vertices.
class WeightSet {
 public:
  explicit WeightSet(std::vector<WeightVector> vertices);
  static WeightSet simplex(std::size_t n);
  static WeightSet singleton(WeightVector w);

  std::size_t dimension() const { return vertices_.front().size(); }
  const std::vector<WeightVector>& vertices() const { return vertices_; }
  bool full_simplex() const { return full_simplex_; }
  bool is_singleton() const { return vertices_.size() == 1; }

  double min_dot(const std::vector<double>& u) const;
  double max_dot(const std::vector<double>& u) const;

 private:
  std::vector<WeightVector> vertices_;
  bool full_simplex_ = false;
};

struct PenalizedWeight {
  WeightVector weight;
  double penalty;
};

// Finite-support penalty: +infinity off the listed candidates. The smallest
// penalty must be zero.
class CostFunction {
 public:
  explicit CostFunction(std::vector<PenalizedWeight> candidates);

  std::size_t dimension() const { return candidates_.front().weight.size(); }
  const std::vector<PenalizedWeight>& candidates() const { return candidates_; }

 private:
  std::vector<PenalizedWeight> candidates_;
};

enum class RuleKind {
  kRelativeFair,
  kRelativeUtilitarian,
  kRelativeMaximin,
  kRelativeLeximin,
  kVariational,
  kIndifference,
  kParity,
  kMaxWeight,
  kNash,
  kBeliefWeightedUtilitarian,
};

std::string_view rule_kind_name(RuleKind kind);
std::optional<RuleKind> rule_kind_from_name(std::string_view name);

// Which event the belief-weighted rule reads beliefs from.
enum class ReferenceEventSelector {
  kDesignated,  // Problem::reference_event(), carried through refinements
  kFirstCell,   // literally the first cell of the partition
};

struct RelativeFairParams { WeightSet weights; };
struct RelativeUtilitarianParams { WeightVector weight; };
struct RelativeMaximinParams {};
struct RelativeLeximinParams {};
struct VariationalParams { CostFunction cost; };
struct IndifferenceParams {};
struct ParityParams {};
struct MaxWeightParams { WeightSet weights; };
struct NashParams {};
struct BeliefWeightedParams {
  ReferenceEventSelector selector = ReferenceEventSelector::kDesignated;
  double offset = 0.1;
};

using RuleParams =
    std::variant<RelativeFairParams, RelativeUtilitarianParams, RelativeMaximinParams,
                 RelativeLeximinParams, VariationalParams, IndifferenceParams, ParityParams,
                 MaxWeightParams, NashParams, BeliefWeightedParams>;

// A social preference over acts for every problem. Score-based rules expose
// evaluate(); the leximin rule only compares.
class AggregationRule {
 public:
  AggregationRule(RuleParams params, std::string label = {});

  RuleKind kind() const;
  const RuleParams& params() const { return params_; }
  const std::string& label() const { return label_; }
  bool has_score() const { return kind() != RuleKind::kRelativeLeximin; }
  bool comparator_only() const { return !has_score(); }

  // Number of individuals the rule is tied to, if any.
  std::optional<std::size_t> dimension() const;
  bool accepts(std::size_t n) const;

  double strict_threshold() const { return strict_threshold_; }
  void set_strict_threshold(double t) { strict_threshold_ = t; }

  // Throws ComparatorOnly for the leximin rule.
  double evaluate(const Problem& problem, const Act& act) const;
  // Score from a precomputed normalized profile of an act of this problem.
  double score_profile(const Problem& problem, const std::vector<double>& profile) const;

  Ordering compare(const Problem& problem, const Act& f, const Act& g) const;
  Ordering compare_profiles(const Problem& problem, const std::vector<double>& u,
                            const std::vector<double>& v) const;

 private:
  void check_dimension(std::size_t n) const;

  RuleParams params_;
  std::string label_;
  double strict_threshold_ = kStrictThreshold;
};

AggregationRule relative_fair(WeightSet weights);
AggregationRule relative_utilitarian(WeightVector weight);
AggregationRule relative_maximin();
AggregationRule relative_leximin();
AggregationRule variational(CostFunction cost);
AggregationRule indifference_rule();
AggregationRule parity_rule();
AggregationRule max_weight_rule(WeightSet weights);
AggregationRule nash_rule();
AggregationRule belief_weighted_utilitarian(
    ReferenceEventSelector selector = ReferenceEventSelector::kDesignated);

std::vector<double> leximin_key(std::vector<double> profile);

// Weights used by the belief-weighted rule on this problem.
WeightVector belief_weights(const Problem& problem, const BeliefWeightedParams& params);

}  // namespace fairagg

#endif  // FAIRAGG_RULES_HPP_
