#include "fairagg/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairagg/errors.hpp"

namespace fairagg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double equal_weight_mean(const std::vector<double>& u) {
  const double w = 1.0 / static_cast<double>(u.size());
  double total = 0.0;
  for (double v : u) total += w * v;
  return total;
}

double minimum(const std::vector<double>& u) { return *std::min_element(u.begin(), u.end()); }

}  // namespace

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::kFirstStrict: return "first";
    case Ordering::kIndifferent: return "indifferent";
    case Ordering::kSecondStrict: return "second";
  }
  return "?";
}

Ordering reversed(Ordering o) {
  if (o == Ordering::kFirstStrict) return Ordering::kSecondStrict;
  if (o == Ordering::kSecondStrict) return Ordering::kFirstStrict;
  return o;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorCode::kInvalidWeight, "empty weight vector");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidWeight, "entry " + std::to_string(w));
    }
    total += w;
  }
  if (!(std::abs(total - 1.0) <= kProbabilityTolerance)) {
    throw Error(ErrorCode::kInvalidWeight, "weights sum to " + std::to_string(total));
  }
}

WeightVector WeightVector::equal(std::size_t n) {
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double WeightVector::dot(const std::vector<double>& u) const {
  if (u.size() != weights_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weights for " + std::to_string(weights_.size()) + " individuals, profile has " +
                    std::to_string(u.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) total += weights_[i] * u[i];
  return total;
}

WeightSet::WeightSet(std::vector<WeightVector> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::kEmptyWeightSet, "no vertices");
  const std::size_t n = vertices.front().size();
  for (auto& v : vertices) {
    if (v.size() != n) throw Error(ErrorCode::kDimensionMismatch, "vertices differ in length");
    bool duplicate = std::any_of(vertices_.begin(), vertices_.end(), [&](const WeightVector& w) {
      return w.values() == v.values();
    });
    if (!duplicate) vertices_.push_back(std::move(v));
  }
}

WeightSet WeightSet::simplex(std::size_t n) {
  std::vector<WeightVector> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    vertices.emplace_back(std::move(e));
  }
  WeightSet out(std::move(vertices));
  out.full_simplex_ = true;
  return out;
}

WeightSet WeightSet::singleton(WeightVector w) { return WeightSet({std::move(w)}); }

double WeightSet::min_dot(const std::vector<double>& u) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::min(best, v.dot(u));
  return best;
}

double WeightSet::max_dot(const std::vector<double>& u) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, v.dot(u));
  return best;
}

CostFunction::CostFunction(std::vector<PenalizedWeight> candidates)
    : candidates_(std::move(candidates)) {
  if (candidates_.empty()) throw Error(ErrorCode::kEmptyWeightSet, "no candidate weights");
  const std::size_t n = candidates_.front().weight.size();
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates_) {
    if (c.weight.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "candidates differ in length");
    }
    if (!(c.penalty >= 0.0) || !std::isfinite(c.penalty)) {
      throw Error(ErrorCode::kNotGrounded, "penalty " + std::to_string(c.penalty));
    }
    lowest = std::min(lowest, c.penalty);
  }
  if (lowest != 0.0) {
    throw Error(ErrorCode::kNotGrounded, "smallest penalty is " + std::to_string(lowest));
  }
}

std::string_view rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::kRelativeFair: return "relative_fair";
    case RuleKind::kRelativeUtilitarian: return "relative_utilitarian";
    case RuleKind::kRelativeMaximin: return "relative_maximin";
    case RuleKind::kRelativeLeximin: return "relative_leximin";
    case RuleKind::kVariational: return "variational";
    case RuleKind::kIndifference: return "indifference";
    case RuleKind::kParity: return "parity";
    case RuleKind::kMaxWeight: return "max_weight";
    case RuleKind::kNash: return "nash";
    case RuleKind::kBeliefWeightedUtilitarian: return "belief_weighted_utilitarian";
  }
  return "?";
}

std::optional<RuleKind> rule_kind_from_name(std::string_view name) {
  for (RuleKind k :
       {RuleKind::kRelativeFair, RuleKind::kRelativeUtilitarian, RuleKind::kRelativeMaximin,
        RuleKind::kRelativeLeximin, RuleKind::kVariational, RuleKind::kIndifference,
        RuleKind::kParity, RuleKind::kMaxWeight, RuleKind::kNash,
        RuleKind::kBeliefWeightedUtilitarian}) {
    if (rule_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

AggregationRule::AggregationRule(RuleParams params, std::string label)
    : params_(std::move(params)), label_(std::move(label)) {
  if (label_.empty()) label_ = std::string(rule_kind_name(kind()));
}

RuleKind AggregationRule::kind() const {
  return static_cast<RuleKind>(params_.index());
}

std::optional<std::size_t> AggregationRule::dimension() const {
  return std::visit(
      Overloaded{
          [](const RelativeFairParams& p) -> std::optional<std::size_t> {
            return p.weights.dimension();
          },
          [](const RelativeUtilitarianParams& p) -> std::optional<std::size_t> {
            return p.weight.size();
          },
          [](const VariationalParams& p) -> std::optional<std::size_t> {
            return p.cost.dimension();
          },
          [](const MaxWeightParams& p) -> std::optional<std::size_t> {
            return p.weights.dimension();
          },
          [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
      },
      params_);
}

bool AggregationRule::accepts(std::size_t n) const {
  auto d = dimension();
  return !d || *d == n;
}

void AggregationRule::check_dimension(std::size_t n) const {
  if (!accepts(n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                label_ + " is defined for " + std::to_string(*dimension()) +
                    " individuals, problem has " + std::to_string(n));
  }
}

WeightVector belief_weights(const Problem& problem, const BeliefWeightedParams& params) {
  std::vector<std::size_t> event;
  if (params.selector == ReferenceEventSelector::kFirstCell) {
    event = {0};
  } else {
    event = problem.reference_event();
  }
  std::vector<double> raw(problem.num_individuals());
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    double mass = 0.0;
    for (std::size_t c : event) mass += problem.individual(i).belief.at(c);
    raw[i] = params.offset + mass;
    total += raw[i];
  }
  for (auto& r : raw) r /= total;
  return WeightVector(std::move(raw));
}

double AggregationRule::score_profile(const Problem& problem,
                                      const std::vector<double>& u) const {
  check_dimension(u.size());
  return std::visit(
      Overloaded{
          [&](const RelativeFairParams& p) { return p.weights.min_dot(u); },
          [&](const RelativeUtilitarianParams& p) { return p.weight.dot(u); },
          [&](const RelativeMaximinParams&) { return minimum(u); },
          [&](const RelativeLeximinParams&) -> double {
            throw Error(ErrorCode::kComparatorOnly, "relative_leximin has no score");
          },
          [&](const VariationalParams& p) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : p.cost.candidates()) {
              best = std::min(best, c.weight.dot(u) + c.penalty);
            }
            return best;
          },
          [&](const IndifferenceParams&) { return 0.0; },
          [&](const ParityParams&) {
            return problem.num_outcomes() % 2 == 1 ? equal_weight_mean(u) : minimum(u);
          },
          [&](const MaxWeightParams& p) { return p.weights.max_dot(u); },
          [&](const NashParams&) {
            double prod = 1.0;
            for (double v : u) prod *= v;
            return prod;
          },
          [&](const BeliefWeightedParams& p) { return belief_weights(problem, p).dot(u); },
      },
      params_);
}

double AggregationRule::evaluate(const Problem& problem, const Act& act) const {
  if (comparator_only()) {
    throw Error(ErrorCode::kComparatorOnly, label_ + " has no score");
  }
  check_dimension(problem.num_individuals());
  return score_profile(problem, normalized_profile(problem, act));
}

Ordering AggregationRule::compare_profiles(const Problem& problem, const std::vector<double>& u,
                                           const std::vector<double>& v) const {
  if (kind() == RuleKind::kRelativeLeximin) {
    if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "profile lengths");
    auto a = leximin_key(u);
    auto b = leximin_key(v);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] > b[k]) return Ordering::kFirstStrict;
      if (a[k] < b[k]) return Ordering::kSecondStrict;
    }
    return Ordering::kIndifferent;
  }
  const double diff = score_profile(problem, u) - score_profile(problem, v);
  if (diff > strict_threshold_) return Ordering::kFirstStrict;
  if (diff < -strict_threshold_) return Ordering::kSecondStrict;
  return Ordering::kIndifferent;
}

Ordering AggregationRule::compare(const Problem& problem, const Act& f, const Act& g) const {
  check_dimension(problem.num_individuals());
  return compare_profiles(problem, normalized_profile(problem, f), normalized_profile(problem, g));
}

std::vector<double> leximin_key(std::vector<double> profile) {
  std::sort(profile.begin(), profile.end());
  return profile;
}

AggregationRule relative_fair(WeightSet weights) {
  return AggregationRule(RelativeFairParams{std::move(weights)});
}
AggregationRule relative_utilitarian(WeightVector weight) {
  return AggregationRule(RelativeUtilitarianParams{std::move(weight)});
}
AggregationRule relative_maximin() { return AggregationRule(RelativeMaximinParams{}); }
AggregationRule relative_leximin() { return AggregationRule(RelativeLeximinParams{}); }
AggregationRule variational(CostFunction cost) {
  return AggregationRule(VariationalParams{std::move(cost)});
}
AggregationRule indifference_rule() { return AggregationRule(IndifferenceParams{}); }
AggregationRule parity_rule() { return AggregationRule(ParityParams{}); }
AggregationRule max_weight_rule(WeightSet weights) {
  return AggregationRule(MaxWeightParams{std::move(weights)});
}
AggregationRule nash_rule() { return AggregationRule(NashParams{}); }
AggregationRule belief_weighted_utilitarian(ReferenceEventSelector selector) {
  return AggregationRule(BeliefWeightedParams{selector, 0.1});
}

}  // namespace fairagg
