#ifndef FAIRAGG_WELFARE_ANALYSIS_HPP_
#define FAIRAGG_WELFARE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairagg/core_model.hpp"
#include "fairagg/rules.hpp"

namespace fairagg {

// How probe problems realize a utility vector.
enum class ProbeBeliefs {
  kTwoCell,          // partition {E, Ec} with belief_i(E) = u_i
  kSplitComplement,  // same, with Ec split in two halves
};

struct ProbeAct {
  Problem problem;
  Act act;
};

// Problem with common values u(best) = 1, u(worst) = 0 and an act whose
// normalized profile is u. Throws InvalidVector outside [0,1]^n.
ProbeAct probe_act(const std::vector<double>& u, ProbeBeliefs mode = ProbeBeliefs::kTwoCell);

// The rule's score on the probe act for u.
double psi_of_rule(const AggregationRule& rule, const std::vector<double>& u,
                   ProbeBeliefs mode = ProbeBeliefs::kTwoCell);

// Map from [0,1]^n to the reals, affinely calibrated so that psi(0) = 0 and
// psi(1) = 1 whenever psi(1) > psi(0).
class WelfareFunction {
 public:
  using Raw = std::function<double(const std::vector<double>&)>;

  WelfareFunction(std::size_t n, Raw raw, std::string name = "psi");

  double operator()(const std::vector<double>& u) const;
  double raw(const std::vector<double>& u) const { return raw_(u); }
  std::size_t dimension() const { return n_; }
  bool calibrated() const { return calibrated_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t n_;
  Raw raw_;
  std::string name_;
  double offset_ = 0.0;
  double scale_ = 1.0;
  bool calibrated_ = false;
};

WelfareFunction welfare_of_rule(const AggregationRule& rule, std::size_t n,
                                ProbeBeliefs mode = ProbeBeliefs::kTwoCell);

enum class WelfareProperty {
  kMonotone,
  kQuasiconcave,
  kHomogeneous,
  kTranslationInvariant,
  kSymmetric,
};

std::string_view property_name(WelfareProperty p);
const std::vector<WelfareProperty>& all_welfare_properties();

enum class VerdictStatus { kNoViolationFound, kViolated };

std::string_view verdict_name(VerdictStatus s);

// Witness layout per property:
//   monotone:      points = {u, v}           (u >> v, psi(u) <= psi(v))
//   quasiconcave:  points = {u, v}, t        (psi(tu+(1-t)v) < min - tol)
//   homogeneous:   points = {u}, alpha
//   translation:   points = {u}, c
//   symmetric:     points = {u, permuted u}
struct PropertyVerdict {
  WelfareProperty property;
  VerdictStatus status = VerdictStatus::kNoViolationFound;
  std::vector<std::vector<double>> points;
  double scalar = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

PropertyVerdict check_property(const WelfareFunction& psi, WelfareProperty property,
                               std::size_t samples, std::uint64_t seed);
PropertyVerdict check_monotone(const WelfareFunction& psi, std::size_t samples,
                               std::uint64_t seed);
PropertyVerdict check_quasiconcave(const WelfareFunction& psi, std::size_t samples,
                                   std::uint64_t seed);
PropertyVerdict check_homogeneous(const WelfareFunction& psi, std::size_t samples,
                                  std::uint64_t seed);
PropertyVerdict check_translation_invariant(const WelfareFunction& psi, std::size_t samples,
                                            std::uint64_t seed);
PropertyVerdict check_symmetric(const WelfareFunction& psi, std::size_t samples,
                                std::uint64_t seed);

// Re-evaluates a stored witness; true when it still shows a violation.
bool witness_violates(const WelfareFunction& psi, const PropertyVerdict& verdict);

struct PropertyRow {
  std::string name;
  std::vector<PropertyVerdict> verdicts;  // in all_welfare_properties() order
};

std::vector<PropertyRow> property_matrix(
    const std::vector<std::pair<std::string, WelfareFunction>>& functions, std::size_t samples,
    std::uint64_t seed);

// Directions in [0,1]^n: coordinate vectors, their complements, then seeded
// random points rescaled to have min 0 and max 1.
std::vector<std::vector<double>> make_direction_grid(std::size_t n, std::size_t count,
                                                     std::uint64_t seed);

struct Halfspace {
  std::vector<double> direction;  // u in [0,1]^n
  double bound;                   // psi(u); constraint mu . u >= bound
};

struct RecoveredWeightSet {
  std::size_t dimension = 0;
  std::vector<Halfspace> halfspaces;
  // Vertices of the intersection with the simplex (n <= 3 only).
  std::vector<std::vector<double>> vertices;
  bool has_vertices = false;
  std::size_t grid_size = 0;
  std::size_t refinement_cuts = 0;
};

struct RecoveryOptions {
  bool refine = true;                   // adaptive corner cuts (n = 3)
  std::size_t support_check_samples = 500;
  std::uint64_t support_check_seed = 7;
};

// Outer approximation {mu in simplex : mu . u >= psi(u) for all grid u}.
// Throws NotSupportFunction when psi fails homogeneity or translation
// invariance, or when the halfspaces are inconsistent.
RecoveredWeightSet recover_weight_set(const WelfareFunction& psi,
                                      const std::vector<std::vector<double>>& grid,
                                      const RecoveryOptions& options = {});

WeightSet to_weight_set(const RecoveredWeightSet& recovered);

// Euclidean distance from a point to the convex hull of a finite set.
double distance_to_hull(const std::vector<double>& point,
                        const std::vector<std::vector<double>>& hull);

double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b);
double hausdorff_distance(const WeightSet& a, const WeightSet& b);
double hausdorff_distance(const WeightSet& a, const RecoveredWeightSet& b);

std::vector<std::vector<double>> vertex_list(const WeightSet& set);

}  // namespace fairagg

#endif  // FAIRAGG_WELFARE_ANALYSIS_HPP_
