#ifndef FAIRAGG_TOLERANCES_HPP_
#define FAIRAGG_TOLERANCES_HPP_

namespace fairagg {

// Beliefs must sum to one and normalized utilities sit in [0,1] up to this.
inline constexpr double kProbabilityTolerance = 1e-12;
// Agreement of quantities computed along different arithmetic paths.
inline constexpr double kDerivedTolerance = 1e-9;
// Default gap below which two rule scores count as a tie.
inline constexpr double kStrictThreshold = 1e-12;

}  // namespace fairagg

#endif  // FAIRAGG_TOLERANCES_HPP_
