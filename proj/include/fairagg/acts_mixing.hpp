#ifndef FAIRAGG_ACTS_MIXING_HPP_
#define FAIRAGG_ACTS_MIXING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fairagg/core_model.hpp"

namespace fairagg {

// Result of splitting cells. parent[k] is the original cell of refined cell
// k; child_rank[k] is 0 for the child that received the fraction t (or for an
// untouched cell) and 1 for its sibling.
struct RefinementMap {
  Problem refined;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> child_rank;
  std::size_t original_cells = 0;
};

// Splits one cell into two children; the first child gets fraction t of the
// cell's mass for every individual. t must lie strictly inside (0, 1).
RefinementMap refine_proportional(const Problem& problem, std::size_t cell, double t);
RefinementMap refine_proportional(const Problem& problem, std::string_view cell, double t);

// Splits every cell at the same fraction t in (0, 1].
RefinementMap refine_every_cell(const Problem& problem, double t);

// Re-expresses an act of the original problem on the refined partition.
Act lift_act(const RefinementMap& map, const Act& act);

struct EventInProblem {
  Problem problem;
  std::vector<std::size_t> event;  // cell indices, increasing
};

struct RefinedEvent {
  RefinementMap map;
  std::vector<std::size_t> event;
};

// Refines every cell at 1/2 and collects one child per cell, so the event has
// probability 1/2 for every individual.
RefinedEvent coin_toss_event(const Problem& problem);

// x on the event, y elsewhere.
Act binary_act(const Problem& problem, std::size_t x, const std::vector<std::size_t>& event,
               std::size_t y);

struct PseudoMixture {
  RefinementMap map;
  Act act;
};

// Splits each cell with fraction alpha, keeps f on the alpha-children and
// puts x on the rest. alpha must lie in (0, 1].
PseudoMixture pseudo_mixed_act(const Problem& problem, const Act& f, std::size_t x,
                               double alpha);

// Same construction on an existing refine_every_cell split, so that several
// acts can be mixed inside one refined problem.
Act mix_on_split(const RefinementMap& split, const Act& f, std::size_t x);

// Two-cell problem {E, Ec} with belief_i(E) = q[i].
EventInProblem problem_with_event(std::vector<std::string> outcomes,
                                  std::vector<ValueFunction> values,
                                  const std::vector<double>& q);

struct EventsInProblem {
  Problem problem;
  std::vector<std::vector<std::size_t>> events;
};

// Product construction with 2^k cells: event j has probability q[j][i] for
// individual i and the k events are independent under every belief.
EventsInProblem problem_with_events(std::vector<std::string> outcomes,
                                    std::vector<ValueFunction> values,
                                    const std::vector<std::vector<double>>& q);

}  // namespace fairagg

#endif  // FAIRAGG_ACTS_MIXING_HPP_
