#include "fairagg/acts_mixing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fairagg/errors.hpp"

namespace fairagg {

namespace {

std::string fresh_label(const std::set<std::string>& taken, std::string base) {
  while (taken.count(base)) base += "'";
  return base;
}

// Splits every cell flagged in `split` at fraction t.
RefinementMap split_cells(const Problem& problem, const std::vector<bool>& split, double t) {
  std::set<std::string> taken(problem.cells().begin(), problem.cells().end());
  std::vector<std::string> cells;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> rank;
  for (std::size_t c = 0; c < problem.num_cells(); ++c) {
    if (!split[c]) {
      cells.push_back(problem.cells()[c]);
      parent.push_back(c);
      rank.push_back(0);
      continue;
    }
    for (std::size_t r = 0; r < 2; ++r) {
      std::string label = fresh_label(taken, problem.cells()[c] + "/" + std::to_string(r));
      taken.insert(label);
      cells.push_back(std::move(label));
      parent.push_back(c);
      rank.push_back(r);
    }
  }

  std::vector<Individual> individuals;
  individuals.reserve(problem.num_individuals());
  for (const auto& ind : problem.individuals()) {
    Individual out{ind.values, Belief(cells.size())};
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const double p = ind.belief[parent[k]];
      if (!split[parent[k]]) {
        out.belief[k] = p;
      } else {
        out.belief[k] = rank[k] == 0 ? t * p : (1.0 - t) * p;
      }
    }
    individuals.push_back(std::move(out));
  }

  std::vector<bool> in_reference(problem.num_cells(), false);
  for (std::size_t c : problem.reference_event()) {
    if (c < in_reference.size()) in_reference[c] = true;
  }
  std::vector<std::size_t> reference;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (in_reference[parent[k]]) reference.push_back(k);
  }

  return RefinementMap{
      Problem(problem.outcomes(), std::move(cells), std::move(individuals), std::move(reference)),
      std::move(parent), std::move(rank), problem.num_cells()};
}

void check_probability_vector(const std::vector<double>& q, std::size_t n) {
  if (q.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n) + " probabilities, got " +
                    std::to_string(q.size()));
  }
  for (double v : q) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidProbability, "probability " + std::to_string(v));
    }
  }
}

}  // namespace

RefinementMap refine_proportional(const Problem& problem, std::size_t cell, double t) {
  if (cell >= problem.num_cells()) {
    throw Error(ErrorCode::kUnknownCell, "index " + std::to_string(cell));
  }
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(ErrorCode::kFractionOutOfRange, "t = " + std::to_string(t));
  }
  std::vector<bool> split(problem.num_cells(), false);
  split[cell] = true;
  return split_cells(problem, split, t);
}

RefinementMap refine_proportional(const Problem& problem, std::string_view cell, double t) {
  return refine_proportional(problem, problem.cell_index(cell), t);
}

RefinementMap refine_every_cell(const Problem& problem, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kFractionOutOfRange, "t = " + std::to_string(t));
  }
  return split_cells(problem, std::vector<bool>(problem.num_cells(), true), t);
}

Act lift_act(const RefinementMap& map, const Act& act) {
  if (act.size() != map.original_cells) {
    throw Error(ErrorCode::kPartitionMismatch,
                "act has " + std::to_string(act.size()) + " cells, original partition has " +
                    std::to_string(map.original_cells));
  }
  std::vector<std::size_t> out(map.parent.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = act[map.parent[k]];
  return Act(std::move(out));
}

RefinedEvent coin_toss_event(const Problem& problem) {
  RefinedEvent out{refine_every_cell(problem, 0.5), {}};
  for (std::size_t k = 0; k < out.map.parent.size(); ++k) {
    if (out.map.child_rank[k] == 0) out.event.push_back(k);
  }
  return out;
}

Act binary_act(const Problem& problem, std::size_t x, const std::vector<std::size_t>& event,
               std::size_t y) {
  if (x >= problem.num_outcomes()) throw Error(ErrorCode::kUnknownOutcome, "x");
  if (y >= problem.num_outcomes()) throw Error(ErrorCode::kUnknownOutcome, "y");
  std::vector<std::size_t> out(problem.num_cells(), y);
  for (std::size_t c : event) {
    if (c >= problem.num_cells()) {
      throw Error(ErrorCode::kUnknownCell, "index " + std::to_string(c));
    }
    out[c] = x;
  }
  return Act(std::move(out));
}

Act mix_on_split(const RefinementMap& split, const Act& f, std::size_t x) {
  if (x >= split.refined.num_outcomes()) {
    throw Error(ErrorCode::kUnknownOutcome, "index " + std::to_string(x));
  }
  Act lifted = lift_act(split, f);
  std::vector<std::size_t> out = lifted.outcomes();
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (split.child_rank[k] == 1) out[k] = x;
  }
  return Act(std::move(out));
}

PseudoMixture pseudo_mixed_act(const Problem& problem, const Act& f, std::size_t x,
                               double alpha) {
  check_act(problem, f);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kFractionOutOfRange, "alpha = " + std::to_string(alpha));
  }
  RefinementMap map = refine_every_cell(problem, alpha);
  Act act = mix_on_split(map, f, x);
  return PseudoMixture{std::move(map), std::move(act)};
}

EventInProblem problem_with_event(std::vector<std::string> outcomes,
                                  std::vector<ValueFunction> values,
                                  const std::vector<double>& q) {
  check_probability_vector(q, values.size());
  std::vector<Individual> individuals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    individuals.push_back({std::move(values[i]), Belief{q[i], 1.0 - q[i]}});
  }
  return EventInProblem{
      Problem(std::move(outcomes), {"E", "Ec"}, std::move(individuals)), {0}};
}

EventsInProblem problem_with_events(std::vector<std::string> outcomes,
                                    std::vector<ValueFunction> values,
                                    const std::vector<std::vector<double>>& q) {
  const std::size_t k = q.size();
  if (k == 0 || k > 16) {
    throw Error(ErrorCode::kInvalidConfig, "need between 1 and 16 events");
  }
  for (const auto& row : q) check_probability_vector(row, values.size());
  const std::size_t cells = std::size_t{1} << k;

  // Cell label lists membership bits, event 0 first; "1" means inside.
  std::vector<std::string> labels(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::string label = "w";
    for (std::size_t j = 0; j < k; ++j) label += ((c >> j) & 1U) ? '1' : '0';
    labels[c] = label;
  }
  std::vector<Individual> individuals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Belief belief(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      double m = 1.0;
      for (std::size_t j = 0; j < k; ++j) m *= ((c >> j) & 1U) ? q[j][i] : 1.0 - q[j][i];
      belief[c] = m;
    }
    individuals.push_back({std::move(values[i]), std::move(belief)});
  }
  std::vector<std::vector<std::size_t>> events(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < cells; ++c) {
      if ((c >> j) & 1U) events[j].push_back(c);
    }
  }
  return EventsInProblem{Problem(std::move(outcomes), std::move(labels), std::move(individuals)),
                         std::move(events)};
}

}  // namespace fairagg
