/*
 * run.hh
 *
 * Finite prefixes of closed-loop runs and the cost functional.
 */

#ifndef SYMCTL_RUN_HH_
#define SYMCTL_RUN_HH_

#include <cstdint>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/costs.hh"
#include "symctl/problem.hh"
#include "symctl/sets.hh"

namespace symctl {

/**
 * @brief Run prefix (u, v, x) of a finite problem.
 *
 * len(states) == len(inputs) + 1 and len(inputs) <= len(stop) <= len(states).
 * A stop sequence without a 1 marks a run that never stops.
 */
struct Run {
  std::vector<InputId> inputs;
  std::vector<std::uint8_t> stop;
  std::vector<StateId> states;
};

/* same over R^n, for concrete closed loops */
struct ConcreteRun {
  std::vector<Point> inputs;
  std::vector<std::uint8_t> stop;
  std::vector<Point> states;
};

/**
 * G(x(T)) + sum_{t<T} g(x(t), x(t+1), u(t)) with T the first stop instant, or
 * inf if the run never stops. Summation runs in increasing t.
 *
 * Throws InputError on length mismatches, out-of-range indices, and steps
 * x(t+1) not in F(x(t), u(t)) before T.
 */
ExtendedCost eval_cost_functional(const Run& run, const FiniteProblem& problem);
ExtendedCost eval_cost_functional(const ConcreteRun& run, const CostModel& costs);

}  // namespace symctl

#endif  // SYMCTL_RUN_HH_
