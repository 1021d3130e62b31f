/*
 * run.cc
 */

#include "symctl/run.hh"

#include <algorithm>
#include <string>

#include "symctl/errors.hh"

namespace symctl {

namespace {

template <class R>
std::size_t stop_instant(const R& run) {
  if (run.states.size() != run.inputs.size() + 1)
    throw InputError("run needs len(states) == len(inputs) + 1");
  if (run.stop.size() < run.inputs.size() || run.stop.size() > run.states.size())
    throw InputError("run needs len(inputs) <= len(stop) <= len(states)");
  auto it = std::find(run.stop.begin(), run.stop.end(), std::uint8_t{1});
  return it == run.stop.end() ? run.stop.size() : std::size_t(it - run.stop.begin());
}

}  // namespace

ExtendedCost eval_cost_functional(const Run& run, const FiniteProblem& problem) {
  const auto T = stop_instant(run);
  for (auto x : run.states)
    if (x >= problem.state_count()) throw InputError("run state out of range");
  for (auto u : run.inputs)
    if (u >= problem.input_count()) throw InputError("run input out of range");
  if (T == run.stop.size()) return ExtendedCost::infinity();

  ExtendedCost total;
  for (std::size_t t = 0; t < T; ++t) {
    if (!problem.is_successor(run.states[t], run.inputs[t], run.states[t + 1]))
      throw InputError("run step " + std::to_string(t) + " is not a transition of the problem");
    total += problem.running(run.states[t], run.states[t + 1], run.inputs[t]);
  }
  return problem.terminal(run.states[T]) + total;
}

ExtendedCost eval_cost_functional(const ConcreteRun& run, const CostModel& costs) {
  const auto T = stop_instant(run);
  if (T == run.stop.size()) return ExtendedCost::infinity();
  ExtendedCost total;
  for (std::size_t t = 0; t < T; ++t) total += costs.running(run.states[t], run.states[t + 1], run.inputs[t]);
  return costs.terminal(run.states[T]) + total;
}

}  // namespace symctl
