/*
 * costs.hh
 *
 * Concrete running and terminal cost functions built from a target set D and
 * an obstacle set M: reach-avoid, minimum time and actuation energy.
 */

#ifndef SYMCTL_COSTS_HH_
#define SYMCTL_COSTS_HH_

#include <span>
#include <string>

#include "symctl/cost.hh"
#include "symctl/sets.hh"

namespace symctl {

enum class RunningCostKind {
  Zero,         // reach-avoid
  Unit,         // minimum time
  InputSquared  // actuation energy |u|^2
};

/**
 * @brief Cost pair (g, G) over R^n.
 *
 * G(p) = 0 if p in D\M, inf otherwise.
 * g(p,q,u) = r(u) if p not in M, inf otherwise, with r fixed by the kind.
 *
 * The running cost depends on (p,u) only, which the abstraction exploits to
 * store one cost per (cell,input) pair.
 */
class CostModel {
 public:
  CostModel(SetPredicate target, SetPredicate obstacle, RunningCostKind kind)
      : target_(std::move(target)), obstacle_(std::move(obstacle)), kind_(kind) {}

  ExtendedCost terminal(std::span<const double> p) const;
  ExtendedCost running(std::span<const double> p, std::span<const double> q,
                       std::span<const double> u) const;
  /* value of g on its finite region */
  double running_value(std::span<const double> u) const;

  /* box is contained in G^{-1}(R) */
  bool terminal_finite_on(const Box& box) const;
  /* box x R^n x {u} is contained in g^{-1}(R) */
  bool running_finite_on(const Box& box) const;
  /* G and g are inf everywhere on the box, for every input */
  bool infinite_everywhere_on(const Box& box) const;

  const SetPredicate& target() const noexcept { return target_; }
  const SetPredicate& obstacle() const noexcept { return obstacle_; }
  RunningCostKind kind() const noexcept { return kind_; }

 private:
  SetPredicate target_;
  SetPredicate obstacle_;
  RunningCostKind kind_;
};

CostModel make_reach_avoid(SetPredicate target, SetPredicate obstacle);
CostModel make_min_time(SetPredicate target, SetPredicate obstacle);
/* g = |u|^2 outside the obstacle */
CostModel make_energy_entry(SetPredicate target, SetPredicate obstacle);

/* "reach_avoid" | "min_time" | "energy_entry" */
RunningCostKind parse_cost_kind(const std::string& name);
std::string to_string(RunningCostKind kind);

}  // namespace symctl

#endif  // SYMCTL_COSTS_HH_
