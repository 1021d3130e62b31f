/*
 * costs.cc
 */

#include "symctl/costs.hh"

#include "symctl/errors.hh"

namespace symctl {

ExtendedCost CostModel::terminal(std::span<const double> p) const {
  return target_.contains(p) && !obstacle_.contains(p) ? ExtendedCost::zero() : ExtendedCost::infinity();
}

double CostModel::running_value(std::span<const double> u) const {
  switch (kind_) {
    case RunningCostKind::Zero:
      return 0.0;
    case RunningCostKind::Unit:
      return 1.0;
    case RunningCostKind::InputSquared: {
      double s = 0.0;
      for (double v : u) s += v * v;
      return s;
    }
  }
  return 0.0;
}

ExtendedCost CostModel::running(std::span<const double> p, std::span<const double>,
                                std::span<const double> u) const {
  if (obstacle_.contains(p)) return ExtendedCost::infinity();
  return ExtendedCost(running_value(u));
}

bool CostModel::terminal_finite_on(const Box& box) const {
  return target_.box_inside(box) && !obstacle_.box_meets(box);
}

bool CostModel::running_finite_on(const Box& box) const { return !obstacle_.box_meets(box); }

bool CostModel::infinite_everywhere_on(const Box& box) const {
  /* g = inf on the box iff the box lies in M, and then the box misses D\M too */
  return obstacle_.box_inside(box);
}

CostModel make_reach_avoid(SetPredicate target, SetPredicate obstacle) {
  return CostModel(std::move(target), std::move(obstacle), RunningCostKind::Zero);
}

CostModel make_min_time(SetPredicate target, SetPredicate obstacle) {
  return CostModel(std::move(target), std::move(obstacle), RunningCostKind::Unit);
}

CostModel make_energy_entry(SetPredicate target, SetPredicate obstacle) {
  return CostModel(std::move(target), std::move(obstacle), RunningCostKind::InputSquared);
}

RunningCostKind parse_cost_kind(const std::string& name) {
  if (name == "reach_avoid") return RunningCostKind::Zero;
  if (name == "min_time") return RunningCostKind::Unit;
  if (name == "energy_entry") return RunningCostKind::InputSquared;
  throw InputError("unknown cost_kind '" + name + "'");
}

std::string to_string(RunningCostKind kind) {
  switch (kind) {
    case RunningCostKind::Zero:
      return "reach_avoid";
    case RunningCostKind::Unit:
      return "min_time";
    case RunningCostKind::InputSquared:
      return "energy_entry";
  }
  return "unknown";
}

}  // namespace symctl
