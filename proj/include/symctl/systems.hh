/*
 * systems.hh
 *
 * Built-in plants: the logistic map, the perturbed inverted pendulum and
 * the homicidal chauffeur game, with their default constants and the
 * discretization presets p1..p4.
 */

#ifndef SYMCTL_SYSTEMS_HH_
#define SYMCTL_SYSTEMS_HH_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symctl/abstraction.hh"
#include "symctl/costs.hh"
#include "symctl/grid.hh"
#include "symctl/reach.hh"
#include "symctl/sets.hh"

namespace symctl {

struct Preset {
  std::string name;
  Point eta;
  double mu = 0.0;
  std::size_t k = 1;
};

using DiscreteMap = std::function<Point(std::span<const double> x, std::span<const double> u)>;

struct PlantModel {
  std::string name;
  bool discrete = false;  // x+ = map(x,u) instead of a sampled ODE
  SampledSystem sys;      // continuous plants (sys.dim is the state dimension for both kinds)
  DiscreteMap map;
  BoxImage image;
  std::vector<Box> input_pieces;
  Box domain;  // closure of K, covered by the grid
  CellAlignment alignment = CellAlignment::Edge;
  SetPredicate target;
  SetPredicate obstacle;
  bool obstacle_outside_domain = false;  // M is the complement of the open K
  RunningCostKind cost_kind = RunningCostKind::Unit;
  double A2 = 0.0;
  double A3 = 0.0;
  ReachOptions reach;  // theta, gamma defaults
  std::vector<Preset> presets;

  std::size_t dim() const noexcept { return sys.dim; }
  const Preset& preset(const std::string& name) const;
  CostModel costs() const { return CostModel(target, obstacle, cost_kind); }
};

PlantModel builtin_plant(const std::string& name);
std::vector<std::string> builtin_plant_names();

}  // namespace symctl

#endif  // SYMCTL_SYSTEMS_HH_
