/*
 * config.hh
 *
 * Sectioned "key = value" problem configurations:
 *
 *   [system]  dynamics, preset, tau, w, A0, A1, K, Kprime_margin, eps
 *   [grid]    eta, alignment
 *   [inputs]  U, mu
 *   [costs]   cost_kind, target, obstacle, A2, A3
 *   [reach]   k, theta, gamma, integrator_steps, max_splits
 *   [solve]   queue, workers
 *
 * Only `dynamics` is required; everything else defaults to the built-in
 * plant and its preset (p1, or n40 for the logistic map).
 */

#ifndef SYMCTL_CONFIG_HH_
#define SYMCTL_CONFIG_HH_

#include <iosfwd>
#include <string>

#include "symctl/abstraction.hh"
#include "symctl/grid.hh"
#include "symctl/reach.hh"
#include "symctl/systems.hh"

namespace symctl {

struct Config {
  PlantModel plant;
  std::string preset;
  Point eta;
  Point mu;
  ReachOptions reach;
  AbstractionOptions abstraction;
  std::string queue = "auto";  // auto | heap | fifo

  CostModel costs() const { return plant.costs(); }
};

/* throws InputError on unknown sections or keys and malformed values */
Config load_config(std::istream& is);
Config load_config_file(const std::string& path);
/* built-in plant with a preset, no file */
Config default_config(const std::string& dynamics, const std::string& preset = "");

}  // namespace symctl

#endif  // SYMCTL_CONFIG_HH_
