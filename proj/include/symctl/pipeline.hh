/*
 * pipeline.hh
 *
 * config -> cover, inputs, transitions -> abstraction -> solve, plus the
 * matching concrete plant for closed-loop runs.
 */

#ifndef SYMCTL_PIPELINE_HH_
#define SYMCTL_PIPELINE_HH_

#include <string>
#include <vector>

#include "symctl/abstraction.hh"
#include "symctl/config.hh"
#include "symctl/simulate.hh"
#include "symctl/solver.hh"

namespace symctl {

GridCover make_cover(const Config& cfg);
InputGrid make_inputs(const Config& cfg);
TransitionFn make_transitions(const Config& cfg, const GridCover& cover, const InputGrid& inputs);

/* disturbance held constant over `pieces` equal parts of a sampling period */
Plant make_plant(const Config& cfg, std::size_t pieces = 10);
/* concrete successor under the given disturbance policy */
SuccessorSampler make_sampler(const Config& cfg, DisturbancePolicy policy, std::size_t pieces = 10);

struct Synthesis {
  Abstraction abstraction;
  SolveResult solution;
  std::string queue;  // discipline actually used
  double abstraction_seconds = 0.0;
  double solve_seconds = 0.0;
  std::vector<std::string> warnings;
};

Synthesis synthesize(const Config& cfg);

/* abstraction.focp, abstraction.cover, values.txt, controller.txt in dir */
void write_synthesis(const std::string& dir, const Synthesis& s);

}  // namespace symctl

#endif  // SYMCTL_PIPELINE_HH_
