/*
 * abstraction.hh
 *
 * Finite abstractions over a GridCover: transitions from an over-approximating
 * callback, costs from Lipschitz bounds, and a conservatism certificate.
 */

#ifndef SYMCTL_ABSTRACTION_HH_
#define SYMCTL_ABSTRACTION_HH_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/costs.hh"
#include "symctl/grid.hh"
#include "symctl/problem.hh"
#include "symctl/reach.hh"
#include "symctl/relations.hh"

namespace symctl {

struct TransitionResult {
  std::vector<StateId> cells;  // any order, duplicates allowed
  double slack = 0.0;          // every listed cell is this close to the true image
  bool escaping = false;
};

/* (cell, input index) -> cells meeting an over-approximation of F1(cell, u) */
using TransitionFn = std::function<TransitionResult(StateId cell, std::size_t input)>;

struct ConservatismCertificate {
  double input_radius = 0.0;
  double terminal_slack = 0.0;    // A2 |eta|
  double running_slack = 0.0;     // 2 A3 |eta|
  double transition_slack = 0.0;  // max over computed pairs
  double max_diameter = 0.0;      // over cells that satisfy the finiteness condition
  /* gamma is trusted, not derived from a remainder bound */
  bool numerical_budget_unverified = false;

  double rho() const noexcept;
};

struct AbstractionOptions {
  double A2 = 0.0;
  double A3 = 0.0;
  unsigned workers = 1;
};

struct AbstractionStats {
  std::size_t gated_cells = 0;  // cells where G and g are infinite throughout
  std::size_t escaping_pairs = 0;
  std::size_t computed_pairs = 0;
};

struct Abstraction {
  GridCover cover;
  InputGrid inputs;
  FiniteProblem problem;
  ConservatismCertificate certificate;
  AbstractionStats stats;
};

/* G2(cell) and the per-pair g2(cell,.,u); the overflow state gets inf */
struct AbstractCosts {
  std::vector<ExtendedCost> terminal;
  std::vector<ExtendedCost> pair_cost;  // state-major, one per (state, input)
};

AbstractCosts abstract_costs(const CostModel& costs, const GridCover& cover, const InputGrid& inputs, double A2,
                             double A3);

/* throws SoundnessAlarm when the callback leaves a pair without successors */
Abstraction build_abstraction(const TransitionFn& transitions, const GridCover& cover, const InputGrid& inputs,
                              const CostModel& costs, const AbstractionOptions& opt = {});

/* callback backed by attain_over(); escaping pairs go to overflow */
TransitionFn make_sampled_transitions(const SampledSystem& sys, const GridCover& cover, const InputGrid& inputs,
                                      const ReachOptions& opt);

/* exact image of a box under a map; must return a superset of F(box, u) */
using BoxImage = std::function<Box(const Box& box, std::span<const double> u)>;
TransitionFn make_map_transitions(const GridCover& cover, const InputGrid& inputs, BoxImage image);

/* one concrete successor of x under input u */
using SuccessorSampler = std::function<Point(std::span<const double> x, std::span<const double> u, std::mt19937_64& rng)>;

struct ConservatismCheck {
  std::size_t samples_per_axis = 5;  // lattice including the cell corners
  std::size_t draws_per_sample = 1;
  std::uint64_t seed = 1;
};

/* conditions (i)-(v) against sampled concrete data; tags "(i)".."(v)" */
Verdict check_conservatism(const FiniteProblem& problem, const GridCover& cover, const InputGrid& inputs,
                           const CostModel& costs, const SuccessorSampler& sampler, double rho,
                           const ConservatismCheck& opt = {});

/* "key = value" description of the cover, inputs and certificate */
void write_sidecar(std::ostream& os, const Abstraction& abs);

}  // namespace symctl

#endif  // SYMCTL_ABSTRACTION_HH_
