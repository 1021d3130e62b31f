/*
 * simulate.hh
 *
 * Closed-loop execution of a refined controller against the perturbed plant.
 */

#ifndef SYMCTL_SIMULATE_HH_
#define SYMCTL_SIMULATE_HH_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/costs.hh"
#include "symctl/grid.hh"
#include "symctl/relations.hh"
#include "symctl/sets.hh"

namespace symctl {

class DisturbancePolicy {
 public:
  enum class Kind { Zero, UniformRandom, ExtremalCorners };

  DisturbancePolicy() = default;
  explicit DisturbancePolicy(Kind kind) : kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  /* a vector in [-w, w] */
  Point sample(std::span<const double> w, std::mt19937_64& rng) const;

 private:
  Kind kind_ = Kind::Zero;
};

DisturbancePolicy parse_policy(const std::string& name);
std::string to_string(DisturbancePolicy::Kind kind);

/* one sampling period: x+ from x, input u and one disturbance per piece */
struct Plant {
  std::size_t dim = 0;
  Point w;                            // disturbance bound, empty for exact maps
  std::size_t disturbance_pieces = 0;  // per sampling period
  std::function<Point(std::span<const double> x, std::span<const double> u, const std::vector<Point>& d)> step;
};

struct Trajectory {
  std::vector<Point> states;       // x(0..T)
  std::vector<Point> inputs;       // u(0..T-1)
  std::vector<ExtendedCost> cum;   // cost accumulated before x(t); last entry includes G(x(T))
  bool stopped = false;            // false: max_steps reached, cost = inf
  ExtendedCost cost = ExtendedCost::infinity();
  ExtendedCost bound = ExtendedCost::infinity();

  std::size_t stop_time() const noexcept { return inputs.size(); }
};

struct ClosedLoop {
  const Plant* plant = nullptr;
  const RefinedController* controller = nullptr;
  const CostModel* costs = nullptr;
  const InputGrid* inputs = nullptr;
  std::span<const ExtendedCost> values;  // abstract W, for the bound
};

/* rng drives the disturbance; throws InputError on size mismatches */
Trajectory run_closed_loop(const ClosedLoop& loop, std::span<const double> x0, const DisturbancePolicy& policy,
                           std::mt19937_64& rng, std::size_t max_steps);

struct VerifyOptions {
  std::size_t draws = 1;  // disturbance realizations per initial state
  DisturbancePolicy policy;
  std::uint64_t seed = 1;
  std::size_t max_steps = 10000;
  double tolerance = 0.0;  // cost <= bound + tolerance
  unsigned workers = 1;
};

struct VerifyReport {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::size_t non_stopping = 0;
  double max_ratio = 0.0;  // cost / bound over runs with 0 < bound < inf
  ExtendedCost max_cost = ExtendedCost::zero();
  ExtendedCost max_bound = ExtendedCost::zero();
  std::vector<std::size_t> violating_runs;  // indices into the run list
};

/* run i uses initial state initial[i / draws] and an rng seeded by (seed, i) */
VerifyReport batch_verify(const ClosedLoop& loop, const std::vector<Point>& initial, const VerifyOptions& opt,
                          std::vector<Trajectory>* trajectories = nullptr);

/* deterministic rng for run index i */
std::mt19937_64 run_rng(std::uint64_t seed, std::uint64_t index);

/* uniform samples from cells whose value is finite */
std::vector<Point> sample_winning_states(const GridCover& cover, std::span<const ExtendedCost> values,
                                         std::size_t count, std::uint64_t seed);

/* t,x1..xn,u,stop,cum_cost (u1..um for multi-input plants) */
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);
void write_report(std::ostream& os, const VerifyReport& r);

}  // namespace symctl

#endif  // SYMCTL_SIMULATE_HH_
