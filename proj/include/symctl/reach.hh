/*
 * reach.hh
 *
 * Attainable-set over-approximation for sampled systems
 *   xdot in f(x,u) + [-w,w]
 * by nominal integration of the center and a growth bound on the radius.
 */

#ifndef SYMCTL_REACH_HH_
#define SYMCTL_REACH_HH_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symctl/sets.hh"

namespace symctl {

using VectorField = std::function<void(std::span<const double> x, std::span<const double> u, std::span<double> dx)>;
/* exact nominal flow phi(t, x, u), optional */
using NominalFlow =
    std::function<void(std::span<const double> x, std::span<const double> u, double t, std::span<double> out)>;

struct SampledSystem {
  std::string name;
  std::size_t dim = 0;
  std::size_t input_dim = 0;
  VectorField f;
  NominalFlow exact_flow;  // used instead of RK4 when set
  Point w;                 // disturbance bound
  double tau = 0.0;
  Point A0;
  std::vector<double> A1;  // row-major dim x dim
  Box K;                   // closure of the domain
  Box Kprime;              // safety hull
  double eps = 0.0;        // hull margin

  /* throws InputError: sizes, tau > 0, w >= 0, A1 off-diagonals >= 0,
   * and B(K, tau |A0|) inside K' */
  void validate() const;
};

struct IntervalBox {
  Point center;
  Point radius;

  Box box() const;
};

struct ReachOptions {
  std::size_t k = 1;                 // substeps per sampling period
  double theta = 1.0;                // split when a radius exceeds theta |eta|
  double eta_norm = 0.0;             // |eta| of the cover, 0 disables splitting
  double gamma = 1e-6;               // numerical-error budget per substep
  std::size_t integrator_steps = 5;  // RK4 steps per substep
  std::size_t max_splits = 64;       // intervals per (cell,input)
};

/* soft checks; currently tau/k <= eps/|A0| */
std::vector<std::string> reach_warnings(const SampledSystem& sys, const ReachOptions& opt);

/* RK4 for xdot = f(x,u), or the exact flow if the system has one;
 * throws NumericalError on non-finite states */
Point integrate_nominal(const SampledSystem& sys, std::span<const double> x0, std::span<const double> u, double t,
                        std::size_t substeps);

/* RK4 for xdot = f(x,u) + d(s) with d piecewise constant over the
 * disturbances.size() equal pieces of [0,t]; each piece uses `steps` RK4 steps */
Point integrate_perturbed(const SampledSystem& sys, std::span<const double> x0, std::span<const double> u, double t,
                          const std::vector<Point>& disturbances, std::size_t steps);

/* upper bound on the solution of rdot = A1 r + w at time t (series with a
 * tail bound, split into `substeps` pieces); w is dropped when
 * with_disturbance is false */
Point growth_bound(const SampledSystem& sys, std::span<const double> r0, double t, std::size_t substeps,
                   bool with_disturbance = true);

struct ReachResult {
  std::vector<IntervalBox> boxes;
  /* every point of every box lies within this distance of a point that is
   * actually attainable (up to the trusted gamma budget) */
  double slack = 0.0;
  bool escaping = false;     // left B(K', eps) at a substep boundary
  bool split_abort = false;  // more than max_splits intervals
};

ReachResult attain_over(const SampledSystem& sys, const IntervalBox& cell, std::span<const double> u,
                        const ReachOptions& opt);

}  // namespace symctl

#endif  // SYMCTL_REACH_HH_
