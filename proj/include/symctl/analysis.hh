/*
 * analysis.hh
 *
 * Exact value oracles for the logistic-map minimum time problem and the
 * hypograph distance used to compare value functions on a sample grid.
 */

#ifndef SYMCTL_ANALYSIS_HH_
#define SYMCTL_ANALYSIS_HH_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/sets.hh"

namespace symctl {

/* finite union of open intervals, sorted and disjoint */
class IntervalUnion1D {
 public:
  struct Part {
    double lo, hi;
    friend bool operator==(const Part&, const Part&) = default;
  };

  IntervalUnion1D() = default;
  explicit IntervalUnion1D(std::vector<Part> parts);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  bool contains(double x) const noexcept;
  /* closed [a,b] inside one open part */
  bool covers(double a, double b) const noexcept;
  bool subset_of(const IntervalUnion1D& other) const noexcept;
  IntervalUnion1D unite(const IntervalUnion1D& other) const;

  friend bool operator==(const IntervalUnion1D&, const IntervalUnion1D&) = default;

 private:
  std::vector<Part> parts_;
};

/* 4p(1-p) */
inline double logistic_map(double p) { return 4.0 * p * (1.0 - p); }

/* image of [lo,hi] inside [0,1], rounded outward */
Box logistic_image(const Box& box);

/* V^{-1}([0;T]) for T = 0..t_max, target D = (a,b) with 0 < a < b < 1 */
std::vector<IntervalUnion1D> logistic_exact_sublevels(double a, double b, std::size_t t_max);

/* smallest T with x in sublevels[T], inf if there is none */
ExtendedCost logistic_exact_value(const std::vector<IntervalUnion1D>& sublevels, double x);

/* min{T : F^T(x) in (a,b)} by iterating the map in 50-digit arithmetic;
 * inf if the orbit does not enter within max_steps */
ExtendedCost logistic_orbit_value(double x, double a, double b, std::size_t max_steps);

/* sup of V over the closed interval [lo,hi]; inf if the outward-rounded
 * image sets have not left (a,b)'s complement within max_steps */
ExtendedCost logistic_sup_value(double lo, double hi, double a, double b, std::size_t max_steps = 4096);

/* nodes i/intervals, i = 0..intervals, of the unit interval */
std::vector<Point> unit_grid(std::size_t intervals);
/* orbit values at the given points */
std::vector<ExtendedCost> logistic_reference(std::span<const Point> xs, double a, double b,
                                             std::size_t max_steps = 512);

struct HypoDistance {
  double eps = 0.0;
  double cap = 0.0;         // ceiling applied to both functions
  bool cap_active = false;  // some sample was infinite
};

/*
 * Smallest eps such that every point (x_i, W_i) of hypo W lies within eps of
 * hypo V in the max metric on X x R, restricted to the sample points. Both
 * functions are capped at 2 * (largest finite sample) + 1. Throws
 * SoundnessAlarm if W < V at some sample.
 */
HypoDistance hypo_distance(std::span<const Point> xs, std::span<const ExtendedCost> w,
                           std::span<const ExtendedCost> v);

/* "x,<label>" rows, one per sample (first coordinate only for n > 1: x1..xn) */
void write_hypograph_csv(std::ostream& os, std::span<const Point> xs, std::span<const ExtendedCost> values,
                         const char* label);
/* "T,a,b" rows */
void write_sublevels_csv(std::ostream& os, const std::vector<IntervalUnion1D>& sublevels);

}  // namespace symctl

#endif  // SYMCTL_ANALYSIS_HH_
