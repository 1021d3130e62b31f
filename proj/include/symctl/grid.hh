/*
 * grid.hh
 *
 * Uniform hyper-rectangular cell covers and input discretizations.
 */

#ifndef SYMCTL_GRID_HH_
#define SYMCTL_GRID_HH_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symctl/problem.hh"
#include "symctl/sets.hh"

namespace symctl {

/*
 * Edge: cells [lo + i*eta, lo + (i+1)*eta], i < ceil((hi-lo)/eta), the last
 *       one clipped at hi.
 * Node: cells centered at lo + i*eta, clipped to [lo, hi] at both ends;
 *       K = [0,1] with eta = 1/N gives N+1 cells.
 */
enum class CellAlignment { Edge, Node };

CellAlignment parse_alignment(const std::string& name);
std::string to_string(CellAlignment a);

/**
 * @brief Cover of the closed box [lower, upper] by closed cells.
 *
 * Cells are numbered row-major with axis 0 slowest. Index cell_count() is the
 * overflow cell standing for everything outside the domain. Neighbouring cells
 * share faces, so members() may return several cells while quantize() picks
 * exactly one (half-open assignment).
 */
class GridCover {
 public:
  GridCover() = default;
  /* throws InputError unless lower < upper and eta > 0 componentwise */
  GridCover(Point lower, Point upper, Point eta, CellAlignment alignment = CellAlignment::Edge);

  std::size_t dim() const noexcept { return lower_.size(); }
  std::size_t cell_count() const noexcept { return cell_count_; }
  StateId overflow() const noexcept { return static_cast<StateId>(cell_count_); }
  /* cells plus overflow */
  std::size_t state_count() const noexcept { return cell_count_ + 1; }

  const Point& lower() const noexcept { return lower_; }
  const Point& upper() const noexcept { return upper_; }
  const Point& eta() const noexcept { return eta_; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  CellAlignment alignment() const noexcept { return alignment_; }

  bool in_domain(std::span<const double> x) const;
  /* closed cell; throws InputError for the overflow index */
  Box cell(StateId id) const;
  Point center(StateId id) const { return cell(id).center(); }

  /* deterministic cell for x, overflow if x is outside the domain */
  StateId quantize(std::span<const double> x) const;
  /* every closed cell containing x; {overflow} outside the domain */
  std::vector<StateId> members(std::span<const double> x) const;
  /* closed cells meeting the box; appends overflow if the box leaves the domain */
  std::vector<StateId> cells_meeting(const Box& box) const;

  StateId flat_index(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> multi_index(StateId id) const;

 private:
  double axis_lo(std::size_t axis, std::size_t i) const;
  double axis_hi(std::size_t axis, std::size_t i) const;

  Point lower_, upper_, eta_;
  CellAlignment alignment_ = CellAlignment::Edge;
  std::vector<std::size_t> counts_;
  std::size_t cell_count_ = 0;
};

/**
 * @brief Finite input alphabet drawn from a union of hyper-intervals.
 *
 * Each piece [a,b] is discretized per axis by an endpoint-inclusive linspace
 * with ceil((b-a)/mu)+1 points (one point for degenerate axes). radius is the
 * largest infinity-norm distance from a point of U to its nearest
 * representative inside the same piece.
 */
struct InputGrid {
  std::vector<Box> pieces;
  Point mu;
  std::vector<Point> representatives;
  double radius = 0.0;

  std::size_t size() const noexcept { return representatives.size(); }
  std::size_t dim() const noexcept { return pieces.empty() ? 0 : pieces.front().dim(); }
};

InputGrid discretize_inputs(std::vector<Box> pieces, Point mu);

}  // namespace symctl

#endif  // SYMCTL_GRID_HH_
