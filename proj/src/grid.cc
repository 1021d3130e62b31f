/*
 * grid.cc
 */

#include "symctl/grid.hh"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symctl/errors.hh"

namespace symctl {

namespace {
/* slack for counts computed from ratios such as 1 / (1/40) */
constexpr double kRatioSlack = 1e-9;
}  // namespace

CellAlignment parse_alignment(const std::string& name) {
  if (name == "edge") return CellAlignment::Edge;
  if (name == "node") return CellAlignment::Node;
  throw InputError("alignment must be 'edge' or 'node', got '" + name + "'");
}

std::string to_string(CellAlignment a) { return a == CellAlignment::Edge ? "edge" : "node"; }

GridCover::GridCover(Point lower, Point upper, Point eta, CellAlignment alignment)
    : lower_(std::move(lower)), upper_(std::move(upper)), eta_(std::move(eta)), alignment_(alignment) {
  const auto n = lower_.size();
  if (n == 0 || upper_.size() != n || eta_.size() != n)
    throw InputError("grid bounds and eta must have the same positive dimension");
  cell_count_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lower_[i] < upper_[i])) throw InputError("grid needs lower < upper on every axis");
    if (!(eta_[i] > 0.0) || !std::isfinite(eta_[i])) throw InputError("grid needs eta > 0 on every axis");
    double ratio = (upper_[i] - lower_[i]) / eta_[i];
    std::size_t c = alignment_ == CellAlignment::Edge
                        ? static_cast<std::size_t>(std::ceil(ratio - kRatioSlack))
                        : static_cast<std::size_t>(std::floor(ratio + 0.5 + kRatioSlack)) + 1;
    c = std::max<std::size_t>(c, 1);
    counts_.push_back(c);
    if (cell_count_ > std::numeric_limits<StateId>::max() / c) throw InputError("grid has too many cells");
    cell_count_ *= c;
  }
  if (cell_count_ + 1 > std::numeric_limits<StateId>::max()) throw InputError("grid has too many cells");
}

double GridCover::axis_lo(std::size_t axis, std::size_t i) const {
  if (i == 0) return lower_[axis];
  double off = alignment_ == CellAlignment::Edge ? double(i) : double(i) - 0.5;
  return std::min(lower_[axis] + off * eta_[axis], upper_[axis]);
}

double GridCover::axis_hi(std::size_t axis, std::size_t i) const {
  if (i + 1 == counts_[axis]) return upper_[axis];
  double off = alignment_ == CellAlignment::Edge ? double(i) + 1.0 : double(i) + 0.5;
  return std::min(lower_[axis] + off * eta_[axis], upper_[axis]);
}

bool GridCover::in_domain(std::span<const double> x) const {
  if (x.size() != dim()) throw InputError("point dimension does not match the grid");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  return true;
}

StateId GridCover::flat_index(std::span<const std::size_t> idx) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < dim(); ++a) flat = flat * counts_[a] + idx[a];
  return static_cast<StateId>(flat);
}

std::vector<std::size_t> GridCover::multi_index(StateId id) const {
  std::vector<std::size_t> idx(dim());
  std::size_t rest = id;
  for (std::size_t a = dim(); a-- > 0;) {
    idx[a] = rest % counts_[a];
    rest /= counts_[a];
  }
  return idx;
}

Box GridCover::cell(StateId id) const {
  if (id >= cell_count_) throw InputError("cell index out of range (overflow has no geometry)");
  auto idx = multi_index(id);
  Box b{Point(dim()), Point(dim())};
  for (std::size_t a = 0; a < dim(); ++a) {
    b.lo[a] = axis_lo(a, idx[a]);
    b.hi[a] = axis_hi(a, idx[a]);
  }
  return b;
}

StateId GridCover::quantize(std::span<const double> x) const {
  if (!in_domain(x)) return overflow();
  std::vector<std::size_t> idx(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    double r = (x[a] - lower_[a]) / eta_[a];
    if (alignment_ == CellAlignment::Node) r += 0.5;
    auto i = static_cast<std::ptrdiff_t>(std::floor(r));
    const auto last = static_cast<std::ptrdiff_t>(counts_[a]) - 1;
    i = std::clamp<std::ptrdiff_t>(i, 0, last);
    /* floor may land one cell off next to a face */
    while (i > 0 && x[a] < axis_lo(a, i)) --i;
    while (i < last && x[a] >= axis_hi(a, i)) ++i;
    idx[a] = static_cast<std::size_t>(i);
  }
  return flat_index(idx);
}

std::vector<StateId> GridCover::members(std::span<const double> x) const {
  if (!in_domain(x)) return {overflow()};
  std::vector<std::vector<std::size_t>> axis_sets(dim());
  const auto q = multi_index(quantize(x));
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::ptrdiff_t d = -1; d <= 1; ++d) {
      auto i = static_cast<std::ptrdiff_t>(q[a]) + d;
      if (i < 0 || i >= static_cast<std::ptrdiff_t>(counts_[a])) continue;
      if (x[a] >= axis_lo(a, i) && x[a] <= axis_hi(a, i)) axis_sets[a].push_back(static_cast<std::size_t>(i));
    }
  }
  std::vector<StateId> out;
  std::vector<std::size_t> pos(dim(), 0), idx(dim());
  while (true) {
    for (std::size_t a = 0; a < dim(); ++a) idx[a] = axis_sets[a][pos[a]];
    out.push_back(flat_index(idx));
    std::size_t a = dim();
    while (a-- > 0) {
      if (++pos[a] < axis_sets[a].size()) break;
      pos[a] = 0;
    }
    if (a == std::size_t(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateId> GridCover::cells_meeting(const Box& box) const {
  bool leaves = false;
  std::vector<std::size_t> first(dim()), last(dim());
  bool any = true;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (box.lo[a] < lower_[a] || box.hi[a] > upper_[a]) leaves = true;
    if (box.hi[a] < lower_[a] || box.lo[a] > upper_[a]) {
      any = false;
      continue;
    }
    const auto top = static_cast<std::ptrdiff_t>(counts_[a]) - 1;
    double shift = alignment_ == CellAlignment::Node ? 0.5 : 0.0;
    auto lo_i = std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(std::floor((box.lo[a] - lower_[a]) / eta_[a] + shift)), 0, top);
    auto hi_i = std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(std::floor((box.hi[a] - lower_[a]) / eta_[a] + shift)), 0, top);
    /* widen to every closed cell touching the box, then trim exactly */
    while (lo_i > 0 && axis_hi(a, lo_i - 1) >= box.lo[a]) --lo_i;
    while (lo_i < top && axis_hi(a, lo_i) < box.lo[a]) ++lo_i;
    while (hi_i < top && axis_lo(a, hi_i + 1) <= box.hi[a]) ++hi_i;
    while (hi_i > 0 && axis_lo(a, hi_i) > box.hi[a]) --hi_i;
    first[a] = static_cast<std::size_t>(lo_i);
    last[a] = static_cast<std::size_t>(hi_i);
  }
  std::vector<StateId> out;
  if (any) {
    std::vector<std::size_t> idx(first);
    while (true) {
      out.push_back(flat_index(idx));
      std::size_t a = dim();
      while (a-- > 0) {
        if (++idx[a] <= last[a]) break;
        idx[a] = first[a];
      }
      if (a == std::size_t(-1)) break;
    }
  }
  if (leaves) out.push_back(overflow());
  return out;
}

InputGrid discretize_inputs(std::vector<Box> pieces, Point mu) {
  if (pieces.empty()) throw InputError("input set needs at least one interval");
  const auto m = pieces.front().dim();
  if (m == 0) throw InputError("input dimension must be positive");
  if (mu.size() == 1 && m > 1) mu.assign(m, mu.front());
  if (mu.size() != m) throw InputError("mu must have one entry per input dimension");
  for (double v : mu)
    if (!(v > 0.0)) throw InputError("mu must be positive");

  InputGrid grid;
  grid.mu = mu;
  for (const auto& piece : pieces) {
    if (piece.dim() != m || piece.hi.size() != m) throw InputError("input intervals must share one dimension");
    std::vector<std::vector<double>> axes(m);
    for (std::size_t j = 0; j < m; ++j) {
      double len = piece.hi[j] - piece.lo[j];
      if (!(len >= 0.0)) throw InputError("input interval has lower > upper");
      std::size_t c = len == 0.0 ? 1 : static_cast<std::size_t>(std::ceil(len / mu[j] - kRatioSlack)) + 1;
      double step = c > 1 ? len / double(c - 1) : 0.0;
      for (std::size_t k = 0; k < c; ++k)
        axes[j].push_back(k + 1 == c ? piece.hi[j] : piece.lo[j] + double(k) * step);
      grid.radius = std::max(grid.radius, step / 2.0);
    }
    std::vector<std::size_t> pos(m, 0);
    while (true) {
      Point u(m);
      for (std::size_t j = 0; j < m; ++j) u[j] = axes[j][pos[j]];
      if (std::find(grid.representatives.begin(), grid.representatives.end(), u) == grid.representatives.end())
        grid.representatives.push_back(std::move(u));
      std::size_t j = m;
      while (j-- > 0) {
        if (++pos[j] < axes[j].size()) break;
        pos[j] = 0;
      }
      if (j == std::size_t(-1)) break;
    }
  }
  grid.pieces = std::move(pieces);
  return grid;
}

}  // namespace symctl
