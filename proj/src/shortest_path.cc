/*
 * shortest_path.cc
 */

#include "symctl/shortest_path.hh"

#include <cmath>
#include <string>

#include "symctl/errors.hh"

namespace symctl {

FiniteProblem make_shortest_path(std::size_t vertex_count, const std::vector<Arc>& arcs, StateId source) {
  const auto n = vertex_count;
  if (n == 0) throw InputError("graph needs at least one vertex");
  if (source >= n) throw InputError("source vertex out of range");

  /* reversed arc weights: into[p*n + u] = min length of arc (u,p) */
  std::vector<double> into(n * n, INFINITY);
  for (const auto& a : arcs) {
    if (a.from >= n || a.to >= n) throw InputError("arc endpoint out of range");
    if (!(a.length >= 0.0)) throw InputError("arc length must be non-negative");
    auto& w = into[std::size_t(a.to) * n + a.from];
    w = std::min(w, a.length);
  }

  std::vector<ExtendedCost> terminal(n, ExtendedCost::infinity());
  terminal[source] = ExtendedCost::zero();
  std::vector<std::uint64_t> offsets(n * n + 1);
  std::vector<StateId> succ(n * n);
  std::vector<ExtendedCost> cost(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t u = 0; u < n; ++u) {
      auto pair = p * n + u;
      offsets[pair + 1] = pair + 1;
      double w = into[pair];
      /* F is single-valued: move to u along the reversed arc, else stay */
      succ[pair] = static_cast<StateId>(std::isinf(w) ? p : u);
      cost[pair] = std::isinf(w) ? ExtendedCost::infinity() : ExtendedCost(w);
    }
  return FiniteProblem(n, n, std::move(terminal), std::move(offsets), std::move(succ), std::move(cost));
}

}  // namespace symctl
