/*
 * shortest_path.hh
 *
 * Single-source shortest paths posed as a finite optimal control problem.
 */

#ifndef SYMCTL_SHORTEST_PATH_HH_
#define SYMCTL_SHORTEST_PATH_HH_

#include <cstddef>
#include <vector>

#include "symctl/problem.hh"

namespace symctl {

struct Arc {
  StateId from;
  StateId to;
  double length;
};

/**
 * Builds (X, U, F, G, g) with U = X, G(s) = 0 and G = inf elsewhere.
 * Choosing input u at p moves to u when (u,p) is an arc, at cost w(u,p);
 * every other input keeps p in place at cost inf, so the value function is
 * the distance from the source. Duplicate arcs keep the minimum length.
 *
 * Throws InputError on negative lengths or out-of-range vertices.
 */
FiniteProblem make_shortest_path(std::size_t vertex_count, const std::vector<Arc>& arcs, StateId source);

}  // namespace symctl

#endif  // SYMCTL_SHORTEST_PATH_HH_
