/*
 * support.hh
 *
 * Random instance generators and oracles that share no code with the
 * solver: a textbook Dijkstra over an adjacency list and a plain
 * fixed-point iteration of the minimax operator.
 */

#ifndef SYMCTL_TESTS_SUPPORT_HH_
#define SYMCTL_TESTS_SUPPORT_HH_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/problem.hh"
#include "symctl/relations.hh"
#include "symctl/shortest_path.hh"

namespace symctl::testing {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Graph {
  std::size_t n = 0;
  std::vector<Arc> arcs;
};

/* n in [1, max_n], about `degree` out-arcs per vertex, integer lengths in [0, max_w] */
inline Graph random_graph(std::mt19937_64& rng, std::size_t max_n, double degree, int max_w) {
  Graph g;
  g.n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  std::uniform_int_distribution<std::size_t> vert(0, g.n - 1);
  std::uniform_int_distribution<int> len(0, max_w);
  auto m = static_cast<std::size_t>(degree * double(g.n));
  for (std::size_t k = 0; k < m; ++k) g.arcs.push_back({StateId(vert(rng)), StateId(vert(rng)), double(len(rng))});
  return g;
}

/* distances from source along arcs */
inline std::vector<double> dijkstra_oracle(const Graph& g, StateId source) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(g.n);
  for (const auto& a : g.arcs) adj[a.from].push_back({a.to, a.length});
  std::vector<double> dist(g.n, kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [w, l] : adj[v])
      if (d + l < dist[w]) {
        dist[w] = d + l;
        pq.push({dist[w], w});
      }
  }
  return dist;
}

struct ProblemShape {
  std::size_t max_n = 50;
  std::size_t max_m = 4;
  std::size_t max_succ = 4;
  double p_terminal_finite = 0.3;
  double p_running_inf = 0.1;
  bool integer_costs = true;
  int max_cost = 10;
};

/* random nondeterministic problem, one cost per transition */
inline FiniteProblem random_problem(std::mt19937_64& rng, const ProblemShape& s) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, s.max_n)(rng);
  const auto m = std::uniform_int_distribution<std::size_t>(1, s.max_m)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<StateId> state(0, StateId(n - 1));
  std::uniform_int_distribution<std::size_t> succ_count(1, std::min(s.max_succ, n));
  auto draw = [&]() {
    return s.integer_costs ? double(std::uniform_int_distribution<int>(0, s.max_cost)(rng))
                           : unit(rng) * double(s.max_cost);
  };
  FiniteProblemBuilder b(n, m);
  for (StateId p = 0; p < n; ++p)
    b.set_terminal(p, unit(rng) < s.p_terminal_finite ? ExtendedCost(draw()) : ExtendedCost::infinity());
  for (StateId p = 0; p < n; ++p)
    for (InputId u = 0; u < m; ++u) {
      std::vector<StateId> qs;
      const auto k = succ_count(rng);
      while (qs.size() < k) {
        auto q = state(rng);
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
      }
      for (auto q : qs) b.add_transition(p, u, q, unit(rng) < s.p_running_inf ? ExtendedCost::infinity() : ExtendedCost(draw()));
    }
  return b.build();
}

/* minimum time: G = 0 on a random target, inf elsewhere; g = 1 on every transition */
inline FiniteProblem random_min_time(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m, std::size_t max_succ) {
  const auto n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
  const auto m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<StateId> state(0, StateId(n - 1));
  std::uniform_int_distribution<std::size_t> succ_count(1, std::min(max_succ, n));
  FiniteProblemBuilder b(n, m);
  for (StateId p = 0; p < n; ++p) b.set_terminal(p, unit(rng) < 0.1 ? ExtendedCost::zero() : ExtendedCost::infinity());
  for (StateId p = 0; p < n; ++p)
    for (InputId u = 0; u < m; ++u) {
      std::vector<StateId> qs;
      const auto k = succ_count(rng);
      while (qs.size() < k) {
        auto q = state(rng);
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
      }
      for (auto q : qs) b.add_transition(p, u, q, ExtendedCost(1.0));
    }
  return b.build();
}

/* one application of min{G, min_u max_q g + W}, written from scratch */
inline std::vector<double> minimax_step(const FiniteProblem& p, const std::vector<double>& w) {
  std::vector<double> out(p.state_count());
  for (StateId s = 0; s < p.state_count(); ++s) {
    double best = p.terminal(s).value();
    for (InputId u = 0; u < p.input_count(); ++u) {
      double worst = 0.0;
      const auto pair = p.pair_index(s, u);
      const auto succ = p.pair_successors(pair);
      for (std::size_t k = 0; k < succ.size(); ++k) worst = std::max(worst, p.pair_cost(pair, k).value() + w[succ[k]]);
      best = std::min(best, worst);
    }
    out[s] = best;
  }
  return out;
}

/* greatest fixed point by iterating from G; exact for integer costs */
inline std::vector<double> fixed_point_oracle(const FiniteProblem& p, std::size_t max_iter = 100000) {
  std::vector<double> w(p.state_count());
  for (StateId s = 0; s < p.state_count(); ++s) w[s] = p.terminal(s).value();
  for (std::size_t it = 0; it < max_iter; ++it) {
    auto next = minimax_step(p, w);
    if (next == w) return w;
    w = std::move(next);
  }
  return w;
}

inline std::vector<double> as_doubles(const std::vector<ExtendedCost>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

/*
 * A pair (P1, P2, Q) for which Q is a valuated feedback refinement relation
 * with identity input map. P2 state 0 is a universal successor so every
 * concrete pair has an admissible successor.
 */
struct RefinementInstance {
  FiniteProblem p1, p2;
  Relation q;
};

inline RefinementInstance random_refinement(std::mt19937_64& rng, std::size_t max_n1 = 40, std::size_t max_n2 = 15) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> cost(0, 8);
  const auto n2 = std::uniform_int_distribution<std::size_t>(2, max_n2)(rng);
  const auto n1 = std::uniform_int_distribution<std::size_t>(2, max_n1)(rng);
  const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const auto m1 = m + std::uniform_int_distribution<std::size_t>(0, 1)(rng);

  /* abstract problem: G finite on about a third, successors include 0 */
  std::vector<std::vector<std::vector<StateId>>> f2(n2, std::vector<std::vector<StateId>>(m));
  std::vector<std::vector<std::vector<double>>> g2(n2, std::vector<std::vector<double>>(m));
  std::vector<double> G2(n2);
  FiniteProblemBuilder b2(n2, m);
  for (StateId b = 0; b < n2; ++b) {
    G2[b] = unit(rng) < 0.35 ? double(cost(rng)) : kInf;
    b2.set_terminal(b, G2[b] == kInf ? ExtendedCost::infinity() : ExtendedCost(G2[b]));
    for (InputId u = 0; u < m; ++u) {
      f2[b][u].push_back(0);
      for (StateId q = 1; q < n2; ++q)
        if (unit(rng) < 0.3) f2[b][u].push_back(q);
      for (auto q : f2[b][u]) {
        double g = unit(rng) < 0.05 ? kInf : double(1 + cost(rng));
        g2[b][u].push_back(g);
        b2.add_transition(b, u, q, g == kInf ? ExtendedCost::infinity() : ExtendedCost(g));
      }
    }
  }

  /* strict relation: one or two abstract states per concrete state, state 0 -> {0} */
  std::vector<std::pair<StateId, StateId>> pairs{{0, 0}};
  std::uniform_int_distribution<StateId> s2(0, StateId(n2 - 1));
  for (StateId a = 1; a < n1; ++a) {
    auto b = s2(rng);
    pairs.push_back({a, b});
    if (unit(rng) < 0.3) {
      auto c = s2(rng);
      if (c != b) pairs.push_back({a, c});
    }
  }
  Relation q(n1, n2, pairs);

  auto g2_of = [&](StateId b, InputId u, StateId q2) {
    const auto& fs = f2[b][u];
    auto it = std::find(fs.begin(), fs.end(), q2);
    return it == fs.end() ? -1.0 : g2[b][u][std::size_t(it - fs.begin())];
  };

  FiniteProblemBuilder b1(n1, m1);
  std::uniform_int_distribution<StateId> s1(0, StateId(n1 - 1));
  for (StateId a = 0; a < n1; ++a) {
    double cap = kInf;
    for (auto b : q.image(a)) cap = std::min(cap, G2[b]);
    double G1 = cap == kInf ? (unit(rng) < 0.5 ? kInf : double(cost(rng))) : std::max(0.0, cap - double(cost(rng) % 3));
    b1.set_terminal(a, G1 == kInf ? ExtendedCost::infinity() : ExtendedCost(G1));
    for (InputId u = 0; u < m1; ++u) {
      std::vector<StateId> succ;
      if (u >= m) {
        /* inputs without abstract counterpart are unconstrained */
        succ.push_back(s1(rng));
      } else {
        /* admissible q1: Q(q1) inside F2(b,u) for every b in Q(a) */
        for (StateId c = 0; c < n1; ++c) {
          bool ok = true;
          for (auto b : q.image(a))
            for (auto q2 : q.image(c)) ok = ok && g2_of(b, u, q2) >= 0.0;
          if (ok && (c == 0 || unit(rng) < 0.5)) succ.push_back(c);
        }
      }
      for (auto c : succ) {
        double g = double(1 + cost(rng));
        if (u < m) {
          double lim = kInf;
          for (auto b : q.image(a))
            for (auto q2 : q.image(c)) lim = std::min(lim, g2_of(b, u, q2));
          g = lim == kInf ? g : std::max(0.0, lim - double(cost(rng) % 2));
        }
        b1.add_transition(a, u, c, ExtendedCost(g));
      }
    }
  }
  return {b1.build(), b2.build(), std::move(q)};
}

}  // namespace symctl::testing

#endif  // SYMCTL_TESTS_SUPPORT_HH_
