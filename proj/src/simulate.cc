/*
 * simulate.cc
 */

#include "symctl/simulate.hh"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "symctl/errors.hh"

namespace symctl {

Point DisturbancePolicy::sample(std::span<const double> w, std::mt19937_64& rng) const {
  Point d(w.size(), 0.0);
  switch (kind_) {
    case Kind::Zero:
      break;
    case Kind::UniformRandom:
      for (std::size_t i = 0; i < w.size(); ++i) d[i] = std::uniform_real_distribution<double>(-w[i], w[i])(rng);
      break;
    case Kind::ExtremalCorners:
      for (std::size_t i = 0; i < w.size(); ++i) d[i] = (rng() & 1u) ? w[i] : -w[i];
      break;
  }
  return d;
}

DisturbancePolicy parse_policy(const std::string& name) {
  if (name == "zero") return DisturbancePolicy(DisturbancePolicy::Kind::Zero);
  if (name == "uniform") return DisturbancePolicy(DisturbancePolicy::Kind::UniformRandom);
  if (name == "corners") return DisturbancePolicy(DisturbancePolicy::Kind::ExtremalCorners);
  throw InputError("disturbance policy must be zero, uniform or corners, got '" + name + "'");
}

std::string to_string(DisturbancePolicy::Kind kind) {
  switch (kind) {
    case DisturbancePolicy::Kind::Zero:
      return "zero";
    case DisturbancePolicy::Kind::UniformRandom:
      return "uniform";
    case DisturbancePolicy::Kind::ExtremalCorners:
      return "corners";
  }
  return "zero";
}

std::mt19937_64 run_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index), std::uint32_t(index >> 32)};
  return std::mt19937_64(seq);
}

Trajectory run_closed_loop(const ClosedLoop& loop, std::span<const double> x0, const DisturbancePolicy& policy,
                           std::mt19937_64& rng, std::size_t max_steps) {
  if (!loop.plant || !loop.controller || !loop.costs || !loop.inputs) throw InputError("closed loop is incomplete");
  const auto& plant = *loop.plant;
  const auto& ctl = *loop.controller;
  if (x0.size() != plant.dim || ctl.cover().dim() != plant.dim) throw InputError("initial state dimension mismatch");
  if (ctl.table().size() != ctl.cover().state_count() || loop.values.size() != ctl.cover().state_count())
    throw InputError("controller or value table does not match the cover");
  if (max_steps == 0) throw InputError("max_steps must be at least 1");

  Trajectory tr;
  tr.bound = pointwise_upper_bound(loop.values, ctl.cover(), x0);
  Point x(x0.begin(), x0.end());
  ExtendedCost acc = ExtendedCost::zero();
  tr.states.push_back(x);
  for (std::size_t t = 0; t <= max_steps; ++t) {
    const auto a = ctl.action(x);
    if (a.stop) {
      acc += loop.costs->terminal(x);
      tr.cum.push_back(acc);
      tr.stopped = true;
      tr.cost = acc;
      return tr;
    }
    if (t == max_steps) break;
    tr.cum.push_back(acc);
    const auto& u = loop.inputs->representatives.at(a.input);
    std::vector<Point> d;
    for (std::size_t k = 0; k < plant.disturbance_pieces; ++k) d.push_back(policy.sample(plant.w, rng));
    Point next = plant.step(x, u, d);
    acc += loop.costs->running(x, next, u);
    tr.inputs.push_back(u);
    x = std::move(next);
    tr.states.push_back(x);
  }
  /* never stopped: the run is charged inf */
  tr.cum.push_back(ExtendedCost::infinity());
  tr.stopped = false;
  tr.cost = ExtendedCost::infinity();
  return tr;
}

VerifyReport batch_verify(const ClosedLoop& loop, const std::vector<Point>& initial, const VerifyOptions& opt,
                          std::vector<Trajectory>* trajectories) {
  const std::size_t draws = std::max<std::size_t>(opt.draws, 1);
  const std::size_t runs = initial.size() * draws;
  std::vector<Trajectory> all(runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (auto i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) {
        auto rng = run_rng(opt.seed, i);
        all[i] = run_closed_loop(loop, initial[i / draws], opt.policy, rng, opt.max_steps);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = runs;
    }
  };
  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerifyReport r;
  r.runs = runs;
  for (std::size_t i = 0; i < runs; ++i) {
    const auto& t = all[i];
    if (!t.stopped) ++r.non_stopping;
    bool bad = t.cost > t.bound + ExtendedCost(opt.tolerance);
    if (bad) {
      ++r.violations;
      r.violating_runs.push_back(i);
    }
    r.max_cost = std::max(r.max_cost, t.cost);
    r.max_bound = std::max(r.max_bound, t.bound);
    if (t.bound.is_finite() && t.bound.value() > 0.0 && t.cost.is_finite())
      r.max_ratio = std::max(r.max_ratio, t.cost.value() / t.bound.value());
  }
  if (trajectories) *trajectories = std::move(all);
  return r;
}

std::vector<Point> sample_winning_states(const GridCover& cover, std::span<const ExtendedCost> values,
                                         std::size_t count, std::uint64_t seed) {
  if (values.size() != cover.state_count()) throw InputError("value table does not match the cover");
  std::vector<StateId> winning;
  for (StateId p = 0; p < cover.cell_count(); ++p)
    if (values[p].is_finite()) winning.push_back(p);
  std::vector<Point> out;
  if (winning.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto cell = cover.cell(winning[std::uniform_int_distribution<std::size_t>(0, winning.size() - 1)(rng)]);
    Point x(cover.dim());
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] = std::uniform_real_distribution<double>(cell.lo[k], cell.hi[k])(rng);
    out.push_back(std::move(x));
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  const auto n = tr.states.empty() ? 0 : tr.states.front().size();
  const auto m = tr.inputs.empty() ? 1 : tr.inputs.front().size();
  os << 't';
  for (std::size_t k = 0; k < n; ++k) os << ",x" << (k + 1);
  if (m == 1) {
    os << ",u";
  } else {
    for (std::size_t k = 0; k < m; ++k) os << ",u" << (k + 1);
  }
  os << ",stop,cum_cost\n";
  for (std::size_t t = 0; t < tr.states.size(); ++t) {
    os << t;
    for (double v : tr.states[t]) os << ',' << format_double(v);
    const bool last = t + 1 == tr.states.size();
    for (std::size_t k = 0; k < m; ++k) os << ',' << (t < tr.inputs.size() ? format_double(tr.inputs[t][k]) : "");
    os << ',' << (last && tr.stopped ? 1 : 0);
    os << ',' << format_cost(t < tr.cum.size() ? tr.cum[t] : tr.cost) << '\n';
  }
}

void write_report(std::ostream& os, const VerifyReport& r) {
  os << "runs=" << r.runs << '\n';
  os << "non_stopping=" << r.non_stopping << '\n';
  os << "max_cost=" << format_cost(r.max_cost) << '\n';
  os << "max_bound=" << format_cost(r.max_bound) << '\n';
  os << "max_ratio=" << format_double(r.max_ratio) << '\n';
  os << "violations=" << r.violations << '\n';
  for (auto i : r.violating_runs) os << "violation run=" << i << '\n';
}

}  // namespace symctl
