/*
 * abstraction.cc
 */

#include "symctl/abstraction.hh"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "symctl/errors.hh"

namespace symctl {

namespace {

constexpr std::size_t kChunkCells = 512;

struct Chunk {
  std::vector<std::uint32_t> counts;  // successors per pair
  std::vector<StateId> successors;
  double slack = 0.0;
  std::size_t escaping = 0;
  std::size_t computed = 0;
  std::size_t gated = 0;
  double max_diameter = 0.0;
};

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_double(v[i]);
  }
  return s;
}

/* infinity-norm distance from x to a closed box */
double box_distance(const Box& b, std::span<const double> x) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max({d, b.lo[i] - x[i], x[i] - b.hi[i]});
  return d;
}

/* distance from x to the closure of the complement of the cover domain */
double outside_distance(const GridCover& cover, std::span<const double> x) {
  double d = INFINITY;
  for (std::size_t i = 0; i < x.size(); ++i)
    d = std::min({d, x[i] - cover.lower()[i], cover.upper()[i] - x[i]});
  return std::max(d, 0.0);
}

std::vector<Point> lattice(const Box& b, std::size_t per_axis) {
  const auto n = b.dim();
  per_axis = std::max<std::size_t>(per_axis, 2);
  std::vector<Point> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = idx[i] + 1 == per_axis ? b.hi[i] : b.lo[i] + (b.hi[i] - b.lo[i]) * double(idx[i]) / double(per_axis - 1);
    out.push_back(std::move(x));
    std::size_t a = n;
    while (a-- > 0) {
      if (++idx[a] < per_axis) break;
      idx[a] = 0;
    }
    if (a == std::size_t(-1)) break;
  }
  return out;
}

}  // namespace

double ConservatismCertificate::rho() const noexcept {
  return std::max({input_radius, terminal_slack, running_slack, transition_slack, max_diameter});
}

AbstractCosts abstract_costs(const CostModel& costs, const GridCover& cover, const InputGrid& inputs, double A2,
                             double A3) {
  if (!(A2 >= 0.0) || !(A3 >= 0.0)) throw InputError("A2 and A3 must be non-negative");
  const double eta = inf_norm(cover.eta());
  const auto m = inputs.size();
  AbstractCosts out;
  out.terminal.assign(cover.state_count(), ExtendedCost::infinity());
  out.pair_cost.assign(cover.state_count() * m, ExtendedCost::infinity());
  for (StateId p = 0; p < cover.cell_count(); ++p) {
    const auto box = cover.cell(p);
    if (costs.terminal_finite_on(box)) {
      auto g = costs.terminal(box.center());
      out.terminal[p] = g + ExtendedCost(A2 * eta / 2.0);
    }
    if (costs.running_finite_on(box))
      for (std::size_t u = 0; u < m; ++u)
        out.pair_cost[p * m + u] = ExtendedCost(costs.running_value(inputs.representatives[u]) + A3 * eta);
  }
  return out;
}

Abstraction build_abstraction(const TransitionFn& transitions, const GridCover& cover, const InputGrid& inputs,
                              const CostModel& costs, const AbstractionOptions& opt) {
  const auto cells = cover.cell_count();
  const auto m = inputs.size();
  if (m == 0) throw InputError("input alphabet is empty");
  const auto overflow = cover.overflow();

  auto ac = abstract_costs(costs, cover, inputs, opt.A2, opt.A3);

  const std::size_t chunk_count = (cells + kChunkCells - 1) / kChunkCells;
  std::vector<Chunk> chunks(chunk_count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      while (true) {
        const auto c = next.fetch_add(1);
        if (c >= chunk_count) return;
        auto& ch = chunks[c];
        const auto first = c * kChunkCells;
        const auto last = std::min(cells, first + kChunkCells);
        for (auto p = static_cast<StateId>(first); p < last; ++p) {
          const auto box = cover.cell(p);
          if (costs.infinite_everywhere_on(box)) {
            ++ch.gated;
            for (std::size_t u = 0; u < m; ++u) {
              ch.counts.push_back(1);
              ch.successors.push_back(overflow);
            }
            continue;
          }
          ch.max_diameter = std::max(ch.max_diameter, box.diameter());
          for (std::size_t u = 0; u < m; ++u) {
            auto tr = transitions(p, u);
            ++ch.computed;
            if (tr.escaping) ++ch.escaping;
            auto& list = tr.cells;
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            if (list.empty())
              throw SoundnessAlarm("transition over-approximation is empty for cell " + std::to_string(p) +
                                   ", input " + std::to_string(u));
            if (list.back() > overflow) throw SoundnessAlarm("transition callback returned an unknown cell");
            ch.slack = std::max(ch.slack, tr.slack);
            ch.counts.push_back(static_cast<std::uint32_t>(list.size()));
            ch.successors.insert(ch.successors.end(), list.begin(), list.end());
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunk_count;
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

  /* merge in cell order */
  Abstraction abs;
  abs.cover = cover;
  abs.inputs = inputs;
  auto& cert = abs.certificate;
  cert.input_radius = inputs.radius;
  cert.terminal_slack = opt.A2 * inf_norm(cover.eta());
  cert.running_slack = 2.0 * opt.A3 * inf_norm(cover.eta());

  std::size_t total = m;  // overflow self-loops
  for (const auto& ch : chunks) total += ch.successors.size();
  std::vector<std::uint64_t> offsets;
  offsets.reserve(cover.state_count() * m + 1);
  offsets.push_back(0);
  std::vector<StateId> succ;
  succ.reserve(total);
  for (auto& ch : chunks) {
    for (auto c : ch.counts) offsets.push_back(offsets.back() + c);
    succ.insert(succ.end(), ch.successors.begin(), ch.successors.end());
    cert.transition_slack = std::max(cert.transition_slack, ch.slack);
    cert.max_diameter = std::max(cert.max_diameter, ch.max_diameter);
    abs.stats.gated_cells += ch.gated;
    abs.stats.escaping_pairs += ch.escaping;
    abs.stats.computed_pairs += ch.computed;
    ch = Chunk{};
  }
  for (std::size_t u = 0; u < m; ++u) {
    offsets.push_back(offsets.back() + 1);
    succ.push_back(overflow);
  }
  abs.problem = FiniteProblem::with_pair_costs(cover.state_count(), m, std::move(ac.terminal), std::move(offsets),
                                               std::move(succ), std::move(ac.pair_cost));
  return abs;
}

TransitionFn make_sampled_transitions(const SampledSystem& sys, const GridCover& cover, const InputGrid& inputs,
                                      const ReachOptions& opt) {
  ReachOptions o = opt;
  if (o.eta_norm == 0.0) o.eta_norm = inf_norm(cover.eta());
  return [sys, cover, reps = inputs.representatives, o](StateId cell, std::size_t input) {
    const auto box = cover.cell(cell);
    IntervalBox ib{box.center(), Point(box.dim())};
    for (std::size_t i = 0; i < box.dim(); ++i) ib.radius[i] = (box.hi[i] - box.lo[i]) / 2.0;
    auto r = attain_over(sys, ib, reps[input], o);
    TransitionResult tr;
    if (r.escaping || r.split_abort) {
      tr.escaping = true;
      tr.cells.push_back(cover.overflow());
      return tr;
    }
    tr.slack = r.slack;
    for (const auto& b : r.boxes) {
      auto part = cover.cells_meeting(b.box());
      tr.cells.insert(tr.cells.end(), part.begin(), part.end());
    }
    return tr;
  };
}

TransitionFn make_map_transitions(const GridCover& cover, const InputGrid& inputs, BoxImage image) {
  return [cover, reps = inputs.representatives, image = std::move(image)](StateId cell, std::size_t input) {
    TransitionResult tr;
    tr.cells = cover.cells_meeting(image(cover.cell(cell), reps[input]));
    return tr;
  };
}

Verdict check_conservatism(const FiniteProblem& problem, const GridCover& cover, const InputGrid& inputs,
                           const CostModel& costs, const SuccessorSampler& sampler, double rho,
                           const ConservatismCheck& opt) {
  if (problem.state_count() != cover.state_count() || problem.input_count() != inputs.size())
    throw InputError("problem does not match the cover and inputs");
  Verdict v;
  const ExtendedCost r(rho);
  if (inputs.radius > rho) v.add({"(i)", 0, 0, "input covering radius " + format_double(inputs.radius) + " > rho"});

  std::mt19937_64 rng(opt.seed);
  const auto m = inputs.size();
  for (StateId p = 0; p < cover.cell_count(); ++p) {
    const auto box = cover.cell(p);
    const auto samples = lattice(box, opt.samples_per_axis);

    ExtendedCost sup_g1 = ExtendedCost::zero();
    for (const auto& x : samples) sup_g1 = std::max(sup_g1, costs.terminal(x));
    if (problem.terminal(p) > r + sup_g1)
      v.add({"(ii)", p, 0, format_cost(problem.terminal(p)) + " > rho + " + format_cost(sup_g1)});

    const bool condition = !costs.infinite_everywhere_on(box);
    if (condition && box.diameter() > rho)
      v.add({"(v)", p, 0, "diameter " + format_double(box.diameter()) + " > rho"});

    for (std::size_t u = 0; u < m; ++u) {
      const auto& uu = inputs.representatives[u];
      ExtendedCost sup_run = ExtendedCost::zero();
      for (const auto& x : samples) sup_run = std::max(sup_run, costs.running(x, x, uu));
      const auto pair = problem.pair_index(p, static_cast<InputId>(u));
      const auto succ = problem.pair_successors(pair);
      for (std::size_t k = 0; k < succ.size(); ++k)
        if (problem.pair_cost(pair, k) > r + sup_run) {
          v.add({"(iii)", p, static_cast<StateId>(u),
                 format_cost(problem.pair_cost(pair, k)) + " > rho + " + format_cost(sup_run)});
          break;
        }
      if (!condition) continue;

      std::vector<Point> landed;
      for (const auto& x : samples)
        for (std::size_t d = 0; d < std::max<std::size_t>(opt.draws_per_sample, 1); ++d)
          landed.push_back(sampler(x, uu, rng));
      for (auto q : succ) {
        double dist = INFINITY;
        if (q == cover.overflow()) {
          for (const auto& y : landed) dist = std::min(dist, outside_distance(cover, y));
        } else {
          const auto qb = cover.cell(q);
          for (const auto& y : landed) dist = std::min(dist, box_distance(qb, y));
        }
        if (dist > rho)
          v.add({"(iv)", p, static_cast<StateId>(u),
                 "successor " + std::to_string(q) + " is " + format_double(dist) + " from the sampled image"});
      }
    }
  }
  return v;
}

void write_sidecar(std::ostream& os, const Abstraction& abs) {
  const auto& c = abs.cover;
  os << "cover.dim = " << c.dim() << '\n';
  os << "cover.lower = " << join(c.lower()) << '\n';
  os << "cover.upper = " << join(c.upper()) << '\n';
  os << "cover.eta = " << join(c.eta()) << '\n';
  os << "cover.alignment = " << to_string(c.alignment()) << '\n';
  os << "cover.counts =";
  for (auto n : c.counts()) os << ' ' << n;
  os << '\n';
  os << "cover.overflow = " << c.overflow() << '\n';
  os << "inputs.mu = " << join(abs.inputs.mu) << '\n';
  os << "inputs.count = " << abs.inputs.size() << '\n';
  os << "inputs.radius = " << format_double(abs.inputs.radius) << '\n';
  const auto& k = abs.certificate;
  os << "rho = " << format_double(k.rho()) << '\n';
  os << "rho.input_radius = " << format_double(k.input_radius) << '\n';
  os << "rho.terminal_slack = " << format_double(k.terminal_slack) << '\n';
  os << "rho.running_slack = " << format_double(k.running_slack) << '\n';
  os << "rho.transition_slack = " << format_double(k.transition_slack) << '\n';
  os << "rho.max_diameter = " << format_double(k.max_diameter) << '\n';
  os << "rho.numerical_error_budget = " << (k.numerical_budget_unverified ? "unverified" : "none") << '\n';
  os << "problem.states = " << abs.problem.state_count() << '\n';
  os << "problem.inputs = " << abs.problem.input_count() << '\n';
  os << "problem.transitions = " << abs.problem.transition_count() << '\n';
  os << "stats.gated_cells = " << abs.stats.gated_cells << '\n';
  os << "stats.computed_pairs = " << abs.stats.computed_pairs << '\n';
  os << "stats.escaping_pairs = " << abs.stats.escaping_pairs << '\n';
}

}  // namespace symctl
