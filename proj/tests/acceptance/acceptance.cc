/*
 * acceptance.cc
 *
 * One PASS/FAIL line per acceptance criterion. Usage:
 *   symctl_acceptance            all criteria
 *   symctl_acceptance 3 7        a subset
 * Exit status is the number of failed criteria (capped at 100).
 */

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>

#include "symctl/analysis.hh"
#include "symctl/pipeline.hh"
#include "symctl/relations.hh"
#include "symctl/shortest_path.hh"
#include "symctl/solver.hh"

#include "../support.hh"

using namespace symctl;
using namespace symctl::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double v) { return format_double(v); }

/* ---------------------------------------------------------------- 1 */

Outcome shortest_paths() {
  Outcome out;
  std::mt19937_64 rng(101);
  std::size_t compared = 0;
  for (int inst = 0; inst < 100 && out.pass; ++inst) {
    auto g = random_graph(rng, 500, 3.0, 100);
    auto source = std::uniform_int_distribution<StateId>(0, StateId(g.n - 1))(rng);
    auto res = solve(make_shortest_path(g.n, g.arcs, source));
    auto oracle = dijkstra_oracle(g, source);
    for (std::size_t v = 0; v < g.n; ++v, ++compared)
      if (res.value[v].value() != oracle[v]) {
        out.fail("instance " + std::to_string(inst) + " vertex " + std::to_string(v) + ": " +
                 format_cost(res.value[v]) + " vs " + fmt(oracle[v]));
        break;
      }
  }
  if (out.pass) out.detail = "100 graphs, " + std::to_string(compared) + " distances identical";
  return out;
}

/* ---------------------------------------------------------------- 2 */

bool leq(const std::vector<ExtendedCost>& a, const std::vector<ExtendedCost>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Outcome fixed_point() {
  Outcome out;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProblemShape shape;
  shape.integer_costs = false;
  std::size_t subsolutions = 0;
  for (int inst = 0; inst < 200 && out.pass; ++inst) {
    auto p = random_problem(rng, shape);
    auto w = solve(p).value;
    auto pw = dp_operator(p, w);
    for (std::size_t s = 0; s < w.size(); ++s) {
      bool same = w[s].is_infinite() ? pw[s].is_infinite() : std::abs(pw[s].value() - w[s].value()) <= 1e-12;
      if (!same) {
        out.fail("instance " + std::to_string(inst) + ": P(W) != W at " + std::to_string(s));
        break;
      }
    }
    /* subsolutions W' <= P(W'): lambda W, P^t(0), and their pointwise maxima */
    std::vector<ExtendedCost> zero(p.state_count(), ExtendedCost::zero());
    std::vector<std::vector<ExtendedCost>> from_zero{zero};
    for (int t = 0; t < 8; ++t) from_zero.push_back(dp_operator(p, from_zero.back()));
    for (int k = 0; k < 20 && out.pass; ++k) {
      const double lambda = unit(rng);
      std::vector<ExtendedCost> a(w.size()), b = from_zero[std::size_t(k) % from_zero.size()];
      const double mu = unit(rng);
      for (std::size_t s = 0; s < w.size(); ++s) {
        a[s] = w[s].is_finite() ? ExtendedCost(lambda * w[s].value()) : w[s];
        b[s] = b[s].is_finite() ? ExtendedCost(mu * b[s].value()) : b[s];
      }
      std::vector<ExtendedCost> cand(w.size());
      for (std::size_t s = 0; s < w.size(); ++s) cand[s] = (k % 3 == 0) ? a[s] : (k % 3 == 1 ? b[s] : std::max(a[s], b[s]));
      if (!leq(cand, dp_operator(p, cand))) continue;  // not a subsolution (rounding); skip
      ++subsolutions;
      if (!leq(cand, w)) out.fail("instance " + std::to_string(inst) + ": subsolution exceeds W");
    }
  }
  if (out.pass) out.detail = "200 problems, " + std::to_string(subsolutions) + " subsolutions below W";
  return out;
}

/* ---------------------------------------------------------------- 3 */

Outcome value_iteration_consistency() {
  Outcome out;
  std::mt19937_64 rng(303);
  ProblemShape shape;
  shape.integer_costs = false;
  std::size_t discrete_checked = 0;
  for (int inst = 0; inst < 200 && out.pass; ++inst) {
    /* every fourth instance is a minimum-time problem (discrete costs) */
    auto p = inst % 4 == 3 ? random_min_time(rng, shape.max_n, 4, 4) : random_problem(rng, shape);
    auto w = solve(p).value;
    std::vector<ExtendedCost> cur(p.terminal_costs().begin(), p.terminal_costs().end());
    for (std::size_t t = 0; t <= 100; ++t) {
      if (!leq(w, cur)) {
        out.fail("instance " + std::to_string(inst) + ": P^" + std::to_string(t) + "(G) < W");
        break;
      }
      auto next = dp_operator(p, cur);
      if (!leq(next, cur)) {
        out.fail("instance " + std::to_string(inst) + ": P^T(G) increased at T=" + std::to_string(t + 1));
        break;
      }
      cur = std::move(next);
    }
    if (!out.pass) break;
    if (value_iteration(p, 100) != cur) out.fail("value_iteration disagrees with repeated dp_operator");
    if (is_discrete_cost(p)) {
      ++discrete_checked;
      if (value_iteration(p, p.state_count()) != w)
        out.fail("instance " + std::to_string(inst) + ": discrete costs, P^n(G) != W");
    }
  }
  if (out.pass)
    out.detail = "200 problems x 100 iterations, " + std::to_string(discrete_checked) + " discrete stabilized within n";
  return out;
}

/* ---------------------------------------------------------------- 4 */

Outcome queue_equivalence() {
  Outcome out;
  std::mt19937_64 rng(404);
  std::size_t worst_ops = 0, worst_budget = 0;
  for (int inst = 0; inst < 100 && out.pass; ++inst) {
    auto p = random_min_time(rng, 400, 4, 5);
    auto witness = is_discrete_cost(p);
    if (!witness) {
      out.fail("min-time instance not recognized as discrete");
      break;
    }
    auto h = solve(p, QueueDiscipline::heap());
    auto f = solve(p, QueueDiscipline::fifo(*witness));
    if (h.value != f.value) out.fail("instance " + std::to_string(inst) + ": values differ");
    for (StateId s = 0; s < p.state_count(); ++s)
      if (h.controller.is_stop(s) != f.controller.is_stop(s) || h.value[s].is_finite() != f.value[s].is_finite())
        out.fail("instance " + std::to_string(inst) + ": controller domains differ");
    const auto budget = 2 * p.transition_count() + p.state_count();
    if (f.stats.queue_operations() > budget)
      out.fail("instance " + std::to_string(inst) + ": fifo used " + std::to_string(f.stats.queue_operations()) +
               " operations > 2m+n = " + std::to_string(budget));
    if (f.stats.queue_operations() * worst_budget >= worst_ops * budget) {
      worst_ops = f.stats.queue_operations();
      worst_budget = budget;
    }
  }
  if (out.pass)
    out.detail = "100 instances identical; worst fifo ops " + std::to_string(worst_ops) + " <= 2m+n = " +
                 std::to_string(worst_budget);
  return out;
}

/* ---------------------------------------------------------------- 5 */

Outcome logistic_convergence() {
  Outcome out;
  constexpr double a = 0.415, b = 0.69;
  const auto xs = unit_grid(4000);
  const auto v = logistic_reference(xs, a, b);
  std::map<int, double> eps, fraction;
  for (int n : {40, 60, 85, 400}) {
    auto cfg = default_config("logistic", "n" + std::to_string(n));
    auto s = synthesize(cfg);
    const auto& cover = s.abstraction.cover;
    const auto& w = s.solution.value;
    std::size_t agree = 0;
    for (StateId c = 0; c < cover.cell_count(); ++c) {
      auto box = cover.cell(c);
      auto sup = logistic_sup_value(std::max(0.0, box.lo[0]), std::min(1.0, box.hi[0]), a, b);
      if (w[c] < sup) {
        out.fail("N=" + std::to_string(n) + " cell " + std::to_string(c) + ": " + format_cost(w[c]) + " < sup V " +
                 format_cost(sup));
        return out;
      }
      const auto center = box.center();
      if (w[cover.quantize(center)] == logistic_orbit_value(center[0], a, b, 512)) ++agree;
    }
    fraction[n] = double(agree) / double(cover.cell_count());
    std::vector<ExtendedCost> wx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) wx[i] = pointwise_upper_bound(w, cover, xs[i]);
    eps[n] = hypo_distance(xs, wx, v).eps;
  }
  if (!(eps[400] < eps[40])) out.fail("hypo distance did not shrink: " + fmt(eps[400]) + " vs " + fmt(eps[40]));
  if (!(fraction[400] > fraction[40]))
    out.fail("exact-cell fraction did not grow: " + fmt(fraction[400]) + " vs " + fmt(fraction[40]));
  if (out.pass) {
    std::ostringstream d;
    d << "upper bounds hold; eps";
    for (auto [n, e] : eps) d << " N" << n << "=" << fmt(e);
    d << "; exact fraction N40=" << fmt(fraction[40]) << " N400=" << fmt(fraction[400]);
    out.detail = d.str();
  }
  return out;
}

/* ---------------------------------------------------------------- 6 */

Outcome reach_containment() {
  Outcome out;
  std::ostringstream d;
  for (const auto& name : builtin_plant_names()) {
    auto cfg = default_config(name, name == "logistic" ? "n40" : "p1");
    const auto cover = make_cover(cfg);
    const auto inputs = make_inputs(cfg);
    const auto plant = make_plant(cfg);
    const auto transitions = make_transitions(cfg, cover, inputs);
    ReachOptions opt = cfg.reach;
    opt.eta_norm = inf_norm(cover.eta());
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<StateId> cell_of(0, StateId(cover.cell_count() - 1));
    std::uniform_int_distribution<std::size_t> input_of(0, inputs.size() - 1);
    DisturbancePolicy policy(DisturbancePolicy::Kind::UniformRandom);
    std::size_t escaping = 0, violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto c = cell_of(rng);
      const auto ui = input_of(rng);
      const auto& u = inputs.representatives[ui];
      auto box = cover.cell(c);
      if (cfg.plant.discrete)
        for (std::size_t k = 0; k < box.dim(); ++k) {
          box.lo[k] = std::max(box.lo[k], cfg.plant.domain.lo[k]);
          box.hi[k] = std::min(box.hi[k], cfg.plant.domain.hi[k]);
        }
      Point x(box.dim());
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = std::uniform_real_distribution<double>(box.lo[k], box.hi[k])(rng);
      std::vector<Point> dist;
      for (std::size_t k = 0; k < plant.disturbance_pieces; ++k) dist.push_back(policy.sample(plant.w, rng));
      const auto end = plant.step(x, u, dist);

      bool inside = false;
      if (cfg.plant.discrete) {
        inside = cfg.plant.image(cover.cell(c), u).contains(end);
      } else {
        IntervalBox ib{cover.cell(c).center(), Point(x.size())};
        for (std::size_t k = 0; k < x.size(); ++k) ib.radius[k] = (cover.cell(c).hi[k] - cover.cell(c).lo[k]) / 2.0;
        auto r = attain_over(cfg.plant.sys, ib, u, opt);
        if (r.escaping || r.split_abort) {
          ++escaping;
          inside = true;  // the abstraction routes this pair to the overflow state
        } else {
          for (const auto& bx : r.boxes) inside = inside || bx.box().contains(end);
        }
      }
      /* the abstract successors must also cover the endpoint */
      auto tr = transitions(c, ui);
      std::set<StateId> succ(tr.cells.begin(), tr.cells.end());
      bool covered = succ.count(cover.overflow()) > 0;
      for (auto q : cover.members(end)) covered = covered || succ.count(q) > 0;
      if (!inside || !covered) ++violations;
    }
    if (violations) out.fail(name + ": " + std::to_string(violations) + " endpoints outside the reach set");
    d << name << " 1000 triples (" << escaping << " escaping) ";
  }
  if (out.pass) out.detail = d.str() + "zero violations";
  return out;
}

/* ---------------------------------------------------------------- 7, 8 */

struct Synthesized {
  Config cfg;
  Synthesis s;
};

Synthesized& cached(const std::string& name) {
  static std::map<std::string, Synthesized> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto cfg = default_config(name, "p1");
    cfg.abstraction.workers = std::max(1u, std::thread::hardware_concurrency());
    it = cache.emplace(name, Synthesized{cfg, synthesize(cfg)}).first;
  }
  return it->second;
}

struct LoopParts {
  GridCover cover;
  InputGrid inputs;
  RefinedController controller;
  Plant plant;
  CostModel costs;

  explicit LoopParts(const Synthesized& x)
      : cover(x.s.abstraction.cover),
        inputs(x.s.abstraction.inputs),
        controller(serial_compose(x.s.solution.controller, cover)),
        plant(make_plant(x.cfg)),
        costs(x.cfg.costs()) {}

  ClosedLoop loop(const Synthesized& x) const { return {&plant, &controller, &costs, &inputs, x.s.solution.value}; }
};

Outcome pendulum_soundness() {
  Outcome out;
  auto& x = cached("pendulum");
  const auto& cover = x.s.abstraction.cover;
  const auto& w = x.s.solution.value;
  std::size_t winning = 0, inside_d = 0;
  for (StateId c = 0; c < cover.cell_count(); ++c)
    if (w[c].is_finite()) {
      ++winning;
      if (x.cfg.plant.target.box_inside(cover.cell(c))) ++inside_d;
    }
  if (winning == 0) out.fail("empty winning domain");
  if (inside_d == 0) out.fail("no winning cell inside D");

  LoopParts parts(x);
  VerifyOptions opt;
  opt.draws = 10;
  opt.policy = DisturbancePolicy(DisturbancePolicy::Kind::UniformRandom);
  opt.seed = 7;
  opt.tolerance = 1e-9;
  opt.workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Trajectory> runs;
  auto rep = batch_verify(parts.loop(x), sample_winning_states(cover, w, 100, 7), opt, &runs);
  std::size_t missed = 0;
  for (const auto& r : runs)
    if (!r.stopped || !x.cfg.plant.target.contains(r.states.back())) ++missed;
  if (rep.violations) out.fail(std::to_string(rep.violations) + " runs exceeded the bound");
  if (missed) out.fail(std::to_string(missed) + " runs did not reach D");
  if (out.pass)
    out.detail = std::to_string(winning) + " winning cells (" + std::to_string(inside_d) + " inside D); " +
                 std::to_string(rep.runs) + " runs reach D, max cost " + format_cost(rep.max_cost) + " <= bound";
  return out;
}

Outcome chauffeur_soundness() {
  Outcome out;
  auto& x = cached("chauffeur");
  const auto& cover = x.s.abstraction.cover;
  const auto& w = x.s.solution.value;
  const double tau = x.cfg.plant.sys.tau;

  double section_max = 0.0;
  for (int i = -450; i <= 450; ++i) {
    Point p{i / 100.0, 0.0};
    auto bound = pointwise_upper_bound(w, cover, p);
    if (bound.is_infinite()) {
      out.fail("infinite bound on the y=0 section at x=" + fmt(p[0]));
      break;
    }
    section_max = std::max(section_max, bound.value());
  }
  double region_max = 0.0;
  for (StateId c = 0; c < cover.cell_count(); ++c)
    if (w[c].is_finite()) region_max = std::max(region_max, w[c].value());
  if (!(region_max * tau >= 1.0 && region_max * tau <= 60.0))
    out.fail("largest finite capture-time bound " + fmt(region_max * tau) + " s outside [1, 60] s");

  LoopParts parts(x);
  VerifyOptions opt;
  opt.draws = 1;
  opt.policy = DisturbancePolicy(DisturbancePolicy::Kind::UniformRandom);
  opt.seed = 8;
  opt.workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Trajectory> runs;
  auto rep = batch_verify(parts.loop(x), sample_winning_states(cover, w, 100, 8), opt, &runs);
  std::size_t late = 0;
  for (const auto& r : runs) {
    const double capture = double(r.stop_time()) * tau;
    if (!r.stopped || !x.cfg.plant.target.contains(r.states.back()) || !(capture <= r.bound.value() * tau)) ++late;
  }
  if (rep.violations || late) out.fail(std::to_string(std::max(rep.violations, late)) + " pursuits missed the bound");
  if (out.pass)
    out.detail = "y=0 section finite (max " + fmt(section_max * tau) + " s), region max " + fmt(region_max * tau) +
                 " s; 100 pursuits captured within bound";
  return out;
}

/* ---------------------------------------------------------------- 9 */

Outcome relation_soundness() {
  Outcome out;
  std::mt19937_64 rng(909);
  std::size_t related = 0, flipped = 0;
  for (int inst = 0; inst < 50 && out.pass; ++inst) {
    auto r = random_refinement(rng);
    auto v = check_vfrr(r.p1, r.p2, r.q);
    if (!v.holds) {
      out.fail("instance " + std::to_string(inst) + ": generated relation rejected (" + v.violations.front().tag + ")");
      break;
    }
    auto w1 = solve(r.p1).value;
    auto w2 = solve(r.p2).value;
    for (auto [a, b] : r.q.pairs()) {
      ++related;
      if (w1[a] > w2[b]) out.fail("instance " + std::to_string(inst) + ": V1 > V2 on a related pair");
    }

    /* one injected violation per condition; each must flip the verdict */
    auto expect_fail = [&](const Verdict& vd, const char* what) {
      if (vd.holds) out.fail(std::string("instance ") + std::to_string(inst) + ": injected " + what + " not detected");
      else ++flipped;
    };
    const auto m2 = r.p2.input_count();
    std::vector<InputId> bad_map(m2);
    for (InputId u = 0; u < m2; ++u) bad_map[u] = u;
    bad_map.back() = InputId(r.p1.input_count());
    expect_fail(check_vfrr(r.p1, r.p2, r.q, bad_map), "(i)");

    auto rebuild = [&](auto&& edit) {
      FiniteProblemBuilder b(r.p1.state_count(), r.p1.input_count());
      for (StateId s = 0; s < r.p1.state_count(); ++s) b.set_terminal(s, r.p1.terminal(s));
      for (StateId s = 0; s < r.p1.state_count(); ++s)
        for (InputId u = 0; u < r.p1.input_count(); ++u) {
          const auto pair = r.p1.pair_index(s, u);
          const auto succ = r.p1.pair_successors(pair);
          for (std::size_t k = 0; k < succ.size(); ++k) b.add_transition(s, u, succ[k], r.p1.pair_cost(pair, k));
        }
      edit(b);
      return b.build();
    };

    /* (ii): terminal cost above a related finite G2 */
    for (auto [a, b] : r.q.pairs())
      if (r.p2.terminal(b).is_finite()) {
        auto p1 = rebuild([&](FiniteProblemBuilder& bb) { bb.set_terminal(a, r.p2.terminal(b) + ExtendedCost(1.0)); });
        expect_fail(check_vfrr(p1, r.p2, r.q), "(ii)");
        break;
      }
    /* (iii): an infinite cost on a transition whose related costs are finite (pair 0 -> 0 -> 0) */
    {
      auto p2_has = r.p2.running(0, 0, 0);
      if (p2_has.is_finite()) {
        FiniteProblemBuilder b(r.p1.state_count(), r.p1.input_count());
        for (StateId s = 0; s < r.p1.state_count(); ++s) b.set_terminal(s, r.p1.terminal(s));
        for (StateId s = 0; s < r.p1.state_count(); ++s)
          for (InputId u = 0; u < r.p1.input_count(); ++u) {
            const auto pair = r.p1.pair_index(s, u);
            const auto succ = r.p1.pair_successors(pair);
            for (std::size_t k = 0; k < succ.size(); ++k) {
              const bool hit = s == 0 && u == 0 && succ[k] == 0;
              b.add_transition(s, u, succ[k], hit ? p2_has + ExtendedCost(1.0) : r.p1.pair_cost(pair, k));
            }
          }
        expect_fail(check_vfrr(b.build(), r.p2, r.q), "(iii)");
      }
    }
    /* (iv): a successor related only to states outside F2(b,u) */
    for (auto [a, b] : r.q.pairs()) {
      bool done = false;
      for (StateId c = 0; c < r.p1.state_count() && !done; ++c) {
        bool outside = false;
        for (auto q2 : r.q.image(c)) outside = outside || !r.p2.is_successor(b, 0, q2);
        if (!outside || r.p1.is_successor(a, 0, c)) continue;
        auto p1 = rebuild([&](FiniteProblemBuilder& bb) { bb.add_transition(a, 0, c, ExtendedCost(1.0)); });
        expect_fail(check_vfrr(p1, r.p2, r.q), "(iv)");
        done = true;
      }
      if (done) break;
    }
    /* strictness: drop every image of one state */
    {
      std::vector<std::pair<StateId, StateId>> pairs;
      const StateId drop = StateId(r.p1.state_count() - 1);
      for (auto pr : r.q.pairs())
        if (pr.first != drop) pairs.push_back(pr);
      expect_fail(check_vfrr(r.p1, r.p2, Relation(r.p1.state_count(), r.p2.state_count(), pairs)), "strict");
    }
  }
  if (out.pass)
    out.detail = "50 certified pairs, " + std::to_string(related) + " related states with V1 <= V2; " +
                 std::to_string(flipped) + " injected violations detected";
  return out;
}

/* ---------------------------------------------------------------- 10 */

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/* synthesize + simulate into dir */
void pipeline_run(const Config& base, unsigned workers, const std::filesystem::path& dir) {
  auto cfg = base;
  cfg.abstraction.workers = workers;
  auto s = synthesize(cfg);
  write_synthesis(dir.string(), s);
  Synthesized x{cfg, s};
  LoopParts parts(x);
  VerifyOptions opt;
  opt.draws = 3;
  opt.policy = DisturbancePolicy(DisturbancePolicy::Kind::UniformRandom);
  opt.seed = 10;
  opt.workers = workers;
  std::vector<Trajectory> runs;
  auto rep = batch_verify(parts.loop(x), sample_winning_states(parts.cover, s.solution.value, 20, 10), opt, &runs);
  {
    std::ofstream f(dir / "report.txt", std::ios::binary);
    write_report(f, rep);
  }
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::ofstream f(dir / ("trajectory_" + std::to_string(i) + ".csv"), std::ios::binary);
    write_trajectory_csv(f, runs[i]);
  }
}

Outcome determinism() {
  Outcome out;
  const auto root = std::filesystem::temp_directory_path() / ("symctl_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(root);
  std::size_t files = 0;
  const unsigned many = std::max(2u, std::thread::hardware_concurrency());
  for (const auto& [name, preset] :
       std::vector<std::pair<std::string, std::string>>{{"logistic", "n400"}, {"pendulum", "p1"}, {"chauffeur", "p1"}}) {
    auto cfg = default_config(name, preset);
    const auto a = root / (name + "_a"), b = root / (name + "_b");
    pipeline_run(cfg, 1, a);
    pipeline_run(cfg, many, b);
    for (const auto& entry : std::filesystem::directory_iterator(a)) {
      ++files;
      const auto other = b / entry.path().filename();
      if (!std::filesystem::exists(other) || slurp(entry.path()) != slurp(other)) {
        out.fail(name + ": " + entry.path().filename().string() + " differs between reruns");
        break;
      }
    }
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
  }
  std::filesystem::remove_all(root);
  if (out.pass)
    out.detail = std::to_string(files) + " output files byte-identical (1 vs " + std::to_string(many) + " workers)";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"shortest-path equivalence", shortest_paths},
      {"fixed point and maximality", fixed_point},
      {"value-iteration consistency", value_iteration_consistency},
      {"queue equivalence", queue_equivalence},
      {"logistic convergence", logistic_convergence},
      {"reach-set containment", reach_containment},
      {"pendulum synthesis soundness", pendulum_soundness},
      {"chauffeur synthesis soundness", chauffeur_soundness},
      {"relation checker soundness", relation_soundness},
      {"determinism", determinism},
  };
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << t.str() << " s) " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  return std::min(failed, 100);
}
