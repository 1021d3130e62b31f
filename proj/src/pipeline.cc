/*
 * pipeline.cc
 */

#include "symctl/pipeline.hh"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "symctl/errors.hh"

namespace symctl {

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  return out;
}

}  // namespace

GridCover make_cover(const Config& cfg) {
  return GridCover(cfg.plant.domain.lo, cfg.plant.domain.hi, cfg.eta, cfg.plant.alignment);
}

InputGrid make_inputs(const Config& cfg) { return discretize_inputs(cfg.plant.input_pieces, cfg.mu); }

TransitionFn make_transitions(const Config& cfg, const GridCover& cover, const InputGrid& inputs) {
  if (cfg.plant.discrete) return make_map_transitions(cover, inputs, cfg.plant.image);
  return make_sampled_transitions(cfg.plant.sys, cover, inputs, cfg.reach);
}

Plant make_plant(const Config& cfg, std::size_t pieces) {
  Plant plant;
  plant.dim = cfg.plant.dim();
  if (cfg.plant.discrete) {
    plant.step = [map = cfg.plant.map](std::span<const double> x, std::span<const double> u,
                                       const std::vector<Point>&) { return map(x, u); };
    return plant;
  }
  plant.w = cfg.plant.sys.w;
  plant.disturbance_pieces = std::max<std::size_t>(pieces, 1);
  plant.step = [sys = cfg.plant.sys](std::span<const double> x, std::span<const double> u,
                                     const std::vector<Point>& d) {
    return integrate_perturbed(sys, x, u, sys.tau, d, 4);
  };
  return plant;
}

SuccessorSampler make_sampler(const Config& cfg, DisturbancePolicy policy, std::size_t pieces) {
  auto plant = make_plant(cfg, pieces);
  return [plant, policy](std::span<const double> x, std::span<const double> u, std::mt19937_64& rng) {
    std::vector<Point> d;
    for (std::size_t k = 0; k < plant.disturbance_pieces; ++k) d.push_back(policy.sample(plant.w, rng));
    return plant.step(x, u, d);
  };
}

Synthesis synthesize(const Config& cfg) {
  using clock = std::chrono::steady_clock;
  Synthesis s;
  if (!cfg.plant.discrete) s.warnings = reach_warnings(cfg.plant.sys, cfg.reach);

  const auto t0 = clock::now();
  const auto cover = make_cover(cfg);
  const auto inputs = make_inputs(cfg);
  s.abstraction = build_abstraction(make_transitions(cfg, cover, inputs), cover, inputs, cfg.costs(), cfg.abstraction);
  s.abstraction.certificate.numerical_budget_unverified = !cfg.plant.discrete && !cfg.plant.sys.exact_flow;
  const auto t1 = clock::now();

  auto discipline = QueueDiscipline::heap();
  s.queue = "heap";
  if (cfg.queue != "heap") {
    auto witness = is_discrete_cost(s.abstraction.problem);
    if (witness) {
      discipline = QueueDiscipline::fifo(*witness);
      s.queue = "fifo";
    } else if (cfg.queue == "fifo") {
      throw InputError("queue = fifo requested but the abstract costs are not discrete");
    }
  }
  s.solution = solve(s.abstraction.problem, discipline);
  const auto t2 = clock::now();
  s.abstraction_seconds = std::chrono::duration<double>(t1 - t0).count();
  s.solve_seconds = std::chrono::duration<double>(t2 - t1).count();
  return s;
}

void write_synthesis(const std::string& dir, const Synthesis& s) {
  std::filesystem::path d(dir);
  std::filesystem::create_directories(d);
  {
    auto out = open_out(d / "abstraction.focp");
    write_focp(out, s.abstraction.problem);
  }
  {
    auto out = open_out(d / "abstraction.cover");
    write_sidecar(out, s.abstraction);
    out << "solve.queue = " << s.queue << '\n';
  }
  {
    auto out = open_out(d / "values.txt");
    write_values(out, s.solution.value);
  }
  {
    auto out = open_out(d / "controller.txt");
    write_controller(out, s.solution.controller);
  }
}

}  // namespace symctl
