/*
 * symctl -- command line front end
 *
 *   symctl solve-finite     --input P.focp [--queue auto|heap|fifo] --values V --controller C
 *   symctl synthesize       --config F --out DIR
 *   symctl simulate         --config F --dir DIR [--x0 "..."]... [--samples N] ...
 *   symctl hypo             --config F --values V... [--samples N] --out DIR
 *   symctl check-relation   --p1 A.focp --p2 B.focp --relation Q [--mode vfrr|vasr] [--eps E]
 *
 * exit codes: 0 ok, 1 input error, 2 soundness alarm, 3 resource abort
 */

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include "symctl/analysis.hh"
#include "symctl/errors.hh"
#include "symctl/pipeline.hh"
#include "symctl/relations.hh"

using namespace symctl;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  return out;
}

Point parse_point(const std::string& text, std::size_t n) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  Point x;
  std::string tok;
  while (is >> tok) x.push_back(parse_number(tok));
  if (x.size() != n) throw InputError("initial state '" + text + "' needs " + std::to_string(n) + " coordinates");
  return x;
}

Config load(const std::string& path, const std::string& preset) {
  auto cfg = load_config_file(path);
  if (!preset.empty()) {
    /* a preset on the command line replaces grid, input and substep settings */
    const auto& p = cfg.plant.preset(preset);
    cfg.preset = preset;
    cfg.eta = p.eta;
    cfg.mu = Point(cfg.plant.sys.input_dim, p.mu);
    cfg.reach.k = p.k;
  }
  return cfg;
}

struct SolveFiniteArgs {
  std::string input, values, controller, queue = "auto";
};

int cmd_solve_finite(const SolveFiniteArgs& a) {
  auto problem = read_focp_file(a.input);
  auto discipline = QueueDiscipline::heap();
  std::string used = "heap";
  if (a.queue != "heap") {
    auto w = is_discrete_cost(problem);
    if (w) {
      discipline = QueueDiscipline::fifo(*w);
      used = "fifo";
    } else if (a.queue == "fifo") {
      throw InputError("fifo queue requires discrete costs (g in {gamma,inf}, G in {Gamma,gamma+Gamma,inf})");
    }
  }
  auto res = solve(problem, discipline);
  {
    auto out = open_out(a.values);
    write_values(out, res.value);
  }
  {
    auto out = open_out(a.controller);
    write_controller(out, res.controller);
  }
  std::cout << "queue=" << used << "\nsettled=" << res.stats.settled << "\nqueue_operations=" << res.stats.queue_operations()
            << '\n';
  return 0;
}

struct SynthArgs {
  std::string config, out, preset;
  unsigned workers = 0;
};

int cmd_synthesize(const SynthArgs& a) {
  auto cfg = load(a.config, a.preset);
  if (a.workers) cfg.abstraction.workers = a.workers;
  auto s = synthesize(cfg);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  write_synthesis(a.out, s);

  std::size_t winning = 0;
  for (StateId p = 0; p < s.abstraction.cover.cell_count(); ++p)
    if (s.solution.value[p].is_finite()) ++winning;
  std::cout << "dynamics=" << cfg.plant.name << "\npreset=" << cfg.preset << "\nstates=" << s.abstraction.problem.state_count()
            << "\ninputs=" << s.abstraction.problem.input_count()
            << "\ntransitions=" << s.abstraction.problem.transition_count() << "\nwinning_cells=" << winning
            << "\nrho=" << format_double(s.abstraction.certificate.rho()) << "\nqueue=" << s.queue
            << "\nabstraction_seconds=" << s.abstraction_seconds << "\nsolve_seconds=" << s.solve_seconds << '\n';
  return 0;
}

struct SimArgs {
  std::string config, dir, out, policy = "uniform", preset;
  std::vector<std::string> x0;
  std::size_t samples = 0, draws = 1, max_steps = 10000, keep = 10;
  std::uint64_t seed = 1;
  double tolerance = -1.0;
  unsigned workers = 1;
};

int cmd_simulate(const SimArgs& a) {
  auto cfg = load(a.config, a.preset);
  const std::filesystem::path dir(a.dir);
  auto values_in = open_in((dir / "values.txt").string());
  auto values = read_values(values_in);
  auto ctl_in = open_in((dir / "controller.txt").string());
  auto table = read_controller(ctl_in);

  const auto cover = make_cover(cfg);
  const auto inputs = make_inputs(cfg);
  if (values.size() != cover.state_count())
    throw InputError("values.txt has " + std::to_string(values.size()) + " states, the configured cover has " +
                     std::to_string(cover.state_count()));
  const auto controller = serial_compose(table, cover);
  const auto plant = make_plant(cfg);
  const auto costs = cfg.costs();
  ClosedLoop loop{&plant, &controller, &costs, &inputs, values};

  std::vector<Point> initial;
  for (const auto& s : a.x0) initial.push_back(parse_point(s, cfg.plant.dim()));
  auto sampled = sample_winning_states(cover, values, a.samples, a.seed);
  initial.insert(initial.end(), sampled.begin(), sampled.end());
  if (initial.empty()) throw InputError("no initial states: give --x0 or --samples (and a non-empty winning domain)");

  VerifyOptions opt;
  opt.draws = a.draws;
  opt.policy = parse_policy(a.policy);
  opt.seed = a.seed;
  opt.max_steps = a.max_steps;
  opt.workers = a.workers;
  /* discrete costs compare exactly; real-valued sums get an absolute slack */
  opt.tolerance = a.tolerance >= 0.0 ? a.tolerance : (cfg.plant.cost_kind == RunningCostKind::InputSquared ? 1e-9 : 0.0);
  std::vector<Trajectory> runs;
  auto report = batch_verify(loop, initial, opt, &runs);

  const std::filesystem::path out(a.out);
  for (std::size_t i = 0; i < runs.size() && i < a.keep; ++i) {
    auto f = open_out(out / ("trajectory_" + std::to_string(i) + ".csv"));
    write_trajectory_csv(f, runs[i]);
  }
  {
    auto f = open_out(out / "report.txt");
    write_report(f, report);
  }
  write_report(std::cout, report);
  return report.violations ? 2 : 0;
}

struct HypoArgs {
  std::string config, out, reference = "exact", preset;
  std::vector<std::string> values;
  std::size_t samples = 4000;
};

int cmd_hypo(const HypoArgs& a) {
  auto cfg = load(a.config, a.preset);
  if (a.reference != "exact") throw InputError("only --reference exact is supported");
  if (cfg.plant.name != "logistic") throw InputError("an exact reference value function exists only for the logistic map");
  const double lo = 0.415, hi = 0.69;
  if (!cfg.plant.target.contains(Point{0.5}) || cfg.plant.target.to_string() != SetPredicate::interval({lo}, {hi}, true).to_string())
    throw InputError("the exact logistic reference assumes the target (0.415, 0.69)");

  /* grid nodes include 0, 1/4, 3/4 and 1, where the reference is infinite */
  const auto xs = unit_grid(a.samples);
  const auto v = logistic_reference(xs, lo, hi);

  const std::filesystem::path out(a.out);
  {
    auto f = open_out(out / "reference.csv");
    write_hypograph_csv(f, xs, v, "V");
  }
  auto report = open_out(out / "hypo.txt");
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    auto in = open_in(a.values[k]);
    auto values = read_values(in);
    /* the cover is recovered from the number of states: eta = 1/N, N+1 cells plus overflow */
    if (values.size() < 3) throw InputError(a.values[k] + ": too few states");
    const auto n = values.size() - 2;
    GridCover cover({0.0}, {1.0}, {1.0 / double(n)}, CellAlignment::Node);
    if (cover.state_count() != values.size()) throw InputError(a.values[k] + ": not a node-aligned cover of [0,1]");
    std::vector<ExtendedCost> w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w[i] = pointwise_upper_bound(values, cover, xs[i]);
    auto d = hypo_distance(xs, w, v);
    {
      auto f = open_out(out / ("upper_bound_" + std::to_string(k) + ".csv"));
      write_hypograph_csv(f, xs, w, "W");
    }
    std::ostringstream line;
    line << "values=" << a.values[k] << " N=" << n << " eps=" << format_double(d.eps) << " cap=" << format_double(d.cap)
         << " cap_active=" << (d.cap_active ? 1 : 0) << '\n';
    report << line.str();
    std::cout << line.str();
  }
  return 0;
}

struct RelArgs {
  std::string p1, p2, relation, mode = "vfrr", out;
  double eps = 0.0;
};

int cmd_check_relation(const RelArgs& a) {
  auto p1 = read_focp_file(a.p1);
  auto p2 = read_focp_file(a.p2);
  auto in = open_in(a.relation);
  auto q = read_relation(in, p1.state_count(), p2.state_count());
  Verdict v;
  if (a.mode == "vfrr")
    v = check_vfrr(p1, p2, q);
  else if (a.mode == "vasr")
    v = check_vasr(p1, p2, q, a.eps);
  else
    throw InputError("--mode must be vfrr or vasr");
  if (!a.out.empty()) {
    auto f = open_out(a.out);
    write_verdict(f, v);
  }
  write_verdict(std::cout, v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic optimal controller synthesis"};
  app.require_subcommand(1);

  SolveFiniteArgs sf;
  auto* c_sf = app.add_subcommand("solve-finite", "solve a finite problem given in FOCP v1");
  c_sf->add_option("--input", sf.input, "FOCP file")->required();
  c_sf->add_option("--queue", sf.queue, "auto, heap or fifo")->check(CLI::IsMember({"auto", "heap", "fifo"}));
  c_sf->add_option("--values", sf.values, "value output")->required();
  c_sf->add_option("--controller", sf.controller, "controller output")->required();

  SynthArgs sy;
  auto* c_sy = app.add_subcommand("synthesize", "abstract, solve and write the controller");
  c_sy->add_option("--config", sy.config)->required();
  c_sy->add_option("--out", sy.out, "output directory")->required();
  c_sy->add_option("--preset", sy.preset, "override the config preset");
  c_sy->add_option("--workers", sy.workers, "threads for the transition computation");

  SimArgs si;
  auto* c_si = app.add_subcommand("simulate", "closed-loop runs against the concrete plant");
  c_si->add_option("--config", si.config)->required();
  c_si->add_option("--dir", si.dir, "directory written by synthesize")->required();
  c_si->add_option("--out", si.out, "output directory")->required();
  c_si->add_option("--preset", si.preset);
  c_si->add_option("--x0", si.x0, "initial state, e.g. \"1.0 -0.5\"");
  c_si->add_option("--samples", si.samples, "random initial states from the winning domain");
  c_si->add_option("--draws", si.draws, "disturbance realizations per initial state");
  c_si->add_option("--policy", si.policy, "zero, uniform or corners");
  c_si->add_option("--seed", si.seed);
  c_si->add_option("--max-steps", si.max_steps);
  c_si->add_option("--keep", si.keep, "trajectory CSVs to write");
  c_si->add_option("--tolerance", si.tolerance, "absolute slack on cost <= bound");
  c_si->add_option("--workers", si.workers);

  HypoArgs hy;
  auto* c_hy = app.add_subcommand("hypo", "hypograph distance to a reference value function");
  c_hy->add_option("--config", hy.config)->required();
  c_hy->add_option("--values", hy.values)->required();
  c_hy->add_option("--samples", hy.samples);
  c_hy->add_option("--reference", hy.reference);
  c_hy->add_option("--out", hy.out)->required();

  RelArgs re;
  auto* c_re = app.add_subcommand("check-relation", "check a relation between two finite problems");
  c_re->add_option("--p1", re.p1)->required();
  c_re->add_option("--p2", re.p2)->required();
  c_re->add_option("--relation", re.relation)->required();
  c_re->add_option("--mode", re.mode);
  c_re->add_option("--eps", re.eps);
  c_re->add_option("--out", re.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*c_sf) return cmd_solve_finite(sf);
    if (*c_sy) return cmd_synthesize(sy);
    if (*c_si) return cmd_simulate(si);
    if (*c_hy) return cmd_hypo(hy);
    if (*c_re) return cmd_check_relation(re);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const SoundnessAlarm& e) {
    std::cerr << "soundness alarm: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceAbort& e) {
    std::cerr << "resource abort: " << e.what() << '\n';
    return 3;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource abort: out of memory\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
