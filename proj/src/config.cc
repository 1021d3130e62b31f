/*
 * config.cc
 */

#include "symctl/config.hh"

#include <fstream>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "symctl/errors.hh"

namespace symctl {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"system", {"dynamics", "preset", "tau", "w", "A0", "A1", "K", "Kprime_margin", "eps"}},
      {"grid", {"eta", "alignment"}},
      {"inputs", {"U", "mu"}},
      {"costs", {"cost_kind", "target", "obstacle", "A2", "A3"}},
      {"reach", {"k", "theta", "gamma", "integrator_steps", "max_splits"}},
      {"solve", {"queue", "workers"}},
  };
  return s;
}

std::vector<double> numbers(const std::string& key, const std::string& text) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      out.push_back(parse_number(tok));
    } catch (const InputError&) {
      throw InputError("config: " + key + ": bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("config: " + key + " is empty");
  return out;
}

double number(const std::string& key, const std::string& text) {
  auto v = numbers(key, text);
  if (v.size() != 1) throw InputError("config: " + key + " expects one number");
  return v.front();
}

std::size_t count(const std::string& key, const std::string& text) {
  double v = number(key, text);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) throw InputError("config: " + key + " expects a positive integer");
  return static_cast<std::size_t>(v);
}

Point per_axis(const std::string& key, const std::string& text, std::size_t n) {
  auto v = numbers(key, text);
  if (v.size() == 1) v.assign(n, v.front());
  if (v.size() != n) throw InputError("config: " + key + " expects 1 or " + std::to_string(n) + " values");
  return v;
}

Box bounds(const std::string& key, const std::string& text, std::size_t n) {
  auto v = numbers(key, text);
  if (v.size() != 2 * n) throw InputError("config: " + key + " expects lo/hi pairs for " + std::to_string(n) + " axes");
  Box b{Point(n), Point(n)};
  for (std::size_t i = 0; i < n; ++i) {
    b.lo[i] = v[2 * i];
    b.hi[i] = v[2 * i + 1];
    if (!(b.lo[i] <= b.hi[i])) throw InputError("config: " + key + " has lo > hi");
  }
  return b;
}

Box expand(const Box& b, double r) {
  Box out = b;
  for (auto& v : out.lo) v -= r;
  for (auto& v : out.hi) v += r;
  return out;
}

Config from_tree(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    auto it = schema().find(section);
    if (it == schema().end()) {
      if (body.empty()) throw InputError("config: key '" + section + "' outside a section");
      throw InputError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      (void)value;
      if (!it->second.count(key)) throw InputError("config: unknown key '" + key + "' in [" + section + "]");
    }
  }
  auto get = [&](const std::string& path) -> std::optional<std::string> {
    auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '/'));
    return v ? std::optional<std::string>(*v) : std::nullopt;
  };

  auto dyn = get("system/dynamics");
  if (!dyn) throw InputError("config: [system] dynamics is required");
  Config cfg = default_config(*dyn, get("system/preset").value_or(""));
  auto& plant = cfg.plant;
  auto& sys = plant.sys;
  const auto n = sys.dim;

  if (auto v = get("system/tau")) sys.tau = number("tau", *v);
  if (auto v = get("system/w")) sys.w = per_axis("w", *v, n);
  if (auto v = get("system/A0")) sys.A0 = per_axis("A0", *v, n);
  if (auto v = get("system/A1")) {
    sys.A1 = numbers("A1", *v);
    if (sys.A1.size() != n * n) throw InputError("config: A1 expects " + std::to_string(n * n) + " values (row-major)");
  }
  if (auto v = get("system/K")) {
    const double margin = plant.discrete ? 0.0 : sys.Kprime.hi[0] - sys.K.hi[0];
    sys.K = bounds("K", *v, n);
    plant.domain = sys.K;
    sys.Kprime = expand(sys.K, margin);
    if (plant.obstacle_outside_domain && !get("costs/obstacle"))
      plant.obstacle = SetPredicate::complement(SetPredicate::interval(sys.K.lo, sys.K.hi, true));
  }
  if (auto v = get("system/Kprime_margin")) {
    double margin = number("Kprime_margin", *v);
    if (!(margin >= 0.0)) throw InputError("config: Kprime_margin must be non-negative");
    sys.Kprime = expand(sys.K, margin);
  }
  if (auto v = get("system/eps")) sys.eps = number("eps", *v);

  if (auto v = get("grid/eta")) cfg.eta = per_axis("eta", *v, n);
  if (auto v = get("grid/alignment")) plant.alignment = parse_alignment(*v);

  if (auto v = get("inputs/U")) {
    plant.input_pieces.clear();
    std::string rest = *v;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto bar = rest.find('|', start);
      auto piece = rest.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      plant.input_pieces.push_back(bounds("U", piece, sys.input_dim));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
  }
  if (auto v = get("inputs/mu")) cfg.mu = per_axis("mu", *v, sys.input_dim);

  if (auto v = get("costs/cost_kind")) plant.cost_kind = parse_cost_kind(*v);
  if (auto v = get("costs/target")) plant.target = parse_set(*v);
  if (auto v = get("costs/obstacle")) plant.obstacle = parse_set(*v);
  if (auto v = get("costs/A2")) plant.A2 = number("A2", *v);
  if (auto v = get("costs/A3")) plant.A3 = number("A3", *v);
  if (plant.A2 < 0.0 || plant.A3 < 0.0) throw InputError("config: A2 and A3 must be non-negative");

  if (auto v = get("reach/k")) cfg.reach.k = count("k", *v);
  if (auto v = get("reach/theta")) cfg.reach.theta = number("theta", *v);
  if (auto v = get("reach/gamma")) cfg.reach.gamma = number("gamma", *v);
  if (auto v = get("reach/integrator_steps")) cfg.reach.integrator_steps = count("integrator_steps", *v);
  if (auto v = get("reach/max_splits")) cfg.reach.max_splits = count("max_splits", *v);
  if (!(cfg.reach.theta > 0.0)) throw InputError("config: theta must be positive");
  if (!(cfg.reach.gamma >= 0.0)) throw InputError("config: gamma must be non-negative");

  if (auto v = get("solve/queue")) {
    if (*v != "auto" && *v != "heap" && *v != "fifo") throw InputError("config: queue must be auto, heap or fifo");
    cfg.queue = *v;
  }
  if (auto v = get("solve/workers")) cfg.abstraction.workers = static_cast<unsigned>(count("workers", *v));

  for (double e : cfg.eta)
    if (!(e > 0.0)) throw InputError("config: eta must be positive");
  for (double e : cfg.mu)
    if (!(e > 0.0)) throw InputError("config: mu must be positive");
  cfg.abstraction.A2 = plant.A2;
  cfg.abstraction.A3 = plant.A3;
  if (!plant.discrete) sys.validate();
  return cfg;
}

}  // namespace

Config default_config(const std::string& dynamics, const std::string& preset) {
  Config cfg;
  cfg.plant = builtin_plant(dynamics);
  cfg.preset = preset.empty() ? cfg.plant.presets.front().name : preset;
  const auto& p = cfg.plant.preset(cfg.preset);
  cfg.eta = p.eta;
  cfg.mu = Point(cfg.plant.sys.input_dim, p.mu);
  cfg.reach = cfg.plant.reach;
  cfg.reach.k = p.k;
  cfg.abstraction.A2 = cfg.plant.A2;
  cfg.abstraction.A3 = cfg.plant.A3;
  return cfg;
}

Config load_config(std::istream& is) {
  pt::ptree tree;
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return from_tree(tree);
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path + "'");
  return load_config(in);
}

}  // namespace symctl
