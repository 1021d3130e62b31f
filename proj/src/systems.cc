/*
 * systems.cc
 */

#include "symctl/systems.hh"

#include <cmath>
#include <numbers>

#include "symctl/analysis.hh"
#include "symctl/errors.hh"

namespace symctl {

namespace {

constexpr double kPi = std::numbers::pi;

Box expand(const Box& b, double r) {
  Box out = b;
  for (auto& v : out.lo) v -= r;
  for (auto& v : out.hi) v += r;
  return out;
}

PlantModel logistic() {
  PlantModel p;
  p.name = "logistic";
  p.discrete = true;
  p.sys.name = "logistic";
  p.sys.dim = 1;
  p.sys.input_dim = 1;
  p.map = [](std::span<const double> x, std::span<const double>) { return Point{logistic_map(x[0])}; };
  p.image = [](const Box& b, std::span<const double>) { return logistic_image(b); };
  p.input_pieces = {Box{{0.0}, {0.0}}};
  p.domain = Box{{0.0}, {1.0}};
  p.sys.K = p.domain;
  p.alignment = CellAlignment::Node;
  p.target = SetPredicate::interval({0.415}, {0.69}, true);
  p.obstacle = SetPredicate::empty();
  p.cost_kind = RunningCostKind::Unit;
  p.reach.gamma = 0.0;
  for (int n : {40, 60, 85, 400}) p.presets.push_back({"n" + std::to_string(n), {1.0 / n}, 1.0, 1});
  return p;
}

PlantModel pendulum() {
  constexpr double kappa = 0.01;
  PlantModel p;
  p.name = "pendulum";
  auto& s = p.sys;
  s.name = "pendulum";
  s.dim = 2;
  s.input_dim = 1;
  s.f = [](std::span<const double> x, std::span<const double> u, std::span<double> dx) {
    dx[0] = x[1];
    dx[1] = std::sin(x[0]) + u[0] * std::cos(x[0]) - 2.0 * kappa * x[1];
  };
  s.w = {0.0, 0.1};
  s.tau = 0.2;
  s.A0 = {4.0, 2.5};
  s.A1 = {0.0, 1.0, 2.25, -0.02};
  s.K = Box{{-2 * kPi, -3.0}, {2 * kPi, 3.0}};
  s.Kprime = expand(s.K, 0.9);
  s.eps = 0.1;
  p.input_pieces = {Box{{-2.0}, {2.0}}};
  p.domain = s.K;
  p.target = SetPredicate::quadratic({63.0, 6.0, 6.0, 56.0}, {0.0, 0.0}, 42.0);
  p.obstacle = SetPredicate::complement(SetPredicate::interval(s.K.lo, s.K.hi, true));
  p.obstacle_outside_domain = true;
  p.cost_kind = RunningCostKind::InputSquared;
  p.reach.theta = 1.0;
  p.reach.gamma = 1e-6;
  p.presets = {{"p1", {0.08, 0.08}, 0.2, 1},
               {"p2", {0.04, 0.04}, 0.15, 2},
               {"p3", {0.02, 0.02}, 0.1, 3},
               {"p4", {0.01, 0.01}, 0.05, 4}};
  return p;
}

PlantModel chauffeur() {
  PlantModel p;
  p.name = "chauffeur";
  auto& s = p.sys;
  s.name = "chauffeur";
  s.dim = 2;
  s.input_dim = 1;
  s.f = [](std::span<const double> x, std::span<const double> u, std::span<double> dx) {
    dx[0] = -x[1] * u[0];
    dx[1] = x[0] * u[0] - 1.0;
  };
  /* rotation by u t about (1/u, 0), or a straight drift for u = 0 */
  s.exact_flow = [](std::span<const double> x, std::span<const double> u, double t, std::span<double> out) {
    const double w = u[0];
    if (w == 0.0) {
      out[0] = x[0];
      out[1] = x[1] - t;
      return;
    }
    const double cx = 1.0 / w, c = std::cos(w * t), sn = std::sin(w * t);
    const double dx = x[0] - cx, dy = x[1];
    out[0] = cx + c * dx - sn * dy;
    out[1] = sn * dx + c * dy;
  };
  s.w = {0.3, 0.3};
  s.tau = 0.1;
  s.A0 = {6.4, 6.4};
  s.A1 = {0.0, 1.0, 1.0, 0.0};
  s.K = Box{{-5.0, -5.0}, {5.0, 5.0}};
  s.Kprime = Box{{-6.0, -6.0}, {6.0, 6.0}};
  s.eps = 0.1;
  p.input_pieces = {Box{{-1.0}, {1.0}}};
  p.domain = s.K;
  p.target = SetPredicate::quadratic({1.0, 0.0, 0.0, 1.0}, {0.0, 0.0}, 0.9);
  p.obstacle = SetPredicate::complement(SetPredicate::interval(s.K.lo, s.K.hi, true));
  p.obstacle_outside_domain = true;
  p.cost_kind = RunningCostKind::Unit;
  p.reach.theta = 2.0;
  p.reach.gamma = 0.0;
  p.presets = {{"p1", {0.03, 0.03}, 0.2, 1},
               {"p2", {0.02, 0.02}, 0.1, 2},
               {"p3", {0.015, 0.015}, 0.1, 3},
               {"p4", {0.01, 0.01}, 0.05, 4}};
  return p;
}

}  // namespace

const Preset& PlantModel::preset(const std::string& preset_name) const {
  for (const auto& p : presets)
    if (p.name == preset_name) return p;
  throw InputError(name + ": unknown preset '" + preset_name + "'");
}

PlantModel builtin_plant(const std::string& name) {
  if (name == "logistic") return logistic();
  if (name == "pendulum") return pendulum();
  if (name == "chauffeur") return chauffeur();
  throw InputError("unknown dynamics '" + name + "' (known: logistic, pendulum, chauffeur)");
}

std::vector<std::string> builtin_plant_names() { return {"logistic", "pendulum", "chauffeur"}; }

}  // namespace symctl
