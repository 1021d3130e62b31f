/*
 * bindings.cc -- Python access to the finite solver, the synthesis pipeline
 * and the logistic-map oracles.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "symctl/analysis.hh"
#include "symctl/errors.hh"
#include "symctl/pipeline.hh"
#include "symctl/shortest_path.hh"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace symctl;

namespace {

std::vector<double> to_floats(std::span<const ExtendedCost> v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

std::vector<std::optional<InputId>> to_inputs(const ControllerTable& t) {
  std::vector<std::optional<InputId>> out(t.size());
  for (StateId p = 0; p < t.size(); ++p)
    if (!t.is_stop(p)) out[p] = t.input(p);
  return out;
}

py::dict solve_problem(const FiniteProblem& p, const std::string& queue) {
  if (queue != "auto" && queue != "heap" && queue != "fifo") throw InputError("queue must be auto, heap or fifo");
  auto discipline = QueueDiscipline::heap();
  std::string used = "heap";
  if (queue != "heap") {
    auto w = is_discrete_cost(p);
    if (w) {
      discipline = QueueDiscipline::fifo(*w);
      used = "fifo";
    } else if (queue == "fifo") {
      throw InputError("fifo queue requires discrete costs");
    }
  }
  auto r = solve(p, discipline);
  return py::dict("values"_a = to_floats(r.value), "controller"_a = to_inputs(r.controller), "queue"_a = used,
                  "queue_operations"_a = r.stats.queue_operations());
}

}  // namespace

PYBIND11_MODULE(_symctl, m) {
  m.doc() = "symbolic optimal controller synthesis";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SoundnessAlarm>(m, "SoundnessAlarm", PyExc_RuntimeError);
  py::register_exception<ResourceAbort>(m, "ResourceAbort", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<FiniteProblem>(m, "FiniteProblem")
      .def_static(
          "from_focp",
          [](const std::string& text) {
            std::istringstream is(text);
            return read_focp(is);
          },
          "text"_a)
      .def("to_focp",
           [](const FiniteProblem& p) {
             std::ostringstream os;
             write_focp(os, p);
             return os.str();
           })
      .def_property_readonly("state_count", &FiniteProblem::state_count)
      .def_property_readonly("input_count", &FiniteProblem::input_count)
      .def_property_readonly("transition_count", &FiniteProblem::transition_count)
      .def("successors",
           [](const FiniteProblem& p, StateId s, InputId u) {
             if (s >= p.state_count() || u >= p.input_count()) throw InputError("index out of range");
             auto succ = p.successors(s, u);
             return std::vector<StateId>(succ.begin(), succ.end());
           })
      .def("__repr__", [](const FiniteProblem& p) {
        return "<FiniteProblem states=" + std::to_string(p.state_count()) +
               " inputs=" + std::to_string(p.input_count()) + ">";
      });

  m.def("solve", &solve_problem, "problem"_a, "queue"_a = "auto",
        "values, controller (None = stop) and the queue discipline used");
  m.def(
      "dp_operator",
      [](const FiniteProblem& p, const std::vector<double>& w) {
        if (w.size() != p.state_count()) throw InputError("value vector has the wrong length");
        std::vector<ExtendedCost> in;
        for (double v : w) in.emplace_back(v);
        return to_floats(dp_operator(p, in));
      },
      "problem"_a, "w"_a);
  m.def(
      "shortest_path_problem",
      [](std::size_t n, const std::vector<std::tuple<StateId, StateId, double>>& arcs, StateId source) {
        std::vector<Arc> a;
        for (auto [f, t, l] : arcs) a.push_back({f, t, l});
        return make_shortest_path(n, a, source);
      },
      "vertex_count"_a, "arcs"_a, "source"_a);

  py::class_<Config>(m, "Config")
      .def_static("load", &load_config_file, "path"_a)
      .def_static("default", &default_config, "dynamics"_a, "preset"_a = "")
      .def_readonly("preset", &Config::preset)
      .def_readwrite("eta", &Config::eta)
      .def_readwrite("mu", &Config::mu)
      .def_readwrite("queue", &Config::queue)
      .def_property_readonly("dynamics", [](const Config& c) { return c.plant.name; })
      .def_property(
          "workers", [](const Config& c) { return c.abstraction.workers; },
          [](Config& c, unsigned w) { c.abstraction.workers = w; });

  py::class_<Synthesis>(m, "Synthesis")
      .def_property_readonly("values", [](const Synthesis& s) { return to_floats(s.solution.value); })
      .def_property_readonly("controller", [](const Synthesis& s) { return to_inputs(s.solution.controller); })
      .def_property_readonly("problem", [](const Synthesis& s) { return s.abstraction.problem; })
      .def_property_readonly("rho", [](const Synthesis& s) { return s.abstraction.certificate.rho(); })
      .def_readonly("queue", &Synthesis::queue)
      .def_readonly("warnings", &Synthesis::warnings)
      .def_readonly("abstraction_seconds", &Synthesis::abstraction_seconds)
      .def_readonly("solve_seconds", &Synthesis::solve_seconds)
      .def("cell_of", [](const Synthesis& s, const Point& x) { return s.abstraction.cover.quantize(x); }, "x"_a)
      .def(
          "upper_bound",
          [](const Synthesis& s, const Point& x) {
            if (x.size() != s.abstraction.cover.dim()) throw InputError("point has the wrong dimension");
            return pointwise_upper_bound(s.solution.value, s.abstraction.cover, x).value();
          },
          "x"_a)
      .def("write", [](const Synthesis& s, const std::string& dir) { write_synthesis(dir, s); }, "directory"_a);

  m.def("synthesize", &synthesize, "config"_a, py::call_guard<py::gil_scoped_release>());

  m.def(
      "logistic_value",
      [](double x, double a, double b, std::size_t max_steps) {
        return logistic_orbit_value(x, a, b, max_steps).value();
      },
      "x"_a, "a"_a = 0.415, "b"_a = 0.69, "max_steps"_a = 512);
  m.def(
      "logistic_sublevels",
      [](double a, double b, std::size_t t_max) {
        std::vector<std::vector<std::pair<double, double>>> out;
        for (const auto& level : logistic_exact_sublevels(a, b, t_max)) {
          out.emplace_back();
          for (const auto& p : level.parts()) out.back().push_back({p.lo, p.hi});
        }
        return out;
      },
      "a"_a, "b"_a, "t_max"_a);
  m.def(
      "hypo_distance",
      [](const std::vector<double>& xs, const std::vector<double>& w, const std::vector<double>& v) {
        std::vector<Point> pts;
        std::vector<ExtendedCost> wc, vc;
        for (double x : xs) pts.push_back({x});
        for (double c : w) wc.emplace_back(c);
        for (double c : v) vc.emplace_back(c);
        auto d = hypo_distance(pts, wc, vc);
        return py::dict("eps"_a = d.eps, "cap"_a = d.cap, "cap_active"_a = d.cap_active);
      },
      "xs"_a, "w"_a, "v"_a);
}
