/*
 * solver.cc
 */

#include "symctl/solver.hh"

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "symctl/errors.hh"

namespace symctl {

namespace {

bool satisfies_witness(const FiniteProblem& problem, const DiscreteCostWitness& w) {
  for (std::size_t pair = 0; pair < problem.pair_count(); ++pair) {
    auto n_succ = problem.pair_successors(pair).size();
    for (std::size_t k = 0; k < n_succ; ++k) {
      auto g = problem.pair_cost(pair, k);
      if (g.is_finite() && g.value() != w.step) return false;
    }
  }
  for (auto G : problem.terminal_costs())
    if (G.is_finite() && G.value() != w.base && G.value() != w.step + w.base) return false;
  return true;
}

/* worst case over the successors of a pair */
ExtendedCost pair_worst_case(const FiniteProblem& problem, std::size_t pair, std::span<const ExtendedCost> w) {
  auto succ = problem.pair_successors(pair);
  ExtendedCost worst = ExtendedCost::zero();
  for (std::size_t k = 0; k < succ.size(); ++k) {
    auto c = problem.pair_cost(pair, k) + w[succ[k]];
    if (c > worst) worst = c;
  }
  return worst;
}

/* queue front-ends sharing one interface */
class HeapQueue {
 public:
  void push(StateId q, ExtendedCost key) { heap_.emplace(key.value(), q); }
  bool empty() const { return heap_.empty(); }
  std::pair<double, StateId> pop() {
    auto top = heap_.top();
    heap_.pop();
    return top;
  }

 private:
  std::priority_queue<std::pair<double, StateId>, std::vector<std::pair<double, StateId>>, std::greater<>> heap_;
};

class FifoQueue {
 public:
  void push(StateId q, ExtendedCost key) { fifo_.emplace_back(key.value(), q); }
  bool empty() const { return fifo_.empty(); }
  std::pair<double, StateId> pop() {
    auto front = fifo_.front();
    fifo_.pop_front();
    return front;
  }

 private:
  std::deque<std::pair<double, StateId>> fifo_;
};

template <class Queue>
SolveResult run_solver(const FiniteProblem& problem, Queue& queue) {
  const auto n = problem.state_count();
  const auto m = problem.input_count();
  SolveResult res;
  res.value.assign(problem.terminal_costs().begin(), problem.terminal_costs().end());
  res.controller = ControllerTable(n);
  auto& W = res.value;
  auto& stats = res.stats;

  const auto inverse = build_inverse(problem);
  std::vector<std::uint32_t> unsettled(problem.pair_count());
  for (std::size_t pair = 0; pair < problem.pair_count(); ++pair)
    unsettled[pair] = static_cast<std::uint32_t>(problem.pair_successors(pair).size());
  std::vector<std::uint8_t> settled(n, 0);

  /* initial queue in key order so that a FIFO pops a minimum first */
  std::vector<StateId> initial;
  for (StateId p = 0; p < n; ++p)
    if (W[p].is_finite()) initial.push_back(p);
  std::stable_sort(initial.begin(), initial.end(), [&](StateId a, StateId b) { return W[a] < W[b]; });
  for (auto p : initial) {
    queue.push(p, W[p]);
    ++stats.pushes;
  }

  while (!queue.empty()) {
    auto [key, q] = queue.pop();
    ++stats.pops;
    if (settled[q] || key != W[q].value()) continue;
    if (!stats.settle_values.empty() && W[q] < stats.settle_values.back())
      throw SoundnessAlarm("settled values decreased; queue discipline is not admissible");
    settled[q] = 1;
    ++stats.settled;
    stats.settle_values.push_back(W[q]);

    for (auto pair : inverse.predecessors(q)) {
      ++stats.inner_loop;
      if (--unsettled[pair] != 0) continue;
      const auto p = static_cast<StateId>(pair / m);
      const auto M = pair_worst_case(problem, pair, W);
      if (W[p] > M) {
        W[p] = M;
        res.controller.set_input(p, static_cast<InputId>(pair % m));
        queue.push(p, M);
        ++stats.pushes;
      }
    }
  }
  return res;
}

}  // namespace

SolveResult solve(const FiniteProblem& problem, const QueueDiscipline& discipline) {
  if (discipline.kind() == QueueDiscipline::Kind::Fifo) {
    if (!satisfies_witness(problem, discipline.witness()))
      throw InputError("FIFO queue requires costs g in {gamma, inf} and G in {Gamma, gamma+Gamma, inf}");
    FifoQueue q;
    return run_solver(problem, q);
  }
  HeapQueue q;
  return run_solver(problem, q);
}

std::vector<ExtendedCost> dp_operator(const FiniteProblem& problem, std::span<const ExtendedCost> w) {
  const auto n = problem.state_count();
  const auto m = problem.input_count();
  if (w.size() != n) throw InputError("value array size does not match the problem");
  std::vector<ExtendedCost> out(n);
  for (StateId p = 0; p < n; ++p) {
    ExtendedCost best = problem.terminal(p);
    for (InputId u = 0; u < m; ++u) best = std::min(best, pair_worst_case(problem, problem.pair_index(p, u), w));
    out[p] = best;
  }
  return out;
}

std::vector<ExtendedCost> value_iteration(const FiniteProblem& problem, std::size_t iterations) {
  std::vector<ExtendedCost> w(problem.terminal_costs().begin(), problem.terminal_costs().end());
  for (std::size_t t = 0; t < iterations; ++t) w = dp_operator(problem, w);
  return w;
}

std::optional<DiscreteCostWitness> is_discrete_cost(const FiniteProblem& problem) {
  std::set<double> running, terminal;
  for (std::size_t pair = 0; pair < problem.pair_count(); ++pair) {
    auto n_succ = problem.pair_successors(pair).size();
    for (std::size_t k = 0; k < n_succ; ++k) {
      auto g = problem.pair_cost(pair, k);
      if (g.is_finite()) running.insert(g.value());
      if (running.size() > 1) return std::nullopt;
    }
  }
  for (auto G : problem.terminal_costs())
    if (G.is_finite()) terminal.insert(G.value());
  if (terminal.size() > 2) return std::nullopt;

  DiscreteCostWitness w;
  if (!running.empty()) {
    w.step = *running.begin();
    w.base = terminal.empty() ? 0.0 : *terminal.begin();
    if (terminal.size() == 2 && w.base + w.step != *terminal.rbegin()) return std::nullopt;
    return w;
  }
  /* no finite running cost: gamma is free */
  if (terminal.size() == 2) {
    w.base = *terminal.begin();
    w.step = *terminal.rbegin() - w.base;
    if (w.base + w.step != *terminal.rbegin()) return std::nullopt;
  } else if (terminal.size() == 1) {
    w.base = *terminal.begin();
  }
  return w;
}

StaticController extract_controller(const SolveResult& result) { return StaticController(result.controller); }

void write_controller(std::ostream& os, const ControllerTable& table) {
  for (StateId p = 0; p < table.size(); ++p) {
    os << p << ' ';
    if (table.is_stop(p))
      os << "STOP\n";
    else
      os << table.input(p) << '\n';
  }
}

ControllerTable read_controller(std::istream& is) {
  std::vector<std::pair<std::uint64_t, std::string>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::uint64_t p;
    std::string tok, extra;
    if (!(ls >> tok)) continue;
    try {
      std::size_t pos = 0;
      p = std::stoull(tok, &pos);
      if (pos != tok.size() || tok[0] == '-') throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("controller line " + std::to_string(lineno) + ": bad state index");
    }
    if (!(ls >> tok) || (ls >> extra))
      throw InputError("controller line " + std::to_string(lineno) + ": expected '<p> <u|STOP>'");
    rows.emplace_back(p, tok);
  }
  ControllerTable table(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != i) throw InputError("controller rows must list states 0..n-1 in order");
    if (rows[i].second == "STOP") continue;
    try {
      std::size_t pos = 0;
      auto u = std::stoull(rows[i].second, &pos);
      if (pos != rows[i].second.size() || rows[i].second[0] == '-' || u >= ControllerTable::kStop)
        throw std::invalid_argument("u");
      table.set_input(static_cast<StateId>(i), static_cast<InputId>(u));
    } catch (const std::exception&) {
      throw InputError("controller row " + std::to_string(i) + ": bad input '" + rows[i].second + "'");
    }
  }
  return table;
}

void write_values(std::ostream& os, std::span<const ExtendedCost> values) {
  for (std::size_t p = 0; p < values.size(); ++p) os << p << ' ' << format_cost(values[p]) << '\n';
}

std::vector<ExtendedCost> read_values(std::istream& is) {
  std::vector<ExtendedCost> out;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string idx, val, extra;
    if (!(ls >> idx)) continue;
    if (!(ls >> val) || (ls >> extra)) throw InputError("value line must be '<p> <W(p)|inf>'");
    if (idx != std::to_string(out.size())) throw InputError("value rows must list states 0..n-1 in order");
    out.push_back(parse_cost(val));
  }
  return out;
}

}  // namespace symctl
