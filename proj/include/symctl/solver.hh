/*
 * solver.hh
 *
 * Dijkstra-like solution of finite leavable minimax problems, the dynamic
 * programming operator, value iteration, and static controllers.
 */

#ifndef SYMCTL_SOLVER_HH_
#define SYMCTL_SOLVER_HH_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/problem.hh"

namespace symctl {

/* per state: an input, or stop */
class ControllerTable {
 public:
  static constexpr std::uint32_t kStop = 0xffffffffu;

  ControllerTable() = default;
  explicit ControllerTable(std::size_t n) : choice_(n, kStop) {}

  std::size_t size() const noexcept { return choice_.size(); }
  bool is_stop(StateId p) const noexcept { return choice_[p] == kStop; }
  InputId input(StateId p) const noexcept { return choice_[p]; }
  void set_input(StateId p, InputId u) noexcept { choice_[p] = u; }
  void set_stop(StateId p) noexcept { choice_[p] = kStop; }

  friend bool operator==(const ControllerTable&, const ControllerTable&) = default;

 private:
  std::vector<std::uint32_t> choice_;
};

/* g(X,X,U) in {step, inf} and G(X) in {base, step + base, inf} */
struct DiscreteCostWitness {
  double step = 0.0;  // gamma
  double base = 0.0;  // Gamma
};

class QueueDiscipline {
 public:
  enum class Kind { Heap, Fifo };

  static QueueDiscipline heap() { return QueueDiscipline(Kind::Heap, {}); }
  static QueueDiscipline fifo(DiscreteCostWitness w) { return QueueDiscipline(Kind::Fifo, w); }

  Kind kind() const noexcept { return kind_; }
  const DiscreteCostWitness& witness() const noexcept { return witness_; }

 private:
  QueueDiscipline(Kind k, DiscreteCostWitness w) : kind_(k), witness_(w) {}
  Kind kind_;
  DiscreteCostWitness witness_;
};

struct SolveStats {
  std::size_t settled = 0;
  std::size_t pushes = 0;
  std::size_t pops = 0;
  /* predecessor pairs visited; bounded by the transition count */
  std::size_t inner_loop = 0;
  /* W(q) at the moment each state was settled, in settle order */
  std::vector<ExtendedCost> settle_values;

  std::size_t queue_operations() const noexcept { return pushes + pops; }
};

struct SolveResult {
  std::vector<ExtendedCost> value;
  ControllerTable controller;
  SolveStats stats;
};

/**
 * @brief Computes the value function and an optimal static controller.
 *
 * States with finite terminal cost seed the queue with key G. Settling q
 * decrements an unsettled-successor counter for every pair (p,u) with q in
 * F(p,u); once the counter reaches zero the pair's worst-case cost
 * M = max_{y in F(p,u)} g(p,y,u) + W(y) is final, and W(p) is lowered to M
 * if that improves it, recording c(p) = u.
 *
 * Heap ties break toward the lowest state index. Fifo requires the discrete
 * cost condition with the given witness and throws InputError otherwise.
 */
SolveResult solve(const FiniteProblem& problem, const QueueDiscipline& queue = QueueDiscipline::heap());

/* min{ G(p), min_u max_{q in F(p,u)} g(p,q,u) + W(q) } */
std::vector<ExtendedCost> dp_operator(const FiniteProblem& problem, std::span<const ExtendedCost> w);

/* P^T(G) */
std::vector<ExtendedCost> value_iteration(const FiniteProblem& problem, std::size_t iterations);

std::optional<DiscreteCostWitness> is_discrete_cost(const FiniteProblem& problem);

struct ControlAction {
  InputId input;
  bool stop;
  friend bool operator==(const ControlAction&, const ControlAction&) = default;
};

/* H(p) = (u0 = 0, stop) on Stop entries, (c(p), continue) otherwise */
class StaticController {
 public:
  explicit StaticController(ControllerTable table) : table_(std::move(table)) {}
  ControlAction operator()(StateId p) const noexcept {
    return table_.is_stop(p) ? ControlAction{0, true} : ControlAction{table_.input(p), false};
  }
  const ControllerTable& table() const noexcept { return table_; }

 private:
  ControllerTable table_;
};

StaticController extract_controller(const SolveResult& result);

/* controller text: one line per state, "<p> <u>" or "<p> STOP" */
void write_controller(std::ostream& os, const ControllerTable& table);
ControllerTable read_controller(std::istream& is);
/* value text: one line per state, "<p> <W(p)|inf>" */
void write_values(std::ostream& os, std::span<const ExtendedCost> values);
std::vector<ExtendedCost> read_values(std::istream& is);

}  // namespace symctl

#endif  // SYMCTL_SOLVER_HH_
