/*
 * problem.hh
 *
 * Finite optimal control problems (X, U, F, G, g) in compressed adjacency form.
 */

#ifndef SYMCTL_PROBLEM_HH_
#define SYMCTL_PROBLEM_HH_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symctl/cost.hh"

namespace symctl {

using StateId = std::uint32_t;
using InputId = std::uint32_t;

/**
 * @brief A finite optimal control problem.
 *
 * States are 0..n-1 and inputs 0..m-1. For every pair (p,u) the successor list
 * F(p,u) is non-empty and duplicate free. Running costs are stored either per
 * transition or, when g(p,q,u) does not depend on q, once per pair.
 *
 * Pair (p,u) has index p*m + u.
 */
class FiniteProblem {
 public:
  FiniteProblem() = default;

  /* validating constructor; throws InputError if a pair has no successor,
   * an index is out of range, or a successor list contains duplicates */
  FiniteProblem(std::size_t n, std::size_t m, std::vector<ExtendedCost> terminal,
                std::vector<std::uint64_t> offsets, std::vector<StateId> successors,
                std::vector<ExtendedCost> transition_cost);

  /* same, with one running cost per pair (p,u) */
  static FiniteProblem with_pair_costs(std::size_t n, std::size_t m,
                                       std::vector<ExtendedCost> terminal,
                                       std::vector<std::uint64_t> offsets,
                                       std::vector<StateId> successors,
                                       std::vector<ExtendedCost> pair_cost);

  std::size_t state_count() const noexcept { return n_; }
  std::size_t input_count() const noexcept { return m_; }
  std::size_t pair_count() const noexcept { return n_ * m_; }
  std::size_t transition_count() const noexcept { return successors_.size(); }
  bool has_pair_costs() const noexcept { return transition_cost_.empty(); }

  std::size_t pair_index(StateId p, InputId u) const noexcept { return std::size_t(p) * m_ + u; }

  ExtendedCost terminal(StateId p) const noexcept { return terminal_[p]; }
  std::span<const ExtendedCost> terminal_costs() const noexcept { return terminal_; }

  std::span<const StateId> successors(StateId p, InputId u) const noexcept {
    return pair_successors(pair_index(p, u));
  }
  std::span<const StateId> pair_successors(std::size_t pair) const noexcept {
    return {successors_.data() + offsets_[pair], successors_.data() + offsets_[pair + 1]};
  }
  /* running cost of the k-th successor of pair */
  ExtendedCost pair_cost(std::size_t pair, std::size_t k) const noexcept {
    return transition_cost_.empty() ? pair_cost_[pair] : transition_cost_[offsets_[pair] + k];
  }
  /* g(p,q,u); inf when q is not a successor of (p,u) */
  ExtendedCost running(StateId p, StateId q, InputId u) const noexcept;
  bool is_successor(StateId p, InputId u, StateId q) const noexcept;

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }

  /* semantic equality: per-pair and per-transition storage compare equal when
   * every transition carries the same cost */
  friend bool operator==(const FiniteProblem& a, const FiniteProblem& b);

 private:
  void validate() const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<ExtendedCost> terminal_;
  std::vector<std::uint64_t> offsets_;
  std::vector<StateId> successors_;
  std::vector<ExtendedCost> transition_cost_;
  std::vector<ExtendedCost> pair_cost_;
};

/* incremental construction; transitions may be added in any order */
class FiniteProblemBuilder {
 public:
  FiniteProblemBuilder(std::size_t n, std::size_t m);

  void set_terminal(StateId p, ExtendedCost c);
  /* throws InputError on out-of-range indices */
  void add_transition(StateId p, InputId u, StateId q, ExtendedCost g);

  /* throws InputError on missing pairs and duplicate (p,u,q) triples */
  FiniteProblem build() const;

 private:
  struct Entry {
    std::size_t pair;
    StateId target;
    ExtendedCost cost;
  };
  std::size_t n_;
  std::size_t m_;
  std::vector<ExtendedCost> terminal_;
  std::vector<Entry> entries_;
};

/* reverse adjacency: for each state q, the pairs (p,u) with q in F(p,u) */
struct InverseAdjacency {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> pairs;

  std::span<const std::uint32_t> predecessors(StateId q) const noexcept {
    return {pairs.data() + offsets[q], pairs.data() + offsets[q + 1]};
  }
};
InverseAdjacency build_inverse(const FiniteProblem& problem);

/* FOCP v1 text format:
 *   focp <n> <m>
 *   G <p> <value|inf>
 *   T <p> <u> <q> <g|inf>
 * Terminal costs not listed default to inf. Blank lines and '#' comments are skipped. */
void write_focp(std::ostream& os, const FiniteProblem& problem);
FiniteProblem read_focp(std::istream& is);
FiniteProblem read_focp_file(const std::string& path);
void write_focp_file(const std::string& path, const FiniteProblem& problem);

}  // namespace symctl

#endif  // SYMCTL_PROBLEM_HH_
