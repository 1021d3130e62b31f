/*
 * relations.hh
 *
 * Valuated alternating simulation / feedback refinement relations between
 * finite problems, and the glue that refines an abstract controller to the
 * concrete state space (serial composition with the quantizer).
 */

#ifndef SYMCTL_RELATIONS_HH_
#define SYMCTL_RELATIONS_HH_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symctl/cost.hh"
#include "symctl/grid.hh"
#include "symctl/problem.hh"
#include "symctl/solver.hh"

namespace symctl {

/* Q : X1 =>> X2, pairs kept sorted and unique */
class Relation {
 public:
  Relation() = default;
  /* throws InputError on out-of-range indices */
  Relation(std::size_t n1, std::size_t n2, std::vector<std::pair<StateId, StateId>> pairs);

  static Relation identity(std::size_t n);

  std::size_t left_size() const noexcept { return n1_; }
  std::size_t right_size() const noexcept { return n2_; }
  const std::vector<std::pair<StateId, StateId>>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  /* Q(p1) */
  std::span<const StateId> image(StateId p1) const noexcept {
    return {fwd_.data() + fwd_off_[p1], fwd_.data() + fwd_off_[p1 + 1]};
  }
  /* Q^{-1}(p2) */
  std::span<const StateId> preimage(StateId p2) const noexcept {
    return {inv_.data() + inv_off_[p2], inv_.data() + inv_off_[p2 + 1]};
  }
  bool contains(StateId p1, StateId p2) const noexcept;
  /* every p1 has at least one image */
  bool is_strict() const noexcept;

 private:
  std::size_t n1_ = 0, n2_ = 0;
  std::vector<std::pair<StateId, StateId>> pairs_;
  std::vector<std::size_t> fwd_off_, inv_off_;
  std::vector<StateId> fwd_, inv_;
};

/* lines "<p1> <p2>"; sizes are taken from the problems the relation joins */
void write_relation(std::ostream& os, const Relation& q);
Relation read_relation(std::istream& is, std::size_t n1, std::size_t n2);

struct Violation {
  std::string tag;  // "(i)".."(iv)", "strict"
  StateId p1 = 0;
  StateId p2 = 0;
  std::string detail;
};

struct Verdict {
  static constexpr std::size_t kMaxListed = 100;

  bool holds = true;
  std::vector<Violation> violations;  // first kMaxListed
  std::size_t violation_count = 0;
  /* vASR only: (p1,p2,u2) triples skipped because a boundedness premise failed */
  std::size_t gated = 0;

  void add(Violation v);
};

void write_verdict(std::ostream& os, const Verdict& v);

/*
 * Feedback refinement check. input_map[u2] is the index in U1 of the input
 * with index u2 in U2; empty means the identity (requires m2 <= m1).
 * Condition (iii) is evaluated over the transitions q1 in F1(p1,u); for
 * other q1 the finite problem has g1 = inf by construction.
 */
Verdict check_vfrr(const FiniteProblem& p1, const FiniteProblem& p2, const Relation& q,
                   std::span<const InputId> input_map = {});

/* alternating simulation check with slack eps >= 0 */
Verdict check_vasr(const FiniteProblem& p1, const FiniteProblem& p2, const Relation& q, double eps);

/**
 * @brief Abstract controller composed with the quantizer.
 *
 * action(x) = H(quantize(x)); points outside the cover land in the overflow
 * cell whose entry is expected to be Stop.
 */
class RefinedController {
 public:
  /* throws InputError unless the table has one entry per cover state */
  RefinedController(GridCover cover, ControllerTable table);

  ControlAction action(std::span<const double> x) const;
  StateId cell_of(std::span<const double> x) const { return cover_.quantize(x); }

  const GridCover& cover() const noexcept { return cover_; }
  const ControllerTable& table() const noexcept { return table_; }

 private:
  GridCover cover_;
  ControllerTable table_;
};

RefinedController serial_compose(const ControllerTable& table, const GridCover& cover);

/* sup of W over all closed cells containing x; W(overflow) outside the cover */
ExtendedCost pointwise_upper_bound(std::span<const ExtendedCost> w, const GridCover& cover,
                                   std::span<const double> x);

}  // namespace symctl

#endif  // SYMCTL_RELATIONS_HH_
