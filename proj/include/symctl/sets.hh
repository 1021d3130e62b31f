/*
 * sets.hh
 *
 * Points, boxes and set predicates over R^n.
 */

#ifndef SYMCTL_SETS_HH_
#define SYMCTL_SETS_HH_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace symctl {

using Point = std::vector<double>;

/* closed hyper-interval [lo, hi] */
struct Box {
  Point lo;
  Point hi;

  std::size_t dim() const noexcept { return lo.size(); }
  Point center() const;
  /* infinity-norm diameter */
  double diameter() const;
  bool contains(std::span<const double> x) const;
  bool meets(const Box& other) const;
};

/* infinity norm */
double inf_norm(std::span<const double> v);

/**
 * @brief Membership predicate for the target, obstacle and domain sets.
 *
 * Membership is evaluated with plain floating comparisons. The box queries are
 * sound in one direction: box_inside() returning true guarantees the closed box
 * is a subset, box_meets() returning false guarantees the closed box is
 * disjoint. Both are exact for hyper-intervals and for convex quadratic sets.
 */
class SetPredicate {
 public:
  /* the empty set */
  SetPredicate();

  static SetPredicate empty();
  static SetPredicate everything();
  /* (lo, hi) if open, [lo, hi] otherwise */
  static SetPredicate interval(Point lo, Point hi, bool open);
  /* { x : x'Qx + b'x < c }, Q row-major n x n */
  static SetPredicate quadratic(std::vector<double> q, Point b, double c);
  static SetPredicate unite(std::vector<SetPredicate> parts);
  static SetPredicate complement(SetPredicate inner);

  bool contains(std::span<const double> x) const;
  bool box_inside(const Box& box) const;
  bool box_meets(const Box& box) const;

  /* parseable form, see parse_set() */
  std::string to_string() const;

  struct Node;

 private:
  explicit SetPredicate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/**
 * Text syntax:
 *   empty | all
 *   box <lo1> <hi1> ... <lon> <hin>        open hyper-interval
 *   cbox <lo1> <hi1> ...                   closed hyper-interval
 *   quad <n> <Q row-major> <b> <c>         { x'Qx + b'x < c }
 *   not <expr>
 *   <expr> | <expr> | ...                  union
 * Throws InputError on malformed input.
 */
SetPredicate parse_set(const std::string& text);

/* decimal number, or one of pi, -pi, 2pi, -2pi */
double parse_number(const std::string& tok);

}  // namespace symctl

#endif  // SYMCTL_SETS_HH_
