/*
 * cost.hh
 *
 * Extended non-negative costs [0, inf].
 */

#ifndef SYMCTL_COST_HH_
#define SYMCTL_COST_HH_

#include <compare>
#include <limits>
#include <string>
#include <string_view>

namespace symctl {

/**
 * @brief A value in [0, inf]. Addition saturates at inf.
 *
 * Equality is exact floating comparison. The wrapper is trivially copyable and
 * has the size of a double, so arrays of costs can be used in hot loops.
 */
class ExtendedCost {
 public:
  constexpr ExtendedCost() noexcept = default;
  /* throws InputError on negative or NaN input */
  explicit ExtendedCost(double v);

  static constexpr ExtendedCost infinity() noexcept {
    ExtendedCost c;
    c.v_ = std::numeric_limits<double>::infinity();
    return c;
  }
  static constexpr ExtendedCost zero() noexcept { return ExtendedCost(); }

  constexpr double value() const noexcept { return v_; }
  constexpr bool is_finite() const noexcept {
    return v_ < std::numeric_limits<double>::infinity();
  }
  constexpr bool is_infinite() const noexcept { return !is_finite(); }

  friend constexpr ExtendedCost operator+(ExtendedCost a, ExtendedCost b) noexcept {
    /* IEEE addition already gives inf + x = inf for x >= 0 */
    ExtendedCost c;
    c.v_ = a.v_ + b.v_;
    return c;
  }
  ExtendedCost& operator+=(ExtendedCost o) noexcept {
    v_ += o.v_;
    return *this;
  }

  friend constexpr bool operator==(ExtendedCost, ExtendedCost) = default;
  friend constexpr auto operator<=>(ExtendedCost a, ExtendedCost b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  double v_ = 0.0;
};

/* "inf" or the shortest round-trip decimal representation */
std::string format_cost(ExtendedCost c);
/* accepts "inf" and non-negative decimals; throws InputError otherwise */
ExtendedCost parse_cost(std::string_view token);

/* round-trip decimal for plain doubles */
std::string format_double(double v);

}  // namespace symctl

#endif  // SYMCTL_COST_HH_
