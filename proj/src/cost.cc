/*
 * cost.cc
 */

#include "symctl/cost.hh"

#include <charconv>
#include <cmath>
#include <string>

#include "symctl/errors.hh"

namespace symctl {

ExtendedCost::ExtendedCost(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0)
    throw InputError("cost must be a non-negative number or inf, got " + std::to_string(v));
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_cost(ExtendedCost c) { return format_double(c.value()); }

ExtendedCost parse_cost(std::string_view token) {
  if (token == "inf" || token == "INF" || token == "Inf" || token == "+inf")
    return ExtendedCost::infinity();
  double v = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    throw InputError("cannot parse cost '" + std::string(token) + "'");
  return ExtendedCost(v);
}

}  // namespace symctl
