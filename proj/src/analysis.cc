/*
 * analysis.cc
 */

#include "symctl/analysis.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "symctl/errors.hh"

namespace symctl {

namespace {

constexpr int kOutwardUlps = 4;

double round_down(double x) {
  for (int i = 0; i < kOutwardUlps; ++i) x = std::nextafter(x, -INFINITY);
  return x;
}

double round_up(double x) {
  for (int i = 0; i < kOutwardUlps; ++i) x = std::nextafter(x, INFINITY);
  return x;
}

struct Closed {
  double lo, hi;
};

void merge_closed(std::vector<Closed>& v) {
  std::sort(v.begin(), v.end(), [](const Closed& a, const Closed& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Closed> out;
  for (const auto& c : v) {
    if (!out.empty() && c.lo <= out.back().hi)
      out.back().hi = std::max(out.back().hi, c.hi);
    else
      out.push_back(c);
  }
  v = std::move(out);
}

}  // namespace

IntervalUnion1D::IntervalUnion1D(std::vector<Part> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const Part& p) { return !(p.lo < p.hi); }), parts.end());
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  /* open intervals that merely touch stay apart: the shared endpoint is in neither */
  for (const auto& p : parts) {
    if (!parts_.empty() && p.lo < parts_.back().hi)
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    else
      parts_.push_back(p);
  }
}

bool IntervalUnion1D::contains(double x) const noexcept {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x, [](double v, const Part& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return it->lo < x && x < it->hi;
}

bool IntervalUnion1D::covers(double a, double b) const noexcept {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), a, [](double v, const Part& p) { return v < p.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return it->lo < a && b < it->hi;
}

bool IntervalUnion1D::subset_of(const IntervalUnion1D& other) const noexcept {
  for (const auto& p : parts_) {
    bool inside = false;
    for (const auto& q : other.parts_)
      if (q.lo <= p.lo && p.hi <= q.hi) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

IntervalUnion1D IntervalUnion1D::unite(const IntervalUnion1D& other) const {
  auto all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion1D(std::move(all));
}

Box logistic_image(const Box& box) {
  if (box.dim() != 1) throw InputError("logistic map is one-dimensional");
  const double lo = box.lo[0], hi = box.hi[0];
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) throw InputError("logistic map is defined on [0,1]");
  const double fa = logistic_map(lo), fb = logistic_map(hi);
  double a, b;
  if (hi <= 0.5) {
    a = fa, b = fb;
  } else if (lo >= 0.5) {
    a = fb, b = fa;
  } else {
    a = std::min(fa, fb), b = 1.0;
  }
  return Box{{std::max(0.0, round_down(a))}, {std::min(1.0, round_up(b))}};
}

std::vector<IntervalUnion1D> logistic_exact_sublevels(double a, double b, std::size_t t_max) {
  if (!(0.0 < a && a < b && b < 1.0)) throw InputError("target must be an open interval inside (0,1)");
  const IntervalUnion1D target({{a, b}});
  std::vector<IntervalUnion1D> out{target};
  for (std::size_t t = 0; t < t_max; ++t) {
    std::vector<IntervalUnion1D::Part> pre;
    for (const auto& p : out.back().parts()) {
      const double sa = std::sqrt(1.0 - p.lo), sb = std::sqrt(1.0 - std::min(p.hi, 1.0));
      pre.push_back({(1.0 - sa) / 2.0, (1.0 - sb) / 2.0});
      pre.push_back({(1.0 + sb) / 2.0, (1.0 + sa) / 2.0});
    }
    out.push_back(IntervalUnion1D(std::move(pre)).unite(target).unite(out.back()));
  }
  return out;
}

ExtendedCost logistic_exact_value(const std::vector<IntervalUnion1D>& sublevels, double x) {
  for (std::size_t t = 0; t < sublevels.size(); ++t)
    if (sublevels[t].contains(x)) return ExtendedCost(double(t));
  return ExtendedCost::infinity();
}

ExtendedCost logistic_orbit_value(double x, double a, double b, std::size_t max_steps) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  Real p = x;
  const Real lo = a, hi = b;
  for (std::size_t t = 0; t <= max_steps; ++t) {
    if (lo < p && p < hi) return ExtendedCost(double(t));
    p = 4 * p * (1 - p);
  }
  return ExtendedCost::infinity();
}

ExtendedCost logistic_sup_value(double lo, double hi, double a, double b, std::size_t max_steps) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) throw InputError("interval must lie in [0,1]");
  std::vector<Closed> cur{{lo, hi}};
  for (std::size_t t = 0; t <= max_steps; ++t) {
    /* points of cur that have not stopped yet */
    std::vector<Closed> rest;
    for (const auto& c : cur) {
      if (c.lo <= a) rest.push_back({c.lo, std::min(c.hi, a)});
      if (c.hi >= b) rest.push_back({std::max(c.lo, b), c.hi});
    }
    if (rest.empty()) return ExtendedCost(double(t));
    for (const auto& c : rest)
      /* 0 and 3/4 are fixed points outside the target */
      if ((c.lo <= 0.0) || (c.lo <= 0.75 && 0.75 <= c.hi && !(a < 0.75 && 0.75 < b)) || c.hi >= 1.0)
        return ExtendedCost::infinity();
    cur.clear();
    for (const auto& c : rest) {
      auto img = logistic_image(Box{{c.lo}, {c.hi}});
      cur.push_back({img.lo[0], img.hi[0]});
    }
    merge_closed(cur);
  }
  return ExtendedCost::infinity();
}

std::vector<Point> unit_grid(std::size_t intervals) {
  if (intervals == 0) throw InputError("sample grid needs at least one interval");
  std::vector<Point> xs(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) xs[i] = {double(i) / double(intervals)};
  return xs;
}

std::vector<ExtendedCost> logistic_reference(std::span<const Point> xs, double a, double b, std::size_t max_steps) {
  std::vector<ExtendedCost> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = logistic_orbit_value(xs[i][0], a, b, max_steps);
  return v;
}

HypoDistance hypo_distance(std::span<const Point> xs, std::span<const ExtendedCost> w,
                           std::span<const ExtendedCost> v) {
  const auto n = xs.size();
  if (w.size() != n || v.size() != n) throw InputError("sample arrays must have equal length");
  HypoDistance out;
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] < v[i])
      throw SoundnessAlarm("upper bound below the reference value at sample " + std::to_string(i) + ": " +
                           format_cost(w[i]) + " < " + format_cost(v[i]));
    if (w[i].is_finite()) top = std::max(top, w[i].value());
    if (v[i].is_finite()) top = std::max(top, v[i].value());
    if (w[i].is_infinite() || v[i].is_infinite()) out.cap_active = true;
  }
  out.cap = 2.0 * top + 1.0;
  std::vector<double> wc(n), vc(n);
  for (std::size_t i = 0; i < n; ++i) {
    wc[i] = std::min(w[i].value(), out.cap);
    vc[i] = std::min(v[i].value(), out.cap);
  }
  auto dist = [&](std::size_t i, std::size_t j) {
    double d = 0.0;
    for (std::size_t k = 0; k < xs[i].size(); ++k) d = std::max(d, std::abs(xs[i][k] - xs[j][k]));
    return d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::max(0.0, wc[i] - vc[i]);
    for (std::size_t j = 0; j < n && best > 0.0; ++j) {
      const double lift = std::max(0.0, wc[i] - vc[j]);
      if (lift >= best) continue;
      best = std::min(best, std::max(dist(i, j), lift));
    }
    out.eps = std::max(out.eps, best);
  }
  return out;
}

void write_hypograph_csv(std::ostream& os, std::span<const Point> xs, std::span<const ExtendedCost> values,
                         const char* label) {
  if (xs.size() != values.size()) throw InputError("sample arrays must have equal length");
  const auto n = xs.empty() ? 1 : xs.front().size();
  if (n == 1) {
    os << "x";
  } else {
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << 'x' << (k + 1);
  }
  os << ',' << label << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << format_double(xs[i][k]);
    os << ',' << format_cost(values[i]) << '\n';
  }
}

void write_sublevels_csv(std::ostream& os, const std::vector<IntervalUnion1D>& sublevels) {
  os << "T,a,b\n";
  for (std::size_t t = 0; t < sublevels.size(); ++t)
    for (const auto& p : sublevels[t].parts()) os << t << ',' << format_double(p.lo) << ',' << format_double(p.hi) << '\n';
}

}  // namespace symctl
