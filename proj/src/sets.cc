/*
 * sets.cc
 */

#include "symctl/sets.hh"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

#include "symctl/cost.hh"
#include "symctl/errors.hh"

namespace symctl {

Point Box::center() const {
  Point c(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

double Box::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) d = std::max(d, hi[i] - lo[i]);
  return d;
}

bool Box::contains(std::span<const double> x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

bool Box::meets(const Box& other) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (other.hi[i] < lo[i] || other.lo[i] > hi[i]) return false;
  return true;
}

double inf_norm(std::span<const double> v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

namespace {

struct EmptySet {};
struct Interval {
  Point lo, hi;
  bool open;
};
struct Quadratic {
  std::vector<double> q;
  Point b;
  double c;
  bool convex;
};
struct Union {
  std::vector<SetPredicate> parts;
};
struct Complement {
  SetPredicate inner;
};

struct Range {
  double lo, hi;
};

Range mul(Range a, Range b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Range square(Range a) {
  if (a.lo >= 0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi <= 0) return {a.hi * a.hi, a.lo * a.lo};
  return {0.0, std::max(a.lo * a.lo, a.hi * a.hi)};
}

Range scale(Range a, double s) { return s >= 0 ? Range{s * a.lo, s * a.hi} : Range{s * a.hi, s * a.lo}; }

double quad_value(const Quadratic& f, std::span<const double> x) {
  const auto n = f.b.size();
  double v = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += f.q[i * n + j] * x[j];
    v += x[i] * row + f.b[i] * x[i];
  }
  return v;
}

/* interval enclosure of the quadratic over the box */
Range quad_range(const Quadratic& f, const Box& box) {
  const auto n = f.b.size();
  Range total{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Range xi{box.lo[i], box.hi[i]};
    Range t = scale(square(xi), f.q[i * n + i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      Range cross = scale(mul(xi, Range{box.lo[j], box.hi[j]}), f.q[i * n + j] + f.q[j * n + i]);
      t = {t.lo + cross.lo, t.hi + cross.hi};
    }
    Range lin = scale(xi, f.b[i]);
    total.lo += t.lo + lin.lo;
    total.hi += t.hi + lin.hi;
  }
  return total;
}

double determinant(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

/* positive semidefinite test on the symmetric part via all principal minors */
bool is_psd(const std::vector<double>& q, std::size_t n) {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto k = idx.size();
    std::vector<double> sub(k * k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        sub[r * k + c] = 0.5 * (q[idx[r] * n + idx[c]] + q[idx[c] * n + idx[r]]);
    if (determinant(sub, k) < -1e-12) return false;
  }
  return true;
}

/* approximate minimizer of a convex quadratic over a box by projected coordinate descent */
Point convex_box_argmin(const Quadratic& f, const Box& box) {
  const auto n = f.b.size();
  Point x = box.center();
  for (int sweep = 0; sweep < 50; ++sweep) {
    for (std::size_t i = 0; i < n; ++i) {
      double a = f.q[i * n + i];
      double lin = f.b[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) lin += (f.q[i * n + j] + f.q[j * n + i]) * x[j];
      double xi = a > 0 ? -lin / (2 * a) : (lin > 0 ? box.lo[i] : box.hi[i]);
      x[i] = std::clamp(xi, box.lo[i], box.hi[i]);
    }
  }
  return x;
}

}  // namespace

struct SetPredicate::Node {
  std::variant<EmptySet, Interval, Quadratic, Union, Complement> v;
};

SetPredicate::SetPredicate() : node_(std::make_shared<Node>(Node{EmptySet{}})) {}

SetPredicate SetPredicate::empty() { return SetPredicate(); }

SetPredicate SetPredicate::everything() { return complement(empty()); }

SetPredicate SetPredicate::interval(Point lo, Point hi, bool open) {
  if (lo.size() != hi.size() || lo.empty()) throw InputError("interval bounds must have equal positive length");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i])) throw InputError("interval lower bound exceeds upper bound");
  return SetPredicate(std::make_shared<Node>(Node{Interval{std::move(lo), std::move(hi), open}}));
}

SetPredicate SetPredicate::quadratic(std::vector<double> q, Point b, double c) {
  const auto n = b.size();
  if (n == 0 || q.size() != n * n) throw InputError("quadratic set needs an n x n matrix and n-vector");
  if (n > 10) throw InputError("quadratic sets are limited to dimension 10");
  bool convex = is_psd(q, n);
  return SetPredicate(std::make_shared<Node>(Node{Quadratic{std::move(q), std::move(b), c, convex}}));
}

SetPredicate SetPredicate::unite(std::vector<SetPredicate> parts) {
  if (parts.empty()) return empty();
  if (parts.size() == 1) return parts.front();
  return SetPredicate(std::make_shared<Node>(Node{Union{std::move(parts)}}));
}

SetPredicate SetPredicate::complement(SetPredicate inner) {
  return SetPredicate(std::make_shared<Node>(Node{Complement{std::move(inner)}}));
}

bool SetPredicate::contains(std::span<const double> x) const {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptySet>) {
          return false;
        } else if constexpr (std::is_same_v<T, Interval>) {
          if (x.size() != s.lo.size()) throw InputError("point dimension does not match set");
          for (std::size_t i = 0; i < s.lo.size(); ++i) {
            if (s.open ? (x[i] <= s.lo[i] || x[i] >= s.hi[i]) : (x[i] < s.lo[i] || x[i] > s.hi[i]))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (x.size() != s.b.size()) throw InputError("point dimension does not match set");
          return quad_value(s, x) < s.c;
        } else if constexpr (std::is_same_v<T, Union>) {
          return std::any_of(s.parts.begin(), s.parts.end(), [&](const auto& p) { return p.contains(x); });
        } else {
          return !s.inner.contains(x);
        }
      },
      node_->v);
}

bool SetPredicate::box_inside(const Box& box) const {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptySet>) {
          return false;
        } else if constexpr (std::is_same_v<T, Interval>) {
          for (std::size_t i = 0; i < s.lo.size(); ++i) {
            if (s.open ? (box.lo[i] <= s.lo[i] || box.hi[i] >= s.hi[i])
                       : (box.lo[i] < s.lo[i] || box.hi[i] > s.hi[i]))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (s.convex) {
            /* the maximum of a convex function over a box sits at a vertex */
            const auto n = s.b.size();
            Point v(n);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
              for (std::size_t i = 0; i < n; ++i) v[i] = (mask & (1u << i)) ? box.hi[i] : box.lo[i];
              if (!(quad_value(s, v) < s.c)) return false;
            }
            return true;
          }
          return quad_range(s, box).hi < s.c;
        } else if constexpr (std::is_same_v<T, Union>) {
          return std::any_of(s.parts.begin(), s.parts.end(), [&](const auto& p) { return p.box_inside(box); });
        } else {
          return !s.inner.box_meets(box);
        }
      },
      node_->v);
}

bool SetPredicate::box_meets(const Box& box) const {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptySet>) {
          return false;
        } else if constexpr (std::is_same_v<T, Interval>) {
          for (std::size_t i = 0; i < s.lo.size(); ++i) {
            if (s.open ? (box.hi[i] <= s.lo[i] || box.lo[i] >= s.hi[i])
                       : (box.hi[i] < s.lo[i] || box.lo[i] > s.hi[i]))
              return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          if (s.convex && quad_value(s, convex_box_argmin(s, box)) < s.c) return true;
          return quad_range(s, box).lo < s.c;
        } else if constexpr (std::is_same_v<T, Union>) {
          return std::any_of(s.parts.begin(), s.parts.end(), [&](const auto& p) { return p.box_meets(box); });
        } else {
          return !s.inner.box_inside(box);
        }
      },
      node_->v);
}

std::string SetPredicate::to_string() const {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, EmptySet>) {
          os << "empty";
        } else if constexpr (std::is_same_v<T, Interval>) {
          os << (s.open ? "box" : "cbox");
          for (std::size_t i = 0; i < s.lo.size(); ++i)
            os << ' ' << format_double(s.lo[i]) << ' ' << format_double(s.hi[i]);
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          os << "quad " << s.b.size();
          for (double v : s.q) os << ' ' << format_double(v);
          for (double v : s.b) os << ' ' << format_double(v);
          os << ' ' << format_double(s.c);
        } else if constexpr (std::is_same_v<T, Union>) {
          for (std::size_t i = 0; i < s.parts.size(); ++i) os << (i ? " | " : "") << s.parts[i].to_string();
        } else {
          if (std::holds_alternative<EmptySet>(s.inner.node_->v))
            os << "all";
          else
            os << "not " << s.inner.to_string();
        }
        return os.str();
      },
      node_->v);
}

double parse_number(const std::string& tok) {
  if (tok == "pi") return std::numbers::pi;
  if (tok == "-pi") return -std::numbers::pi;
  if (tok == "2pi") return 2 * std::numbers::pi;
  if (tok == "-2pi") return -2 * std::numbers::pi;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw InputError("set syntax: bad number '" + tok + "'");
  }
  if (pos != tok.size()) throw InputError("set syntax: bad number '" + tok + "'");
  return v;
}

namespace {

SetPredicate parse_term(const std::vector<std::string>& tok, std::size_t& i) {
  if (i >= tok.size()) throw InputError("set syntax: unexpected end of expression");
  const auto& head = tok[i++];
  auto numbers_until_bar = [&] {
    std::vector<double> v;
    while (i < tok.size() && tok[i] != "|") v.push_back(parse_number(tok[i++]));
    return v;
  };
  if (head == "empty") return SetPredicate::empty();
  if (head == "all") return SetPredicate::everything();
  if (head == "not") return SetPredicate::complement(parse_term(tok, i));
  if (head == "box" || head == "cbox") {
    auto v = numbers_until_bar();
    if (v.empty() || v.size() % 2 != 0) throw InputError("set syntax: box needs pairs of bounds");
    Point lo, hi;
    for (std::size_t k = 0; k < v.size(); k += 2) {
      lo.push_back(v[k]);
      hi.push_back(v[k + 1]);
    }
    return SetPredicate::interval(lo, hi, head == "box");
  }
  if (head == "quad") {
    auto v = numbers_until_bar();
    if (v.empty()) throw InputError("set syntax: quad needs a dimension");
    auto n = static_cast<std::size_t>(v[0]);
    if (double(n) != v[0] || n == 0 || v.size() != 1 + n * n + n + 1)
      throw InputError("set syntax: quad expects n, n*n matrix entries, n linear terms and c");
    std::vector<double> q(v.begin() + 1, v.begin() + 1 + n * n);
    Point b(v.begin() + 1 + n * n, v.begin() + 1 + n * n + n);
    return SetPredicate::quadratic(q, b, v.back());
  }
  throw InputError("set syntax: unknown primitive '" + head + "'");
}

}  // namespace

SetPredicate parse_set(const std::string& text) {
  std::vector<std::string> tok;
  std::istringstream is(text);
  for (std::string t; is >> t;) {
    /* allow '|' glued to neighbours */
    std::size_t start = 0;
    for (std::size_t k = 0; k <= t.size(); ++k) {
      if (k == t.size() || t[k] == '|') {
        if (k > start) tok.push_back(t.substr(start, k - start));
        if (k < t.size()) tok.push_back("|");
        start = k + 1;
      }
    }
  }
  if (tok.empty()) throw InputError("set syntax: empty expression");
  std::vector<SetPredicate> parts;
  std::size_t i = 0;
  while (true) {
    parts.push_back(parse_term(tok, i));
    if (i == tok.size()) break;
    if (tok[i] != "|") throw InputError("set syntax: unexpected token '" + tok[i] + "'");
    ++i;
  }
  return SetPredicate::unite(std::move(parts));
}

}  // namespace symctl
