/*
 * reach.cc
 */

#include "symctl/reach.hh"

#include <algorithm>
#include <cmath>

#include "symctl/errors.hh"

namespace symctl {

namespace {

void check_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) throw NumericalError("integration produced a non-finite state");
}

/* classical RK4 on ydot = rhs(y), n steps of size h, in place */
template <class Rhs>
void rk4(Rhs&& rhs, std::vector<double>& y, double h, std::size_t steps) {
  const auto n = y.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (std::size_t s = 0; s < steps; ++s) {
    rhs(y, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
}

}  // namespace

void SampledSystem::validate() const {
  if (dim == 0 || input_dim == 0) throw InputError(name + ": dimensions must be positive");
  if (!f) throw InputError(name + ": missing vector field");
  if (w.size() != dim || A0.size() != dim || A1.size() != dim * dim) throw InputError(name + ": bound sizes do not match the state dimension");
  if (K.dim() != dim || Kprime.dim() != dim) throw InputError(name + ": K and K' must match the state dimension");
  if (!(tau > 0.0)) throw InputError(name + ": tau must be positive");
  if (!(eps >= 0.0)) throw InputError(name + ": eps must be non-negative");
  for (double v : w)
    if (!(v >= 0.0)) throw InputError(name + ": w must be non-negative");
  for (double v : A0)
    if (!(v >= 0.0)) throw InputError(name + ": A0 must be non-negative");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i != j && !(A1[i * dim + j] >= 0.0)) throw InputError(name + ": A1 off-diagonal entries must be non-negative");
  const double reach = tau * inf_norm(A0);
  for (std::size_t i = 0; i < dim; ++i)
    if (K.lo[i] - reach < Kprime.lo[i] || K.hi[i] + reach > Kprime.hi[i])
      throw InputError(name + ": ball around K of radius tau*|A0| is not contained in K'");
}

Box IntervalBox::box() const {
  Box b{center, center};
  for (std::size_t i = 0; i < center.size(); ++i) {
    b.lo[i] -= radius[i];
    b.hi[i] += radius[i];
  }
  return b;
}

std::vector<std::string> reach_warnings(const SampledSystem& sys, const ReachOptions& opt) {
  std::vector<std::string> out;
  const double a0 = inf_norm(sys.A0);
  if (a0 > 0.0 && sys.tau / double(opt.k) > sys.eps / a0)
    out.push_back(sys.name + ": tau/k = " + std::to_string(sys.tau / double(opt.k)) + " exceeds eps/|A0| = " +
                  std::to_string(sys.eps / a0) + "; excursions between substep boundaries are not covered by the escape test");
  return out;
}

Point integrate_nominal(const SampledSystem& sys, std::span<const double> x0, std::span<const double> u, double t,
                        std::size_t substeps) {
  if (!(t > 0.0) || substeps == 0) throw InputError("integration needs t > 0 and at least one step");
  Point y(x0.begin(), x0.end());
  if (sys.exact_flow) {
    Point out(y.size());
    sys.exact_flow(y, u, t, out);
    check_finite(out);
    return out;
  }
  rk4([&](const std::vector<double>& x, std::vector<double>& dx) { sys.f(x, u, dx); }, y, t / double(substeps),
      substeps);
  check_finite(y);
  return y;
}

Point integrate_perturbed(const SampledSystem& sys, std::span<const double> x0, std::span<const double> u, double t,
                          const std::vector<Point>& disturbances, std::size_t steps) {
  if (!(t > 0.0) || steps == 0 || disturbances.empty()) throw InputError("integration needs t > 0, steps and disturbances");
  Point y(x0.begin(), x0.end());
  const double piece = t / double(disturbances.size());
  for (const auto& d : disturbances) {
    rk4(
        [&](const std::vector<double>& x, std::vector<double>& dx) {
          sys.f(x, u, dx);
          for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += d[i];
        },
        y, piece / double(steps), steps);
  }
  check_finite(y);
  return y;
}

Point growth_bound(const SampledSystem& sys, std::span<const double> r0, double t, std::size_t substeps,
                   bool with_disturbance) {
  if (!(t > 0.0) || substeps == 0) throw InputError("integration needs t > 0 and at least one step");
  const auto n = sys.dim;
  const auto m = 2 * n;
  /*
   * [r; w]' = [[A1, I], [0, 0]] [r; w] is Metzler. With c >= -min diag the
   * shifted matrix B = M + cI is entrywise non-negative, so
   *   exp(Mh) v = exp(-ch) sum_k (hB)^k v / k!
   * has non-negative terms: the truncated sum plus a tail bound is an
   * upper bound, unlike an RK step which truncates the same series.
   */
  double c = 0.0;
  for (std::size_t i = 0; i < n; ++i) c = std::max(c, -sys.A1[i * n + i]);
  std::vector<double> b(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i * m + j] = sys.A1[i * n + j] + (i == j ? c : 0.0);
    b[i * m + n + i] = 1.0;
    b[(n + i) * m + n + i] = c;
  }
  const double h = t / double(substeps);
  double norm = 0.0;  // row-sum norm of hB
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m; ++j) row += h * b[i * m + j];
    norm = std::max(norm, row);
  }
  const double shrink = std::nextafter(std::exp(-c * h), INFINITY);

  std::vector<double> v(m, 0.0), term(m), next(m), sum(m);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::max(r0[i], 0.0);
    v[n + i] = with_disturbance ? sys.w[i] : 0.0;
  }
  for (std::size_t s = 0; s < substeps; ++s) {
    term = v;
    sum = v;
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, x);
    std::size_t k = 0;
    double tail = vmax;  // |(hB)^k v / k!| <= norm^k |v| / k!
    while (true) {
      ++k;
      for (std::size_t i = 0; i < m; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += h * b[i * m + j] * term[j];
        next[i] = acc / double(k);
      }
      term.swap(next);
      for (std::size_t i = 0; i < m; ++i) sum[i] += term[i];
      tail *= norm / double(k);
      if (k > norm + 2.0 && tail <= 1e-17 * vmax) break;
      if (k > 200) throw NumericalError("growth bound series does not converge; use more substeps");
    }
    /* remaining terms: tail * sum_j (norm/(k+1))^j, geometric since k + 1 > norm */
    const double rest = tail * norm / double(k + 1) / (1.0 - norm / double(k + 2));
    for (std::size_t i = 0; i < m; ++i) v[i] = (sum[i] + rest) * shrink * (1.0 + 1e-14);
  }
  Point r(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  check_finite(r);
  return r;
}

ReachResult attain_over(const SampledSystem& sys, const IntervalBox& cell, std::span<const double> u,
                        const ReachOptions& opt) {
  if (opt.k == 0 || !(opt.theta > 0.0) || !(opt.gamma >= 0.0)) throw InputError("reach needs k >= 1, theta > 0, gamma >= 0");
  const auto n = sys.dim;
  const double h = sys.tau / double(opt.k);
  const double split_at = opt.theta * opt.eta_norm;

  struct Piece {
    IntervalBox box;
    Point t;  // distance bound from the center to an attainable point
  };
  std::vector<Piece> pieces{{cell, Point(n, 0.0)}};
  ReachResult res;

  for (std::size_t s = 0; s < opt.k; ++s) {
    if (s > 0 && split_at > 0.0) {
      std::vector<Piece> next;
      while (!pieces.empty()) {
        auto p = std::move(pieces.back());
        pieces.pop_back();
        auto widest = std::max_element(p.box.radius.begin(), p.box.radius.end()) - p.box.radius.begin();
        if (p.box.radius[widest] <= split_at) {
          next.push_back(std::move(p));
          continue;
        }
        if (next.size() + pieces.size() + 2 > opt.max_splits) {
          res.split_abort = true;
          return res;
        }
        const double half = p.box.radius[widest] / 2.0;
        Piece a = p, b = std::move(p);
        a.box.radius[widest] = b.box.radius[widest] = half;
        a.box.center[widest] -= half;
        b.box.center[widest] += half;
        a.t[widest] += half;
        b.t[widest] += half;
        pieces.push_back(std::move(b));
        pieces.push_back(std::move(a));
      }
      /* keep a fixed order independent of the stack walk */
      std::sort(next.begin(), next.end(), [](const Piece& x, const Piece& y) { return x.box.center < y.box.center; });
      pieces = std::move(next);
    }

    for (auto& p : pieces) {
      p.box.center = integrate_nominal(sys, p.box.center, u, h, opt.integrator_steps);
      p.box.radius = growth_bound(sys, p.box.radius, h, opt.integrator_steps);
      p.t = growth_bound(sys, p.t, h, opt.integrator_steps, false);
      for (std::size_t i = 0; i < n; ++i) {
        p.box.radius[i] += opt.gamma;
        p.t[i] += opt.gamma;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (p.box.center[i] - p.box.radius[i] < sys.Kprime.lo[i] - sys.eps ||
            p.box.center[i] + p.box.radius[i] > sys.Kprime.hi[i] + sys.eps)
          res.escaping = true;
    }
    if (res.escaping) return res;
  }

  for (auto& p : pieces) {
    for (std::size_t i = 0; i < n; ++i) res.slack = std::max(res.slack, p.box.radius[i] + p.t[i]);
    res.boxes.push_back(std::move(p.box));
  }
  return res;
}

}  // namespace symctl
