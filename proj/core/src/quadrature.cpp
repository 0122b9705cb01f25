// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <queue>
#include <sstream>

#include "tlsim/errors.hpp"

namespace tlsim {
namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1] (QUADPACK qk15).
constexpr int kKronrodPoints = 8;  // non-negative abscissae; the rest by symmetry
constexpr double kAbscissa[kKronrodPoints] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kKronrodWeight[kKronrodPoints] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
// Gauss weights for abscissae 1, 3, 5, 7 (odd indices above).
constexpr double kGaussWeight[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
};

template <typename T>
struct WorstFirst {
  bool operator()(const Panel<T>& x, const Panel<T>& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  }
};

template <typename T, typename F>
Panel<T> evaluate_panel(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kronrod{};
  T gauss{};
  for (int i = 0; i < kKronrodPoints; ++i) {
    const double dx = half * kAbscissa[i];
    T fsum;
    if (i == kKronrodPoints - 1) {
      fsum = f(center);
    } else {
      fsum = f(center - dx) + f(center + dx);
    }
    kronrod += kKronrodWeight[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeight[i / 2] * fsum;
  }
  Panel<T> panel;
  panel.a = a;
  panel.b = b;
  panel.value = half * kronrod;
  panel.error = std::abs(half * (kronrod - gauss));
  return panel;
}

template <typename T, typename F>
std::pair<T, std::pair<double, std::uint64_t>> integrate_impl(
    const F& f, double a, double b, const AccuracySpec& acc,
    const std::vector<double>& breakpoints) {
  if (a == b) return {T{}, {0.0, 0}};
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel<T>, std::vector<Panel<T>>, WorstFirst<T>> active;
  std::vector<Panel<T>> frozen;  // panels too narrow to split further
  T total{};
  double total_err = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t panels_used = 0;

  auto add_panel = [&](double lo, double hi) {
    Panel<T> p = evaluate_panel<T>(f, lo, hi);
    evaluations += 15;
    ++panels_used;
    total += p.value;
    total_err += p.error;
    const double min_width = 32.0 * DBL_EPSILON * std::max({std::abs(lo), std::abs(hi), 1e-3});
    if (hi - lo < min_width) {
      frozen.push_back(p);
    } else {
      active.push(p);
    }
  };

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) add_panel(edges[i], edges[i + 1]);

  auto tolerance = [&]() { return std::max(acc.abs_tol, acc.rel_tol * std::abs(total)); };

  while (total_err > tolerance() && !active.empty()) {
    if (panels_used >= acc.max_intervals) {
      std::ostringstream msg;
      msg << "integration budget exhausted: error estimate " << total_err << " > tolerance "
          << tolerance() << " after " << panels_used << " panels";
      throw accuracy_error(msg.str());
    }
    Panel<T> worst = active.top();
    active.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    add_panel(worst.a, mid);
    add_panel(mid, worst.b);
  }

  if (total_err > tolerance()) {
    std::ostringstream msg;
    msg << "integration stalled at machine resolution: error estimate " << total_err
        << " > tolerance " << tolerance();
    throw accuracy_error(msg.str());
  }

  // Deterministic, left-to-right resummation of the surviving panels.
  std::vector<Panel<T>> panels = std::move(frozen);
  while (!active.empty()) {
    panels.push_back(active.top());
    active.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
  T value{};
  double err = 0.0;
  for (const Panel<T>& p : panels) {
    value += p.value;
    err += p.error;
  }
  return {sign * value, {err, evaluations}};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const AccuracySpec& acc, const std::vector<double>& breakpoints) {
  auto [value, stats] = integrate_impl<double>(f, a, b, acc, breakpoints);
  return {value, stats.first, stats.second};
}

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, const AccuracySpec& acc,
                                          const std::vector<double>& breakpoints) {
  auto [value, stats] = integrate_impl<std::complex<double>>(f, a, b, acc, breakpoints);
  return {value, stats.first, stats.second};
}

std::vector<double> geometric_breakpoints(double scale, double a, double b) {
  std::vector<double> points;
  if (!(scale > 0.0) || !(b > a)) return points;
  double step = scale / 4.0;
  const double span = b - a;
  for (int k = 0; k < 200 && step < span; ++k, step *= 2.0) {
    points.push_back(a + step);
  }
  return points;
}

}  // namespace tlsim
