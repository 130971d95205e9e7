#include "expinterp/quadrature.hpp"

#include <array>
#include <cmath>

namespace expinterp {

namespace {

using Complex = std::complex<double>;

struct Gauss15 {
  std::array<double, 15> x{};
  std::array<double, 15> w{};
};

// Nodes/weights computed once by Newton iteration on the Legendre recurrence.
Gauss15 build_rule() {
  constexpr int n = 15;
  Gauss15 rule;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    rule.x[static_cast<std::size_t>(i)] = -z;
    rule.x[static_cast<std::size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const Gauss15& rule15() {
  static const Gauss15 rule = build_rule();
  return rule;
}

Complex gl15(const std::function<Complex(double)>& f, double a, double b) {
  const Gauss15& rule = rule15();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex acc{};
  for (int i = 0; i < 15; ++i)
    acc += rule.w[static_cast<std::size_t>(i)] * f(mid + half * rule.x[static_cast<std::size_t>(i)]);
  return acc * half;
}

// Caps the total number of panel refinements per integral so that an
// unreachable tolerance fails fast instead of exploring the full 2^max_depth
// bisection tree.
constexpr int kPanelBudget = 8192;

void integrate_panel(const std::function<Complex(double)>& f, double a, double b, double tol,
                     int depth, int max_depth, int& budget, QuadratureResult& out) {
  --budget;
  const double mid = 0.5 * (a + b);
  const Complex whole = gl15(f, a, b);
  const Complex halves = gl15(f, a, mid) + gl15(f, mid, b);
  const double err = std::abs(whole - halves);
  const bool within_tol = err <= tol * (1.0 + std::abs(halves));
  if (within_tol || depth >= max_depth || budget <= 0) {
    out.value += halves;
    out.error_estimate += err;
    if (!within_tol) out.converged = false;
    return;
  }
  integrate_panel(f, a, mid, 0.5 * tol, depth + 1, max_depth, budget, out);
  integrate_panel(f, mid, b, 0.5 * tol, depth + 1, max_depth, budget, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                                    double tol, int max_depth) {
  if (a == b) return QuadratureResult{Complex(0.0), 0.0, true};
  const double sign = (b >= a) ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  QuadratureResult out;
  int budget = kPanelBudget;
  integrate_panel(f, lo, hi, tol, 0, max_depth, budget, out);
  out.value *= sign;
  return out;
}

}  // namespace expinterp
