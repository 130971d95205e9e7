#include "expinterp/charsol.hpp"

#include <algorithm>
#include <cmath>

#include "expinterp/errors.hpp"

namespace expinterp {

CharacteristicSolution characteristic_solution(const DifferentialOperatorSpec& op,
                                               const RootDecomposition& rd) {
  std::vector<ExpPolyBlock> blocks;
  blocks.reserve(rd.roots.size());
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const Complex lambda = rd.roots[i].lambda;
    const int m = rd.roots[i].multiplicity;
    const std::vector<Complex> recentered = taylor_shift(rd.cofactors[i], lambda);
    if (std::abs(recentered[0]) < 1e-14)
      throw SeriesInversionFailure("cofactor value at its own root is numerically zero");
    const std::vector<Complex> inv = series_inverse(recentered, static_cast<std::size_t>(m));
    std::vector<Complex> coeffs(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
      coeffs[static_cast<std::size_t>(j)] = inv[static_cast<std::size_t>(m - 1 - j)] / factorial(j);
    blocks.push_back(ExpPolyBlock{lambda, std::move(coeffs)});
  }
  return CharacteristicSolution{make_exppoly(std::move(blocks)), op,
                                CharSolConstruction::PartialFractionFormula};
}

namespace {

using State = std::vector<Complex>;

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kB5[7] = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784,  11.0 / 84,  0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct CompanionOde {
  const std::vector<Complex>& c;
  int n;

  State operator()(const State& y) const {
    State dy(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) dy[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i) + 1];
    Complex top{};
    for (int k = 0; k < n; ++k) top -= c[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(k)];
    dy[static_cast<std::size_t>(n) - 1] = top;
    return dy;
  }
};

// Integrates from (t, y) to t_end, adapting the step; tol is both the absolute
// and relative component of the error weight.
void integrate_to(const CompanionOde& ode, double& t, State& y, double t_end, double tol) {
  const int n = static_cast<int>(y.size());
  if (t == t_end) return;
  const double dir = (t_end > t) ? 1.0 : -1.0;
  double h = dir * std::min(0.1, std::abs(t_end - t));
  long steps = 0;
  while (dir * (t_end - t) > 0.0) {
    if (++steps > 2000000) throw StepFailure("step budget exhausted in initial-value oracle");
    if (dir * (t + h) > dir * t_end) h = t_end - t;
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw StepFailure("step size underflow in initial-value oracle");

    State k[7];
    for (int s = 0; s < 7; ++s) {
      State ys = y;
      for (int q = 0; q < s; ++q) {
        if (kA[s][q] == 0.0) continue;
        for (int i = 0; i < n; ++i)
          ys[static_cast<std::size_t>(i)] += h * kA[s][q] * k[q][static_cast<std::size_t>(i)];
      }
      k[s] = ode(ys);
    }
    State y5 = y;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex acc5{}, acc4{};
      for (int s = 0; s < 7; ++s) {
        acc5 += kB5[s] * k[s][static_cast<std::size_t>(i)];
        acc4 += kB4[s] * k[s][static_cast<std::size_t>(i)];
      }
      y5[static_cast<std::size_t>(i)] += h * acc5;
      const double sc =
          tol + tol * std::max(std::abs(y[static_cast<std::size_t>(i)]),
                               std::abs(y5[static_cast<std::size_t>(i)]));
      const double e = std::abs(h * (acc5 - acc4)) / sc;
      err += e * e;
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      t += h;
      y = std::move(y5);
    }
    const double grow = (err == 0.0) ? 5.0 : 0.9 * std::pow(err, -0.2);
    h *= std::clamp(grow, 0.2, 5.0);
  }
}

}  // namespace

std::vector<Complex> ivp_solution(const DifferentialOperatorSpec& op,
                                  const std::vector<double>& t_grid) {
  const int n = op.order();
  const double tol = 1e-11;
  const CompanionOde ode{op.c, n};

  State y0(static_cast<std::size_t>(n), Complex(0.0));
  y0.back() = 1.0;

  std::vector<Complex> out(t_grid.size());
  // Forward sweep over grid points >= 0, then a backward sweep for t < 0.
  {
    double t = 0.0;
    State y = y0;
    for (std::size_t idx = 0; idx < t_grid.size(); ++idx) {
      if (t_grid[idx] < 0.0) continue;
      integrate_to(ode, t, y, t_grid[idx], tol);
      out[idx] = y[0];
    }
  }
  {
    double t = 0.0;
    State y = y0;
    for (std::size_t idx = t_grid.size(); idx-- > 0;) {
      if (t_grid[idx] >= 0.0) continue;
      integrate_to(ode, t, y, t_grid[idx], tol);
      out[idx] = y[0];
    }
  }
  return out;
}

double kronecker_identity_residual(const DifferentialOperatorSpec& op,
                                   const CharacteristicSolution& cs, int j, int beta) {
  const int n = op.order();
  std::vector<Complex> w_at_zero(static_cast<std::size_t>(2 * n), Complex(0.0));
  ExponentialPolynomial deriv = cs.ep;
  for (int k = 0; k < 2 * n; ++k) {
    w_at_zero[static_cast<std::size_t>(k)] = evaluate(deriv, 0.0);
    deriv = differentiate(deriv);
  }
  Complex acc{};
  for (int i = 0; i <= n - j - 1; ++i)
    acc += op.c[static_cast<std::size_t>(i + j + 1)] * w_at_zero[static_cast<std::size_t>(beta + i)];
  const double target = (j == beta) ? 1.0 : 0.0;
  return std::abs(acc - target);
}

Complex addition_formula_rhs(const DifferentialOperatorSpec& op,
                             const CharacteristicSolution& cs,
                             const ExponentialPolynomial& omega, double u, double v) {
  const int n = op.order();
  std::vector<Complex> wc_u(static_cast<std::size_t>(n));
  std::vector<Complex> om_v(static_cast<std::size_t>(n));
  ExponentialPolynomial dc = cs.ep;
  ExponentialPolynomial dom = omega;
  for (int k = 0; k < n; ++k) {
    wc_u[static_cast<std::size_t>(k)] = evaluate(dc, u);
    om_v[static_cast<std::size_t>(k)] = evaluate(dom, v);
    dc = differentiate(dc);
    dom = differentiate(dom);
  }
  Complex acc{};
  for (int j = 0; j <= n - 1; ++j)
    for (int i = 0; i <= n - 1 - j; ++i)
      acc += op.c[static_cast<std::size_t>(i + j + 1)] * wc_u[static_cast<std::size_t>(i)] *
             om_v[static_cast<std::size_t>(j)];
  return acc;
}

}  // namespace expinterp
