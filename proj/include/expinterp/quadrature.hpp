#pragma once

#include <complex>
#include <functional>

namespace expinterp {

struct QuadratureResult {
  std::complex<double> value{};
  double error_estimate = 0.0;
  bool converged = true;
};

// Adaptive bisection on 15-point Gauss-Legendre panels. A panel is accepted
// when |GL15(panel) - GL15(halves)| <= tol_local * (1 + |halves|), with the
// tolerance budget halved per split; the refined (halves) value is kept. When
// the depth limit or the global refinement budget (8192 panels) is reached,
// the best value is returned with converged=false. a > b integrates with
// reversed sign; a == b returns exactly zero.
QuadratureResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, double tol, int max_depth = 40);

}  // namespace expinterp
