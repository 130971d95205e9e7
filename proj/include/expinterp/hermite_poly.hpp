#pragma once

#include <vector>

#include "expinterp/interp.hpp"

namespace expinterp {

// Classical Hermite cardinal polynomials H_{alpha,beta} (degree n-1, real
// coefficients ascending): H_{alpha,beta}^(j)(a_i) = [i==alpha][j==beta].
struct HermitePolynomialBasis {
  InterpolationSystem sys;
  std::vector<std::vector<double>> polys;  // slot order
  std::vector<double> node_poly;           // prod (x - a_i)^{n_i}

  const std::vector<double>& at(int alpha, int beta) const {
    return polys[static_cast<std::size_t>(sys.slot(alpha, beta))];
  }
};

// Built from truncated reciprocal series of the complementary node factors:
// H_{alpha,beta}(x) = (x-a_alpha)^beta / beta! * Q_alpha(x) *
//   sum_{k<=n_alpha-1-beta} g_k (x-a_alpha)^k, g = 1/Q_alpha about a_alpha.
HermitePolynomialBasis classical_hermite_basis(const InterpolationSystem& sys);

}  // namespace expinterp
