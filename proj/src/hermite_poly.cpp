#include "expinterp/hermite_poly.hpp"

#include "expinterp/errors.hpp"
#include "expinterp/poly.hpp"

namespace expinterp {

HermitePolynomialBasis classical_hermite_basis(const InterpolationSystem& sys) {
  HermitePolynomialBasis basis;
  basis.sys = sys;

  std::vector<double> node_poly{1.0};
  for (std::size_t i = 0; i < sys.nodes.size(); ++i)
    for (int m = 0; m < sys.mults[i]; ++m) node_poly = poly_mul_linear(node_poly, sys.nodes[i]);
  basis.node_poly = node_poly;

  basis.polys.resize(static_cast<std::size_t>(sys.dimension));
  for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
    const double a = sys.nodes[static_cast<std::size_t>(alpha)];
    const int na = sys.mults[static_cast<std::size_t>(alpha)];

    // Complementary factor Q_alpha and the reciprocal series of Q_alpha about
    // the node (g_k = coefficient of (x - a)^k in 1/Q_alpha).
    std::vector<double> q{1.0};
    for (int i = 0; i < sys.node_count(); ++i) {
      if (i == alpha) continue;
      for (int m = 0; m < sys.mults[static_cast<std::size_t>(i)]; ++m)
        q = poly_mul_linear(q, sys.nodes[static_cast<std::size_t>(i)]);
    }
    const std::vector<double> recentered = taylor_shift(q, a);
    const std::vector<double> g = series_inverse(recentered, static_cast<std::size_t>(na));

    std::vector<double> power{1.0};  // (x - a)^beta, extended incrementally
    for (int beta = 0; beta < na; ++beta) {
      std::vector<double> series(g.begin(), g.begin() + (na - beta));
      std::vector<double> tail = taylor_shift(series, -a);  // sum g_k (x-a)^k
      std::vector<double> h = poly_mul(poly_mul(power, q), tail);
      for (auto& ck : h) ck /= factorial(beta);
      basis.polys[static_cast<std::size_t>(sys.slot(alpha, beta))] = std::move(h);
      power = poly_mul_linear(power, a);
    }
  }
  return basis;
}

}  // namespace expinterp
