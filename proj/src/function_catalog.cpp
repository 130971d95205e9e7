#include "expinterp/function_catalog.hpp"

#include <cmath>
#include <complex>

#include "expinterp/errors.hpp"
#include "expinterp/poly.hpp"

namespace expinterp {

namespace {

// k-th derivative of base(sigma * t) for the supported base kinds.
double base_derivative(const std::string& kind, double sigma, double t, int k) {
  const double s = std::pow(sigma, k);
  const double x = sigma * t;
  if (kind == "exp") return s * std::exp(x);
  if (kind == "sin") return s * std::sin(x + 0.5 * M_PI * k);
  if (kind == "cos") return s * std::cos(x + 0.5 * M_PI * k);
  if (kind == "sinh") return s * (k % 2 == 0 ? std::sinh(x) : std::cosh(x));
  if (kind == "cosh") return s * (k % 2 == 0 ? std::cosh(x) : std::sinh(x));
  throw EvaluatorFailure("unknown base kind: " + kind);
}

std::vector<double> runge_derivatives(double t, int max_order) {
  // 1/(1+t^2) = (1/2i) [ (t-i)^{-1} - (t+i)^{-1} ]
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> u = 1.0 / (t - i);
  const std::complex<double> v = 1.0 / (t + i);
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  std::complex<double> up = u, vp = v;
  double sign_fact = 1.0;  // (-1)^k k!
  for (int k = 0; k <= max_order; ++k) {
    const std::complex<double> val = sign_fact / (2.0 * i) * (up - vp);
    out[static_cast<std::size_t>(k)] = val.real();
    up *= u;
    vp *= v;
    sign_fact *= -(k + 1.0);
  }
  return out;
}

}  // namespace

FunctionEvaluator catalog_function(const std::string& kind, double sigma,
                                   std::vector<double> poly) {
  FunctionEvaluator fe;
  if (kind == "runge") {
    fe.derivatives = [](double t, int max_order) { return runge_derivatives(t, max_order); };
    return fe;
  }
  if (poly.empty()) poly = {1.0};
  if (kind == "poly") {
    fe.derivatives = [poly](double t, int max_order) {
      std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
      std::vector<double> p = poly;
      for (int k = 0; k <= max_order; ++k) {
        out[static_cast<std::size_t>(k)] = p.empty() ? 0.0 : poly_eval(p, t);
        p = poly_derivative(p);
      }
      return out;
    };
    return fe;
  }
  if (kind != "exp" && kind != "sin" && kind != "cos" && kind != "sinh" && kind != "cosh")
    throw EvaluatorFailure("unknown function kind: " + kind);
  fe.derivatives = [kind, sigma, poly](double t, int max_order) {
    // Leibniz: (p * base)^(k) = sum_j C(k,j) p^(j) base^(k-j).
    std::vector<std::vector<double>> pd{poly};
    while (static_cast<int>(pd.size()) <= max_order) pd.push_back(poly_derivative(pd.back()));
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) {
        const auto& pj = pd[static_cast<std::size_t>(j)];
        if (pj.empty()) continue;
        acc += binomial_coefficient(k, j) * poly_eval(pj, t) *
               base_derivative(kind, sigma, t, k - j);
      }
      out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
  };
  return fe;
}

FunctionEvaluator kernel_element_function(const ExponentialPolynomial& ep) {
  FunctionEvaluator fe;
  fe.derivatives = [ep](double t, int max_order) {
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
    ExponentialPolynomial deriv = ep;
    for (int k = 0; k <= max_order; ++k) {
      out[static_cast<std::size_t>(k)] = evaluate(deriv, t).real();
      deriv = differentiate(deriv);
    }
    return out;
  };
  return fe;
}

}  // namespace expinterp
