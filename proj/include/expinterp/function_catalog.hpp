#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "expinterp/exppoly.hpp"

namespace expinterp {

// Smooth real-valued test function with exact derivatives:
// derivatives(t, k) returns (f(t), f'(t), ..., f^(k)(t)).
struct FunctionEvaluator {
  std::function<std::vector<double>(double t, int max_order)> derivatives;
  int smoothness = std::numeric_limits<int>::max();
  bool thread_safe = true;

  double value(double t) const { return derivatives(t, 0)[0]; }
};

// Built-in family p(t) * base(sigma * t) with base one of
// exp | sin | cos | sinh | cosh, plus "poly" (p alone) and "runge"
// (1/(1+t^2); sigma and poly ignored). Derivatives are closed-form
// (Leibniz over the base's derivative cycle; partial fractions for runge).
FunctionEvaluator catalog_function(const std::string& kind, double sigma = 1.0,
                                   std::vector<double> poly = {});

// Wraps a (real-operator) kernel element; derivatives evaluate the
// symbolically differentiated blocks and return the real part.
FunctionEvaluator kernel_element_function(const ExponentialPolynomial& ep);

}  // namespace expinterp
