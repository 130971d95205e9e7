#pragma once

#include <vector>

#include "expinterp/operator_spec.hpp"
#include "expinterp/poly.hpp"

namespace expinterp {

// One exponential-monomial block p(t) * exp(lambda * t) with a polynomial
// coefficient p stored in ascending degree order.
struct ExpPolyBlock {
  Complex lambda;
  std::vector<Complex> coeffs;

  bool operator==(const ExpPolyBlock&) const = default;
};

// Finite sum of blocks in canonical form: blocks sorted by (Re lambda,
// Im lambda), equal-lambda blocks merged, trailing exactly-zero coefficients
// trimmed, empty blocks dropped. The empty sum is the zero function.
struct ExponentialPolynomial {
  std::vector<ExpPolyBlock> blocks;

  bool is_zero() const { return blocks.empty(); }
};

ExponentialPolynomial make_exppoly(std::vector<ExpPolyBlock> blocks);

Complex evaluate(const ExponentialPolynomial& ep, double t);

// Evaluates and checks that the imaginary part is below
// 1e-9 * (1 + |value|); throws RealificationFailure otherwise. Intended for
// use when the owning operator has is_real set.
double evaluate_real(const ExponentialPolynomial& ep, double t);

ExponentialPolynomial differentiate(const ExponentialPolynomial& ep, int order = 1);

// g(t) = ep(t + a); block-wise Taylor shift scaled by exp(lambda * a).
ExponentialPolynomial translate(const ExponentialPolynomial& ep, double a);

// Applies the operator symbolically: sum_k c_k * ep^(k).
ExponentialPolynomial apply_operator(const DifferentialOperatorSpec& op,
                                     const ExponentialPolynomial& ep);

ExponentialPolynomial ep_add(const ExponentialPolynomial& a, const ExponentialPolynomial& b);
ExponentialPolynomial ep_scale(const ExponentialPolynomial& a, Complex factor);

// Largest coefficient magnitude over all blocks (0 for the zero function).
double max_coeff_magnitude(const ExponentialPolynomial& ep);

// Kernel basis t^j exp(lambda_i t), i in decomposition order, j ascending.
std::vector<ExponentialPolynomial> fundamental_system(const RootDecomposition& rd);

// Convenience builders.
ExponentialPolynomial ep_constant(Complex value);
ExponentialPolynomial ep_monomial(int degree, Complex coeff = 1.0);
// scale * exp(lambda * (t - shift))
ExponentialPolynomial ep_exponential(Complex lambda, double shift = 0.0, Complex scale = 1.0);
ExponentialPolynomial ep_sinh(double shift = 0.0);  // sinh(t - shift)
ExponentialPolynomial ep_cosh(double shift = 0.0);  // cosh(t - shift)
ExponentialPolynomial ep_sin(double shift = 0.0);   // sin(t - shift)
ExponentialPolynomial ep_cos(double shift = 0.0);   // cos(t - shift)

}  // namespace expinterp
