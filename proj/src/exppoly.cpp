#include "expinterp/exppoly.hpp"

#include <algorithm>
#include <cmath>

#include "expinterp/errors.hpp"

namespace expinterp {

ExponentialPolynomial make_exppoly(std::vector<ExpPolyBlock> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const ExpPolyBlock& a, const ExpPolyBlock& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  std::vector<ExpPolyBlock> merged;
  for (auto& blk : blocks) {
    if (!merged.empty() && merged.back().lambda == blk.lambda) {
      merged.back().coeffs = poly_add(merged.back().coeffs, blk.coeffs);
    } else {
      merged.push_back(std::move(blk));
    }
  }
  std::vector<ExpPolyBlock> out;
  for (auto& blk : merged) {
    poly_trim(blk.coeffs);
    if (!blk.coeffs.empty()) out.push_back(std::move(blk));
  }
  return ExponentialPolynomial{std::move(out)};
}

Complex evaluate(const ExponentialPolynomial& ep, double t) {
  Complex acc{};
  for (const auto& blk : ep.blocks)
    acc += poly_eval(blk.coeffs, Complex(t)) * std::exp(blk.lambda * t);
  return acc;
}

double evaluate_real(const ExponentialPolynomial& ep, double t) {
  const Complex v = evaluate(ep, t);
  if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v)))
    throw RealificationFailure("imaginary residue exceeds realification tolerance");
  return v.real();
}

ExponentialPolynomial differentiate(const ExponentialPolynomial& ep, int order) {
  ExponentialPolynomial cur = ep;
  for (int k = 0; k < order; ++k) {
    std::vector<ExpPolyBlock> blocks;
    blocks.reserve(cur.blocks.size());
    for (const auto& blk : cur.blocks) {
      std::vector<Complex> d =
          poly_add(poly_derivative(blk.coeffs), poly_scale(blk.coeffs, blk.lambda));
      blocks.push_back(ExpPolyBlock{blk.lambda, std::move(d)});
    }
    cur = make_exppoly(std::move(blocks));
  }
  return cur;
}

ExponentialPolynomial translate(const ExponentialPolynomial& ep, double a) {
  std::vector<ExpPolyBlock> blocks;
  blocks.reserve(ep.blocks.size());
  for (const auto& blk : ep.blocks) {
    std::vector<Complex> shifted = taylor_shift(blk.coeffs, Complex(a));
    const Complex gain = std::exp(blk.lambda * a);
    for (auto& ck : shifted) ck *= gain;
    blocks.push_back(ExpPolyBlock{blk.lambda, std::move(shifted)});
  }
  return make_exppoly(std::move(blocks));
}

ExponentialPolynomial apply_operator(const DifferentialOperatorSpec& op,
                                     const ExponentialPolynomial& ep) {
  ExponentialPolynomial acc = ep_scale(ep, op.c[0]);
  ExponentialPolynomial deriv = ep;
  for (int k = 1; k <= op.order(); ++k) {
    deriv = differentiate(deriv);
    acc = ep_add(acc, ep_scale(deriv, op.c[k]));
  }
  return acc;
}

ExponentialPolynomial ep_add(const ExponentialPolynomial& a, const ExponentialPolynomial& b) {
  std::vector<ExpPolyBlock> blocks = a.blocks;
  blocks.insert(blocks.end(), b.blocks.begin(), b.blocks.end());
  return make_exppoly(std::move(blocks));
}

ExponentialPolynomial ep_scale(const ExponentialPolynomial& a, Complex factor) {
  std::vector<ExpPolyBlock> blocks = a.blocks;
  for (auto& blk : blocks)
    for (auto& ck : blk.coeffs) ck *= factor;
  return make_exppoly(std::move(blocks));
}

double max_coeff_magnitude(const ExponentialPolynomial& ep) {
  double m = 0.0;
  for (const auto& blk : ep.blocks)
    for (const auto& ck : blk.coeffs) m = std::max(m, std::abs(ck));
  return m;
}

std::vector<ExponentialPolynomial> fundamental_system(const RootDecomposition& rd) {
  std::vector<ExponentialPolynomial> basis;
  basis.reserve(static_cast<std::size_t>(rd.total_order()));
  for (const auto& root : rd.roots) {
    for (int j = 0; j < root.multiplicity; ++j) {
      std::vector<Complex> coeffs(static_cast<std::size_t>(j) + 1, Complex(0.0));
      coeffs[static_cast<std::size_t>(j)] = 1.0;
      basis.push_back(ExponentialPolynomial{{ExpPolyBlock{root.lambda, std::move(coeffs)}}});
    }
  }
  return basis;
}

ExponentialPolynomial ep_constant(Complex value) {
  return make_exppoly({ExpPolyBlock{Complex(0.0), {value}}});
}

ExponentialPolynomial ep_monomial(int degree, Complex coeff) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1, Complex(0.0));
  coeffs.back() = coeff;
  return make_exppoly({ExpPolyBlock{Complex(0.0), std::move(coeffs)}});
}

ExponentialPolynomial ep_exponential(Complex lambda, double shift, Complex scale) {
  return make_exppoly({ExpPolyBlock{lambda, {scale * std::exp(-lambda * shift)}}});
}

ExponentialPolynomial ep_sinh(double shift) {
  return ep_add(ep_exponential(1.0, shift, 0.5), ep_exponential(-1.0, shift, -0.5));
}

ExponentialPolynomial ep_cosh(double shift) {
  return ep_add(ep_exponential(1.0, shift, 0.5), ep_exponential(-1.0, shift, 0.5));
}

ExponentialPolynomial ep_sin(double shift) {
  const Complex i(0.0, 1.0);
  return ep_add(ep_exponential(i, shift, Complex(0.0, -0.5)),
                ep_exponential(-i, shift, Complex(0.0, 0.5)));
}

ExponentialPolynomial ep_cos(double shift) {
  const Complex i(0.0, 1.0);
  return ep_add(ep_exponential(i, shift, 0.5), ep_exponential(-i, shift, 0.5));
}

}  // namespace expinterp
