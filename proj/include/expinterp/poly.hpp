#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace expinterp {

using Complex = std::complex<double>;

// Dense univariate polynomials as coefficient vectors in ascending degree
// order; the empty vector is the zero polynomial.

template <class S>
void poly_trim(std::vector<S>& p) {
  while (!p.empty() && p.back() == S{}) p.pop_back();
}

template <class S>
std::vector<S> poly_add(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> r(std::max(a.size(), b.size()), S{});
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

template <class S, class F>
std::vector<S> poly_scale(std::vector<S> p, F factor) {
  for (auto& c : p) c *= factor;
  return p;
}

template <class S>
std::vector<S> poly_mul(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<S> r(a.size() + b.size() - 1, S{});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Multiply by the linear factor (x - root).
template <class S>
std::vector<S> poly_mul_linear(const std::vector<S>& p, S root) {
  if (p.empty()) return {};
  std::vector<S> r(p.size() + 1, S{});
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= root * p[i];
  }
  return r;
}

template <class S, class X>
auto poly_eval(const std::vector<S>& p, X x) {
  using R = decltype(S{} * x + S{});
  R acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <class S>
std::vector<S> poly_derivative(const std::vector<S>& p) {
  if (p.size() <= 1) return {};
  std::vector<S> r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * double(i);
  return r;
}

// Coefficients of q(t) = p(t + a) (Taylor recentering by repeated Horner).
template <class S, class A>
std::vector<S> taylor_shift(std::vector<S> p, A a) {
  if (p.size() <= 1) return p;
  const std::size_t d = p.size() - 1;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = d - 1; j + 1 > k; --j) p[j] += a * p[j + 1];
  return p;
}

// First `count` coefficients of the power series 1/p; requires p[0] != 0.
template <class S>
std::vector<S> series_inverse(const std::vector<S>& p, std::size_t count) {
  std::vector<S> q(count, S{});
  if (count == 0) return q;
  q[0] = S(1.0) / p[0];
  for (std::size_t m = 1; m < count; ++m) {
    S acc{};
    for (std::size_t j = 1; j <= m && j < p.size(); ++j) acc += p[j] * q[m - j];
    q[m] = -acc / p[0];
  }
  return q;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

}  // namespace expinterp
