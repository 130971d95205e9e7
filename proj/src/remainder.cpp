#include "expinterp/remainder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "expinterp/errors.hpp"
#include "expinterp/poly.hpp"

namespace expinterp {

namespace {

void require_smoothness(const FunctionEvaluator& f, int order) {
  if (f.smoothness < order)
    throw EvaluatorFailure("function does not provide derivatives up to the operator order");
}

// (L f)(t) = sum_k c_k f^(k)(t).
Complex apply_to_function(const DifferentialOperatorSpec& op, const FunctionEvaluator& f,
                          double t) {
  const std::vector<double> d = f.derivatives(t, op.order());
  Complex acc{};
  for (int k = 0; k <= op.order(); ++k)
    acc += op.c[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(k)];
  return acc;
}

IntegralTerm to_term(const QuadratureResult& q) {
  return IntegralTerm{q.value, q.error_estimate, q.converged};
}

std::vector<std::pair<int, int>> slot_pairs(const InterpolationSystem& sys) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(sys.dimension));
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      pairs.emplace_back(alpha, beta);
  return pairs;
}

}  // namespace

IntegralTerm remainder_integral(const DifferentialOperatorSpec& op,
                                const CharacteristicSolution& cs,
                                const InterpolationSystem& sys, const FunctionEvaluator& f,
                                int alpha, int beta, double x, double tol) {
  require_smoothness(f, op.order());
  const double a = sys.nodes[static_cast<std::size_t>(alpha)];
  const ExponentialPolynomial w_beta = differentiate(cs.ep, beta);
  const auto integrand = [&](double t) {
    return apply_to_function(op, f, t) * evaluate(w_beta, a - t);
  };
  return to_term(integrate_adaptive(integrand, a, x, tol));
}

RemainderReport reconstruct(const DifferentialOperatorSpec& op, const CharacteristicSolution& cs,
                            const StandardBasis& basis, const FunctionEvaluator& f, double x,
                            double tol, int threads) {
  require_smoothness(f, op.order());
  const InterpolationSystem& sys = basis.sys;
  const auto pairs = slot_pairs(sys);
  const int nslots = static_cast<int>(pairs.size());

  // Hermite data, sampled once per node.
  std::vector<double> data(static_cast<std::size_t>(nslots));
  for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
    const std::vector<double> d = f.derivatives(sys.nodes[static_cast<std::size_t>(alpha)],
                                                sys.mults[static_cast<std::size_t>(alpha)] - 1);
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      data[static_cast<std::size_t>(sys.slot(alpha, beta))] = d[static_cast<std::size_t>(beta)];
  }

  std::vector<ExponentialPolynomial> w_derivs(static_cast<std::size_t>(sys.order) + 1);
  w_derivs[0] = cs.ep;
  for (int k = 1; k <= sys.order; ++k) w_derivs[static_cast<std::size_t>(k)] = differentiate(w_derivs[static_cast<std::size_t>(k) - 1]);

  std::vector<IntegralTerm> terms(static_cast<std::size_t>(nslots));
  const auto run_slot = [&](int slot) {
    const auto [alpha, beta] = pairs[static_cast<std::size_t>(slot)];
    const double a = sys.nodes[static_cast<std::size_t>(alpha)];
    const ExponentialPolynomial& w_beta = w_derivs[static_cast<std::size_t>(beta)];
    const auto integrand = [&](double t) {
      return apply_to_function(op, f, t) * evaluate(w_beta, a - t);
    };
    terms[static_cast<std::size_t>(slot)] = to_term(integrate_adaptive(integrand, a, x, tol));
  };

  if (threads > 1 && f.thread_safe && nslots > 1) {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, nslots);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < nslots; s = next.fetch_add(1)) run_slot(s);
      });
    for (auto& th : pool) th.join();
  } else {
    for (int s = 0; s < nslots; ++s) run_slot(s);
  }

  RemainderReport rep;
  rep.x = x;
  rep.per_node_integrals = terms;
  rep.true_value = f.value(x);
  for (int s = 0; s < nslots; ++s) {
    const auto [alpha, beta] = pairs[static_cast<std::size_t>(s)];
    const Complex chi_x = evaluate(basis.chi(alpha, beta), x);
    rep.interpolant_value += data[static_cast<std::size_t>(s)] * chi_x;
    rep.reconstructed += (data[static_cast<std::size_t>(s)] + terms[static_cast<std::size_t>(s)].value) * chi_x;
    rep.quadrature_error_estimate += terms[static_cast<std::size_t>(s)].error_estimate * std::abs(chi_x);
    rep.quadrature_converged = rep.quadrature_converged && terms[static_cast<std::size_t>(s)].converged;
  }
  rep.residual = std::abs(rep.reconstructed - rep.true_value);
  return rep;
}

RemainderReport taylor_reconstruct(const DifferentialOperatorSpec& op,
                                   const CharacteristicSolution& cs, double a,
                                   const FunctionEvaluator& f, double x, double tol) {
  require_smoothness(f, op.order());
  const int n = op.order();

  std::vector<Complex> w_at(static_cast<std::size_t>(n));  // w_c^(i)(x - a)
  ExponentialPolynomial deriv = cs.ep;
  for (int i = 0; i < n; ++i) {
    w_at[static_cast<std::size_t>(i)] = evaluate(deriv, x - a);
    if (i + 1 < n) deriv = differentiate(deriv);
  }
  const std::vector<double> data = f.derivatives(a, n - 1);

  Complex data_part{};
  for (int beta = 0; beta < n; ++beta) {
    Complex weight{};
    for (int i = 0; i <= n - 1 - beta; ++i)
      weight += op.c[static_cast<std::size_t>(i + beta + 1)] * w_at[static_cast<std::size_t>(i)];
    data_part += data[static_cast<std::size_t>(beta)] * weight;
  }

  const auto integrand = [&](double t) {
    return apply_to_function(op, f, t) * evaluate(cs.ep, x - t);
  };
  const IntegralTerm term = to_term(integrate_adaptive(integrand, a, x, tol));

  RemainderReport rep;
  rep.x = x;
  rep.interpolant_value = data_part;
  rep.per_node_integrals = {term};
  rep.reconstructed = data_part + term.value;
  rep.true_value = f.value(x);
  rep.residual = std::abs(rep.reconstructed - rep.true_value);
  rep.quadrature_error_estimate = term.error_estimate;
  rep.quadrature_converged = term.converged;
  return rep;
}

int GreenKernel::piece_index(double t) const {
  return static_cast<int>(std::lower_bound(sys.nodes.begin(), sys.nodes.end(), t) -
                          sys.nodes.begin());
}

GreenKernel make_green_kernel(const InterpolationSystem& sys) {
  return GreenKernel{sys, classical_hermite_basis(sys)};
}

double greens_kernel_value(const GreenKernel& gk, double x, double t) {
  const InterpolationSystem& sys = gk.sys;
  const int n = sys.dimension;
  const int r = gk.piece_index(t);
  const auto node_term = [&](int alpha) {
    const double a = sys.nodes[static_cast<std::size_t>(alpha)];
    double acc = 0.0;
    for (int j = 0; j < sys.mults[static_cast<std::size_t>(alpha)]; ++j)
      acc += std::pow(a - t, n - 1 - j) / factorial(n - 1 - j) *
             poly_eval(gk.basis.at(alpha, j), x);
    return acc;
  };
  double total = 0.0;
  if (t <= x) {
    for (int alpha = 0; alpha < r; ++alpha) total += node_term(alpha);
  } else {
    for (int alpha = r; alpha < sys.node_count(); ++alpha) total -= node_term(alpha);
  }
  return total;
}

RemainderReport green_reconstruct(const GreenKernel& gk, const FunctionEvaluator& f, double x,
                                  double tol) {
  const InterpolationSystem& sys = gk.sys;
  const int n = sys.dimension;
  require_smoothness(f, n);

  Complex data_part{};
  for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
    const std::vector<double> d = f.derivatives(sys.nodes[static_cast<std::size_t>(alpha)],
                                                sys.mults[static_cast<std::size_t>(alpha)] - 1);
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      data_part += d[static_cast<std::size_t>(beta)] * poly_eval(gk.basis.at(alpha, beta), x);
  }

  // The kernel vanishes outside the hull of {nodes, x}; integrate piecewise
  // between its breakpoints so every panel sees a smooth integrand.
  std::vector<double> breaks = sys.nodes;
  breaks.push_back(x);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  IntegralTerm total;
  const auto integrand = [&](double t) {
    return Complex(f.derivatives(t, n)[static_cast<std::size_t>(n)] *
                   greens_kernel_value(gk, x, t));
  };
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const QuadratureResult q = integrate_adaptive(integrand, breaks[p], breaks[p + 1], tol);
    total.value += q.value;
    total.error_estimate += q.error_estimate;
    total.converged = total.converged && q.converged;
  }

  RemainderReport rep;
  rep.x = x;
  rep.interpolant_value = data_part;
  rep.per_node_integrals = {total};
  rep.reconstructed = data_part + total.value;
  rep.true_value = f.value(x);
  rep.residual = std::abs(rep.reconstructed - rep.true_value);
  rep.quadrature_error_estimate = total.error_estimate;
  rep.quadrature_converged = total.converged;
  return rep;
}

const char* corollary_case_name(CorollaryCase c) {
  switch (c) {
    case CorollaryCase::ClassicalHermite: return "classical_hermite";
    case CorollaryCase::Lagrange: return "lagrange";
    case CorollaryCase::GeneralizedTaylor: return "generalized_taylor";
    case CorollaryCase::ClassicalTaylor: return "classical_taylor";
    case CorollaryCase::Hyperbolic2: return "hyperbolic2";
    case CorollaryCase::Trigonometric2: return "trigonometric2";
    case CorollaryCase::Biharmonic4: return "biharmonic4";
    case CorollaryCase::OddHyperbolic3: return "odd_hyperbolic3";
    case CorollaryCase::OddTrigonometric3: return "odd_trigonometric3";
  }
  return "?";
}

namespace {

// Shared assembly for the multi-slot literal identities: reconstructed =
// sum_slots (f^(beta)(a_alpha) + integral_{a_alpha}^x integrand * weight) *
// multiplier(x).
struct LiteralSlot {
  double node = 0.0;
  int beta = 0;
  double multiplier_at_x = 0.0;
  std::function<double(double)> weight;  // of t, already centered at the node
};

RemainderReport assemble_literal(const std::vector<LiteralSlot>& slots,
                                 const std::function<double(double)>& integrand,
                                 const FunctionEvaluator& f, double x, double tol) {
  RemainderReport rep;
  rep.x = x;
  rep.true_value = f.value(x);
  for (const auto& slot : slots) {
    const double data = f.derivatives(slot.node, slot.beta)[static_cast<std::size_t>(slot.beta)];
    const auto fn = [&](double t) { return Complex(integrand(t) * slot.weight(t)); };
    const QuadratureResult q = integrate_adaptive(fn, slot.node, x, tol);
    rep.per_node_integrals.push_back(to_term(q));
    rep.interpolant_value += data * slot.multiplier_at_x;
    rep.reconstructed += (data + q.value) * slot.multiplier_at_x;
    rep.quadrature_error_estimate += q.error_estimate * std::abs(slot.multiplier_at_x);
    rep.quadrature_converged = rep.quadrature_converged && q.converged;
  }
  rep.residual = std::abs(rep.reconstructed - rep.true_value);
  return rep;
}

std::vector<double> fn_derivs(const FunctionEvaluator& f, double t, int k) {
  return f.derivatives(t, k);
}

}  // namespace

RemainderReport corollary_suite(CorollaryCase case_id, const CorollaryParams& params,
                                const FunctionEvaluator& f, double x, double tol) {
  switch (case_id) {
    case CorollaryCase::ClassicalHermite: {
      const InterpolationSystem sys = make_system(params.nodes, params.mults);
      const int n = sys.dimension;
      require_smoothness(f, n);
      const HermitePolynomialBasis hb = classical_hermite_basis(sys);
      std::vector<LiteralSlot> slots;
      for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
        const double a = sys.nodes[static_cast<std::size_t>(alpha)];
        for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta) {
          slots.push_back(LiteralSlot{
              a, beta, poly_eval(hb.at(alpha, beta), x),
              [a, beta, n](double t) {
                return std::pow(a - t, n - 1 - beta) / factorial(n - 1 - beta);
              }});
        }
      }
      const auto integrand = [&](double t) {
        return fn_derivs(f, t, n)[static_cast<std::size_t>(n)];
      };
      return assemble_literal(slots, integrand, f, x, tol);
    }
    case CorollaryCase::Lagrange: {
      const std::vector<double>& a = params.nodes;
      const InterpolationSystem sys =
          make_system(a, std::vector<int>(a.size(), 1));  // validates distinctness
      const int n = sys.dimension;
      require_smoothness(f, n);
      std::vector<LiteralSlot> slots;
      for (int alpha = 0; alpha < n; ++alpha) {
        double mult = 1.0;
        for (int j = 0; j < n; ++j) {
          if (j == alpha) continue;
          mult *= (x - a[static_cast<std::size_t>(j)]) /
                  (a[static_cast<std::size_t>(alpha)] - a[static_cast<std::size_t>(j)]);
        }
        const double node = a[static_cast<std::size_t>(alpha)];
        slots.push_back(LiteralSlot{node, 0, mult, [node, n](double t) {
                                      return std::pow(node - t, n - 1) / factorial(n - 1);
                                    }});
      }
      const auto integrand = [&](double t) {
        return fn_derivs(f, t, n)[static_cast<std::size_t>(n)];
      };
      return assemble_literal(slots, integrand, f, x, tol);
    }
    case CorollaryCase::GeneralizedTaylor: {
      const DifferentialOperatorSpec op = make_operator(params.op_coeffs);
      const RootDecomposition rd = find_roots(op);
      const CharacteristicSolution cs = characteristic_solution(op, rd);
      return taylor_reconstruct(op, cs, params.nodes.at(0), f, x, tol);
    }
    case CorollaryCase::ClassicalTaylor: {
      const int n = params.taylor_order;
      if (n < 1) throw DegenerateParameters("taylor_order must be >= 1");
      require_smoothness(f, n);
      const double a = params.nodes.at(0);
      const std::vector<double> d = f.derivatives(a, n - 1);
      RemainderReport rep;
      rep.x = x;
      rep.true_value = f.value(x);
      Complex data_part{};
      for (int beta = 0; beta < n; ++beta)
        data_part += d[static_cast<std::size_t>(beta)] * std::pow(x - a, beta) / factorial(beta);
      const auto fn = [&](double t) {
        return Complex(fn_derivs(f, t, n)[static_cast<std::size_t>(n)] *
                       std::pow(x - t, n - 1) / factorial(n - 1));
      };
      const QuadratureResult q = integrate_adaptive(fn, a, x, tol);
      rep.interpolant_value = data_part;
      rep.per_node_integrals = {to_term(q)};
      rep.reconstructed = data_part + q.value;
      rep.residual = std::abs(rep.reconstructed - rep.true_value);
      rep.quadrature_error_estimate = q.error_estimate;
      rep.quadrature_converged = q.converged;
      return rep;
    }
    case CorollaryCase::Hyperbolic2:
    case CorollaryCase::Trigonometric2: {
      const bool hyper = case_id == CorollaryCase::Hyperbolic2;
      require_smoothness(f, 2);
      const double a0 = params.nodes.at(0), a1 = params.nodes.at(1);
      const double den = hyper ? std::sinh(a0 - a1) : std::sin(a0 - a1);
      if (std::abs(den) <= 1e-9)
        throw DegenerateParameters(hyper ? "sinh(a0 - a1) vanishes" : "sin(a0 - a1) vanishes");
      const auto s = [hyper](double v) { return hyper ? std::sinh(v) : std::sin(v); };
      std::vector<LiteralSlot> slots{
          {a0, 0, s(x - a1) / den, [a0, s](double t) { return s(a0 - t); }},
          {a1, 0, s(x - a0) / -den, [a1, s](double t) { return s(a1 - t); }},
      };
      const auto integrand = [&, hyper](double t) {
        const std::vector<double> d = fn_derivs(f, t, 2);
        return hyper ? d[2] - d[0] : d[2] + d[0];
      };
      return assemble_literal(slots, integrand, f, x, tol);
    }
    case CorollaryCase::Biharmonic4: {
      require_smoothness(f, 4);
      const double a0 = params.nodes.at(0), a1 = params.nodes.at(1);
      const double d = a0 - a1;
      const double k = 2.0 - 2.0 * std::cosh(d) * std::cos(d);
      if (std::abs(k) <= 1e-9 * (1.0 + std::cosh(d)))
        throw DegenerateParameters("2 - 2 cosh(a0-a1) cos(a0-a1) vanishes");
      const double chd = std::cosh(d) - std::cos(d);
      const double shp = std::sinh(d) + std::sin(d);
      const double shm = std::sinh(d) - std::sin(d);
      const auto cmc = [](double v) { return std::cosh(v) - std::cos(v); };
      const auto sms = [](double v) { return std::sinh(v) - std::sin(v); };
      const double m00 = (chd * cmc(x - a1) - shp * sms(x - a1)) / k;
      const double m01 = (chd * sms(x - a1) - shm * cmc(x - a1)) / k;
      const double m10 = (chd * cmc(x - a0) + shp * sms(x - a0)) / k;
      const double m11 = (chd * sms(x - a0) + shm * cmc(x - a0)) / k;
      std::vector<LiteralSlot> slots{
          {a0, 0, m00, [a0, sms](double t) { return 0.5 * sms(a0 - t); }},
          {a0, 1, m01, [a0, cmc](double t) { return 0.5 * cmc(a0 - t); }},
          {a1, 0, m10, [a1, sms](double t) { return 0.5 * sms(a1 - t); }},
          {a1, 1, m11, [a1, cmc](double t) { return 0.5 * cmc(a1 - t); }},
      };
      const auto integrand = [&](double t) {
        const std::vector<double> dv = fn_derivs(f, t, 4);
        return dv[4] - dv[0];
      };
      return assemble_literal(slots, integrand, f, x, tol);
    }
    case CorollaryCase::OddHyperbolic3:
    case CorollaryCase::OddTrigonometric3: {
      const bool hyper = case_id == CorollaryCase::OddHyperbolic3;
      require_smoothness(f, 3);
      const std::vector<double>& a = params.nodes;
      if (a.size() != 3) throw DegenerateParameters("three nodes required");
      const auto c = [hyper](double v) { return hyper ? std::cosh(v) : std::cos(v); };
      std::vector<LiteralSlot> slots;
      for (int alpha = 0; alpha < 3; ++alpha) {
        const double p = a[static_cast<std::size_t>((alpha + 1) % 3)];
        const double q = a[static_cast<std::size_t>((alpha + 2) % 3)];
        const double mid = 0.5 * (p + q), half = 0.5 * (p - q);
        const double den = c(a[static_cast<std::size_t>(alpha)] - mid) - c(half);
        if (std::abs(den) <= 1e-9)
          throw DegenerateParameters("closed-form denominator vanishes for this node triple");
        const double node = a[static_cast<std::size_t>(alpha)];
        slots.push_back(LiteralSlot{node, 0, (c(x - mid) - c(half)) / den,
                                    [node, hyper](double t) {
                                      return hyper ? std::cosh(node - t) - 1.0
                                                   : 1.0 - std::cos(node - t);
                                    }});
      }
      const auto integrand = [&, hyper](double t) {
        const std::vector<double> dv = fn_derivs(f, t, 3);
        return hyper ? dv[3] - dv[1] : dv[3] + dv[1];
      };
      return assemble_literal(slots, integrand, f, x, tol);
    }
  }
  throw Error("unhandled corollary case");
}

}  // namespace expinterp
