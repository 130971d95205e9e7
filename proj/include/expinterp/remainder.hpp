#pragma once

#include <string>
#include <vector>

#include "expinterp/charsol.hpp"
#include "expinterp/function_catalog.hpp"
#include "expinterp/hermite_poly.hpp"
#include "expinterp/interp.hpp"
#include "expinterp/quadrature.hpp"

namespace expinterp {

struct IntegralTerm {
  Complex value{};
  double error_estimate = 0.0;
  bool converged = true;
};

struct RemainderReport {
  double x = 0.0;
  Complex interpolant_value{};               // data part only
  std::vector<IntegralTerm> per_node_integrals;  // slot order
  Complex reconstructed{};                   // data + remainder integrals
  Complex true_value{};
  double residual = 0.0;
  double quadrature_error_estimate = 0.0;
  bool quadrature_converged = true;
};

// integral_{a_alpha}^{x} (L f)(t) * w_c^(beta)(a_alpha - t) dt with the
// orientation of the bounds (zero when x == a_alpha).
IntegralTerm remainder_integral(const DifferentialOperatorSpec& op,
                                const CharacteristicSolution& cs,
                                const InterpolationSystem& sys, const FunctionEvaluator& f,
                                int alpha, int beta, double x, double tol);

// Exact reproduction identity: f(x) = sum_slots (f^(beta)(a_alpha) +
// remainder integral) * chi_{alpha,beta}(x). `threads` > 1 distributes the
// per-slot integrals (only when f.thread_safe); results are assembled in slot
// order so the output is identical for any thread count.
RemainderReport reconstruct(const DifferentialOperatorSpec& op, const CharacteristicSolution& cs,
                            const StandardBasis& basis, const FunctionEvaluator& f, double x,
                            double tol, int threads = 0);

// Condensed single-node form: f(x) = sum_beta f^(beta)(a) *
// (sum_i c_{i+beta+1} w_c^(i)(x-a)) + integral_a^x (L f)(t) w_c(x-t) dt.
RemainderReport taylor_reconstruct(const DifferentialOperatorSpec& op,
                                   const CharacteristicSolution& cs, double a,
                                   const FunctionEvaluator& f, double x, double tol);

// Peano kernel of the pure n-th derivative operator for a node system.
struct GreenKernel {
  InterpolationSystem sys;
  HermitePolynomialBasis basis;

  // Index r of the half-open piece containing t: r = #{nodes < t}.
  int piece_index(double t) const;
};

GreenKernel make_green_kernel(const InterpolationSystem& sys);

// G(x, t), piecewise: for t <= x the sum over nodes left of t of
// (a_i - t)^{n-j-1}/(n-j-1)! * H_{i,j}(x); for t > x minus the complementary
// sum. Vanishes outside the hull of {nodes, x}.
double greens_kernel_value(const GreenKernel& gk, double x, double t);

// f(x) = sum_slots f^(beta)(a_alpha) H_{alpha,beta}(x) +
// integral f^(n)(t) G(x,t) dt, integrated piecewise between breakpoints.
RemainderReport green_reconstruct(const GreenKernel& gk, const FunctionEvaluator& f, double x,
                                  double tol);

// Hard-coded right-hand sides of the specialized reproduction identities;
// each uses only elementary functions + quadrature (no kernel solve).
enum class CorollaryCase {
  ClassicalHermite,    // polynomial cardinal functions, any node system
  Lagrange,            // simple nodes, Lagrange products
  GeneralizedTaylor,   // one node, arbitrary operator
  ClassicalTaylor,     // one node, pure n-th derivative
  Hyperbolic2,         // sinh ratios, integrand f'' - f
  Trigonometric2,      // sin ratios, integrand f'' + f
  Biharmonic4,         // determinant ratios, integrand f'''' - f
  OddHyperbolic3,      // cosh ratios, integrand f''' - f'
  OddTrigonometric3,   // cos ratios, integrand f''' + f'
};

const char* corollary_case_name(CorollaryCase c);

struct CorollaryParams {
  std::vector<double> nodes;          // node(s) of the identity
  std::vector<int> mults;             // ClassicalHermite only
  std::vector<Complex> op_coeffs;     // GeneralizedTaylor only
  int taylor_order = 0;               // ClassicalTaylor only
};

RemainderReport corollary_suite(CorollaryCase case_id, const CorollaryParams& params,
                                const FunctionEvaluator& f, double x, double tol);

}  // namespace expinterp
