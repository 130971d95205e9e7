#pragma once

#include <vector>

#include "expinterp/exppoly.hpp"
#include "expinterp/operator_spec.hpp"

namespace expinterp {

enum class CharSolConstruction { PartialFractionFormula, IvpOracle };

// The kernel element w with w^(l)(0) = 0 for l < n-1 and w^(n-1)(0) = 1.
struct CharacteristicSolution {
  ExponentialPolynomial ep;
  DifferentialOperatorSpec op;
  CharSolConstruction construction = CharSolConstruction::PartialFractionFormula;
};

// Closed-form construction through cofactor power-series inversion: the block
// coefficient of t^j exp(lambda_i t) is inv_i[m_i-1-j] / j!, where inv_i is
// the series inverse of P_i recentered at lambda_i. Throws
// SeriesInversionFailure when |P_i(lambda_i)| < 1e-14.
CharacteristicSolution characteristic_solution(const DifferentialOperatorSpec& op,
                                               const RootDecomposition& rd);

// Independent oracle: integrates the first-order companion ODE system from
// t = 0 with an adaptive Dormand-Prince 5(4) scheme (abs/rel tolerance 1e-11)
// and returns w at the given points. The grid must be sorted ascending; it may
// straddle zero. Throws StepFailure when the step size underflows.
std::vector<Complex> ivp_solution(const DifferentialOperatorSpec& op,
                                  const std::vector<double>& t_grid);

// |delta_{j,beta} - sum_{i=0}^{n-j-1} c_{i+j+1} w^(beta+i)(0)| for
// 0 <= j, beta <= n-1.
double kronecker_identity_residual(const DifferentialOperatorSpec& op,
                                   const CharacteristicSolution& cs, int j, int beta);

// sum_{j=0}^{n-1} sum_{i=0}^{n-1-j} c_{i+j+1} w_c^(i)(u) * omega^(j)(v);
// equals omega(u+v) for any kernel element omega.
Complex addition_formula_rhs(const DifferentialOperatorSpec& op,
                             const CharacteristicSolution& cs,
                             const ExponentialPolynomial& omega, double u, double v);

}  // namespace expinterp
