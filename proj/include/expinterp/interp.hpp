#pragma once

#include <map>
#include <utility>
#include <vector>

#include "expinterp/charsol.hpp"
#include "expinterp/exppoly.hpp"
#include "expinterp/operator_spec.hpp"

namespace expinterp {

// Strictly increasing nodes a_0 < ... < a_{l-1} with positive multiplicities;
// dimension n = sum of multiplicities. Hermite data slots are addressed as
// (node index alpha, derivative order beta), beta < mult[alpha], and laid out
// node-major: slot(alpha, beta) = offset[alpha] + beta.
struct InterpolationSystem {
  std::vector<double> nodes;
  std::vector<int> mults;
  std::vector<int> offsets;
  int dimension = 0;
  int order = 0;  // max multiplicity - 1

  int node_count() const { return static_cast<int>(nodes.size()); }
  int slot(int alpha, int beta) const { return offsets[static_cast<std::size_t>(alpha)] + beta; }
};

// Validates and builds the system. Throws EmptySystem, NonPositiveMultiplicity
// or NonIncreasingNodes (equal nodes are rejected too).
InterpolationSystem make_system(std::vector<double> nodes, std::vector<int> mults);

// Determinant of the collocation matrix M[slot(alpha,beta)][k] =
// w_k^(beta)(a_alpha) over the given fundamental system (LU with partial
// pivoting). When `condition` is non-null it receives 1/rcond of the matrix.
Complex wronskian(const InterpolationSystem& sys,
                  const std::vector<ExponentialPolynomial>& fundamental,
                  double* condition = nullptr);

// Cardinal kernel functions: chi_{alpha,beta}^(j)(a_i) = [i==alpha][j==beta].
struct StandardBasis {
  InterpolationSystem sys;
  std::vector<ExponentialPolynomial> chis;  // slot order
  Complex wronskian_value{};
  double condition_estimate = 0.0;
  bool ill_conditioned = false;

  const ExponentialPolynomial& chi(int alpha, int beta) const {
    return chis[static_cast<std::size_t>(sys.slot(alpha, beta))];
  }
};

// Solves the collocation system once (shared LU, one right-hand side per
// slot). Throws SingularSystem when |W| <= 1e-12 * S^n with S the largest
// row norm; sets ill_conditioned when 1/rcond > 1e12.
StandardBasis standard_basis(const DifferentialOperatorSpec& op, const RootDecomposition& rd,
                             const InterpolationSystem& sys);

// Single-node basis at a with full multiplicity n, built directly from the
// characteristic solution: chi_{0,j}(t) = sum_i c_{i+j+1} w_c^(i)(t - a).
// Bypasses the linear solve.
StandardBasis taylor_basis(const DifferentialOperatorSpec& op, const RootDecomposition& rd,
                           double a);

// Kernel interpolant from Hermite data (one complex value per slot).
struct Interpolant {
  StandardBasis basis;
  std::map<std::pair<int, int>, Complex> data;
  ExponentialPolynomial ep;
};

// Throws MissingData when a slot has no value; unknown slots are an error.
Interpolant interpolate(const StandardBasis& basis,
                        const std::map<std::pair<int, int>, Complex>& data);

}  // namespace expinterp
