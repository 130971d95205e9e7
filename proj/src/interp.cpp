#include "expinterp/interp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

#include "expinterp/errors.hpp"

namespace expinterp {

InterpolationSystem make_system(std::vector<double> nodes, std::vector<int> mults) {
  if (nodes.empty()) throw EmptySystem("at least one node is required");
  if (nodes.size() != mults.size())
    throw Error("nodes and multiplicities must have equal length");
  for (int m : mults)
    if (m <= 0) throw NonPositiveMultiplicity("every multiplicity must be >= 1");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw NonIncreasingNodes("nodes must be strictly increasing");

  InterpolationSystem sys;
  sys.nodes = std::move(nodes);
  sys.mults = std::move(mults);
  sys.offsets.resize(sys.mults.size());
  int n = 0, nmax = 0;
  for (std::size_t i = 0; i < sys.mults.size(); ++i) {
    sys.offsets[i] = n;
    n += sys.mults[i];
    nmax = std::max(nmax, sys.mults[i]);
  }
  sys.dimension = n;
  sys.order = nmax - 1;
  return sys;
}

namespace {

// Collocation matrix: rows are (node, derivative) slots node-major, columns
// are the fundamental functions.
Eigen::MatrixXcd collocation_matrix(const InterpolationSystem& sys,
                                    const std::vector<ExponentialPolynomial>& fundamental) {
  const int n = sys.dimension;
  Eigen::MatrixXcd mat(n, n);
  for (int k = 0; k < n; ++k) {
    ExponentialPolynomial deriv = fundamental[static_cast<std::size_t>(k)];
    for (int j = 0; j <= sys.order; ++j) {
      for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
        if (j >= sys.mults[static_cast<std::size_t>(alpha)]) continue;
        mat(sys.slot(alpha, j), k) = evaluate(deriv, sys.nodes[static_cast<std::size_t>(alpha)]);
      }
      if (j < sys.order) deriv = differentiate(deriv);
    }
  }
  return mat;
}

double max_row_norm(const Eigen::MatrixXcd& mat) {
  double s = 0.0;
  for (Eigen::Index r = 0; r < mat.rows(); ++r) s = std::max(s, mat.row(r).norm());
  return s;
}

double condition_from(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu) {
  const double rc = lu.rcond();
  return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}

}  // namespace

Complex wronskian(const InterpolationSystem& sys,
                  const std::vector<ExponentialPolynomial>& fundamental, double* condition) {
  if (static_cast<int>(fundamental.size()) != sys.dimension)
    throw Error("fundamental system size must equal the system dimension");
  const Eigen::MatrixXcd mat = collocation_matrix(sys, fundamental);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mat);
  if (condition) *condition = condition_from(lu);
  return lu.determinant();
}

StandardBasis standard_basis(const DifferentialOperatorSpec& op, const RootDecomposition& rd,
                             const InterpolationSystem& sys) {
  const int n = sys.dimension;
  if (rd.total_order() != op.order() || op.order() != n)
    throw Error("operator order, root multiplicities and system dimension must agree");

  const std::vector<ExponentialPolynomial> fundamental = fundamental_system(rd);
  const Eigen::MatrixXcd mat = collocation_matrix(sys, fundamental);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mat);
  const Complex det = lu.determinant();

  const double scale = max_row_norm(mat);
  if (std::abs(det) <= 1e-12 * std::pow(scale, n))
    throw SingularSystem("collocation determinant vanishes for this node system");

  StandardBasis basis;
  basis.sys = sys;
  basis.wronskian_value = det;
  basis.condition_estimate = condition_from(lu);
  basis.ill_conditioned = basis.condition_estimate > 1e12;

  const Eigen::MatrixXcd inv = lu.solve(Eigen::MatrixXcd::Identity(n, n));
  basis.chis.reserve(static_cast<std::size_t>(n));
  for (int slot = 0; slot < n; ++slot) {
    // Column `slot` of the inverse holds the coordinates of chi_slot in the
    // fundamental system; regroup them into per-root blocks.
    std::vector<ExpPolyBlock> blocks;
    int k = 0;
    for (const auto& root : rd.roots) {
      std::vector<Complex> coeffs(static_cast<std::size_t>(root.multiplicity));
      for (int j = 0; j < root.multiplicity; ++j) coeffs[static_cast<std::size_t>(j)] = inv(k++, slot);
      blocks.push_back(ExpPolyBlock{root.lambda, std::move(coeffs)});
    }
    basis.chis.push_back(make_exppoly(std::move(blocks)));
  }
  return basis;
}

StandardBasis taylor_basis(const DifferentialOperatorSpec& op, const RootDecomposition& rd,
                           double a) {
  const int n = op.order();
  const InterpolationSystem sys = make_system({a}, {n});
  const CharacteristicSolution cs = characteristic_solution(op, rd);

  std::vector<ExponentialPolynomial> shifted(static_cast<std::size_t>(n));
  ExponentialPolynomial deriv = cs.ep;
  for (int i = 0; i < n; ++i) {
    shifted[static_cast<std::size_t>(i)] = translate(deriv, -a);  // t -> w_c^(i)(t - a)
    deriv = differentiate(deriv);
  }

  StandardBasis basis;
  basis.sys = sys;
  basis.chis.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    ExponentialPolynomial chi;
    for (int i = 0; i <= n - 1 - j; ++i)
      chi = ep_add(chi, ep_scale(shifted[static_cast<std::size_t>(i)],
                                 op.c[static_cast<std::size_t>(i + j + 1)]));
    basis.chis.push_back(std::move(chi));
  }

  double condition = 0.0;
  basis.wronskian_value = wronskian(sys, fundamental_system(rd), &condition);
  basis.condition_estimate = condition;
  basis.ill_conditioned = condition > 1e12;
  return basis;
}

Interpolant interpolate(const StandardBasis& basis,
                        const std::map<std::pair<int, int>, Complex>& data) {
  const InterpolationSystem& sys = basis.sys;
  std::vector<std::pair<int, int>> missing;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      if (!data.count({alpha, beta})) missing.emplace_back(alpha, beta);
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "missing Hermite data for slots:";
    for (const auto& [a, b] : missing) msg << " (" << a << "," << b << ")";
    throw MissingData(msg.str());
  }
  for (const auto& [key, value] : data) {
    (void)value;
    const auto [alpha, beta] = key;
    if (alpha < 0 || alpha >= sys.node_count() || beta < 0 ||
        beta >= sys.mults[static_cast<std::size_t>(alpha)])
      throw Error("Hermite data references a slot outside the system");
  }

  ExponentialPolynomial ep;
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      ep = ep_add(ep, ep_scale(basis.chi(alpha, beta), data.at({alpha, beta})));
  return Interpolant{basis, data, std::move(ep)};
}

}  // namespace expinterp
