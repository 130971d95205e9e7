#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "expinterp/catalog.hpp"
#include "expinterp/errors.hpp"
#include "expinterp/hermite_poly.hpp"
#include "expinterp/interp.hpp"
#include "test_support.hpp"

using namespace expinterp;
using namespace testsupport;

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(lo + (hi - lo) * k / (count - 1));
  return out;
}

double poly_deriv_eval(std::vector<double> p, int order, double x) {
  for (int k = 0; k < order; ++k) p = poly_derivative(p);
  return poly_eval(p, x);
}

// Random nodes in [0, 1.8] with gaps >= 0.3 so the kernels in play stay far
// from any degenerate configuration.
std::vector<double> random_nodes(std::mt19937_64& rng, int count) {
  std::vector<double> nodes;
  double t = urand(rng, 0.0, 0.3);
  for (int k = 0; k < count; ++k) {
    nodes.push_back(t);
    t += urand(rng, 0.3, 0.75);
  }
  return nodes;
}

}  // namespace

TEST_CASE("make_system lays out slots node-major") {
  const auto sys = make_system({0.0, 1.0}, {1, 2});
  CHECK(sys.dimension == 3);
  CHECK(sys.order == 1);
  CHECK(sys.slot(0, 0) == 0);
  CHECK(sys.slot(1, 0) == 1);
  CHECK(sys.slot(1, 1) == 2);
}

TEST_CASE("make_system rejects malformed inputs") {
  CHECK_THROWS_AS(make_system({}, {}), EmptySystem);
  CHECK_THROWS_AS(make_system({0.0}, {0}), NonPositiveMultiplicity);
  CHECK_THROWS_AS(make_system({0.0, 0.0}, {1, 1}), NonIncreasingNodes);
  CHECK_THROWS_AS(make_system({1.0, 0.5}, {1, 1}), NonIncreasingNodes);
  CHECK_THROWS_AS(make_system({0.0, 1.0}, {1}), Error);
}

TEST_CASE("the two-node exponential determinants have elementary closed forms") {
  std::mt19937_64 rng(111);
  const auto op_h = make_operator(std::vector<double>{-1.0, 0.0, 1.0});
  const auto op_t = make_operator(std::vector<double>{1.0, 0.0, 1.0});
  const auto fs_h = fundamental_system(find_roots(op_h));
  const auto fs_t = fundamental_system(find_roots(op_t));
  for (int trial = 0; trial < 10; ++trial) {
    const auto nodes = random_nodes(rng, 2);
    const double d = nodes[1] - nodes[0];
    const auto sys = make_system(nodes, {1, 1});
    CHECK(close(wronskian(sys, fs_h), Complex(2.0 * std::sinh(d)), 1e-10 * std::cosh(d)));
    CHECK(close(wronskian(sys, fs_t), Complex(0.0, 2.0 * std::sin(d)), 1e-10));
  }
}

TEST_CASE("the double-node fourth-order determinant equals 2 - 2 cosh cos") {
  std::mt19937_64 rng(222);
  for (int trial = 0; trial < 10; ++trial) {
    const auto nodes = random_nodes(rng, 2);
    const double d = nodes[1] - nodes[0];
    const auto sys = make_system(nodes, {2, 2});
    const std::vector<ExponentialPolynomial> fs{ep_sinh(nodes[1]), ep_cosh(nodes[1]),
                                                ep_sin(nodes[1]), ep_cos(nodes[1])};
    const double want = 2.0 - 2.0 * std::cosh(d) * std::cos(d);
    CHECK(close(wronskian(sys, fs), Complex(want), 1e-10 * (1.0 + std::cosh(d))));
  }
}

TEST_CASE("the three-node odd-operator determinants factor into half-gap products") {
  std::mt19937_64 rng(333);
  for (int trial = 0; trial < 10; ++trial) {
    const auto nodes = random_nodes(rng, 3);
    const auto sys = make_system(nodes, {1, 1, 1});
    const double h0 = 0.5 * (nodes[0] - nodes[2]);
    const double h1 = 0.5 * (nodes[1] - nodes[0]);
    const double h2 = 0.5 * (nodes[2] - nodes[1]);
    const std::vector<ExponentialPolynomial> fs_h{ep_constant(1.0), ep_cosh(nodes[2]),
                                                  ep_sinh(nodes[2])};
    const std::vector<ExponentialPolynomial> fs_t{ep_constant(1.0), ep_cos(nodes[2]),
                                                  ep_sin(nodes[2])};
    const double want_h = 4.0 * std::sinh(h0) * std::sinh(h1) * std::sinh(h2);
    const double want_t = -4.0 * std::sin(h0) * std::sin(h1) * std::sin(h2);
    CHECK(close(wronskian(sys, fs_h), Complex(want_h), 1e-10 * (1.0 + std::abs(want_h))));
    CHECK(close(wronskian(sys, fs_t), Complex(want_t), 1e-10));
  }
}

TEST_CASE("pure-derivative cardinal functions are the Lagrange polynomials") {
  const auto op = make_operator(std::vector<double>{0.0, 0.0, 0.0, 1.0});
  const std::vector<double> nodes{0.0, 0.5, 2.0};
  const auto sb = standard_basis(op, find_roots(op), make_system(nodes, {1, 1, 1}));
  CHECK_FALSE(sb.ill_conditioned);
  for (int alpha = 0; alpha < 3; ++alpha) {
    for (double x : linspace(-0.5, 2.5, 13)) {
      double lagrange = 1.0;
      for (int i = 0; i < 3; ++i)
        if (i != alpha) lagrange *= (x - nodes[i]) / (nodes[alpha] - nodes[i]);
      CHECK(close(evaluate(sb.chi(alpha, 0), x), Complex(lagrange), 1e-10 * (1.0 + std::abs(lagrange))));
    }
  }
}

TEST_CASE("single-node pure-derivative cardinal functions are Taylor monomials") {
  const auto op = make_operator(std::vector<double>{0.0, 0.0, 0.0, 0.0, 1.0});
  const double a = 0.7;
  const auto sb = standard_basis(op, find_roots(op), make_system({a}, {4}));
  for (int j = 0; j < 4; ++j) {
    for (double x : linspace(-1.0, 2.0, 7)) {
      const double want = std::pow(x - a, j) / factorial(j);
      CHECK(close(evaluate(sb.chi(0, j), x), Complex(want), 1e-10 * (1.0 + std::abs(want))));
    }
  }
}

TEST_CASE("the generic solver matches every closed-form catalog case") {
  std::mt19937_64 rng(444);
  const struct {
    CatalogCase id;
    int node_count;
  } cases[] = {{CatalogCase::Hyperbolic2, 2},
               {CatalogCase::Trigonometric2, 2},
               {CatalogCase::Biharmonic4, 2},
               {CatalogCase::OddHyperbolic3, 3},
               {CatalogCase::OddTrigonometric3, 3}};
  for (const auto& c : cases) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto nodes = random_nodes(rng, c.node_count);
      const auto cf = closed_form_catalog(c.id, nodes);
      const auto sb = standard_basis(cf.op, cf.rd, cf.basis.sys);
      REQUIRE(sb.chis.size() == cf.basis.chis.size());
      for (std::size_t s = 0; s < sb.chis.size(); ++s) {
        for (double x : linspace(nodes.front() - 0.5, nodes.back() + 0.5, 11)) {
          const Complex want = evaluate(cf.basis.chis[s], x);
          CHECK(close(evaluate(sb.chis[s], x), want, 1e-8 * (1.0 + std::abs(want))));
        }
      }
    }
  }
}

TEST_CASE("cardinal functions satisfy the defining delta property") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 15; ++trial) {
    const int node_count = irand(rng, 1, 3);
    std::vector<int> mults;
    int n = 0;
    for (int k = 0; k < node_count; ++k) {
      mults.push_back(irand(rng, 1, 2));
      n += mults.back();
    }
    const auto sample = random_real_operator(rng, n, 0.3);
    const auto sys = make_system(random_nodes(rng, node_count), mults);
    const auto sb = standard_basis(sample.op, find_roots(sample.op, sample.roots), sys);
    const double scale = 1.0 + max_coeff_magnitude(sb.chis.empty() ? ExponentialPolynomial{}
                                                                   : sb.chis[0]);
    for (int alpha = 0; alpha < node_count; ++alpha)
      for (int beta = 0; beta < mults[static_cast<std::size_t>(alpha)]; ++beta) {
        const auto& chi = sb.chi(alpha, beta);
        for (int i = 0; i < node_count; ++i)
          for (int j = 0; j < mults[static_cast<std::size_t>(i)]; ++j) {
            const Complex want = (i == alpha && j == beta) ? Complex(1.0) : Complex(0.0);
            CHECK(close(evaluate(differentiate(chi, j), sys.nodes[static_cast<std::size_t>(i)]),
                        want, 1e-8 * scale));
          }
      }
  }
}

TEST_CASE("a period-aligned trigonometric system is rejected as singular") {
  const auto op = make_operator(std::vector<double>{1.0, 0.0, 1.0});
  const auto rd = find_roots(op);
  const double pi = std::acos(-1.0);
  CHECK_THROWS_AS(standard_basis(op, rd, make_system({0.0, pi}, {1, 1})), SingularSystem);
}

TEST_CASE("the single-node shortcut basis reproduces cosine and sine") {
  const auto op = make_operator(std::vector<double>{1.0, 0.0, 1.0});
  const auto tb = taylor_basis(op, find_roots(op), 0.0);
  for (double x : linspace(-3.0, 3.0, 25)) {
    CHECK(close(evaluate(tb.chi(0, 0), x), Complex(std::cos(x)), 1e-11));
    CHECK(close(evaluate(tb.chi(0, 1), x), Complex(std::sin(x)), 1e-11));
  }
}

TEST_CASE("the single-node shortcut agrees with the generic solver") {
  std::mt19937_64 rng(666);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = irand(rng, 1, 5);
    const auto sample = random_real_operator(rng, n, 0.3);
    const auto rd = find_roots(sample.op, sample.roots);
    const double a = urand(rng, -1.0, 1.0);
    const auto tb = taylor_basis(sample.op, rd, a);
    const auto sb = standard_basis(sample.op, rd, make_system({a}, {n}));
    for (int j = 0; j < n; ++j)
      for (double x : linspace(a - 1.5, a + 1.5, 9)) {
        const Complex want = evaluate(sb.chi(0, j), x);
        CHECK(close(evaluate(tb.chi(0, j), x), want, 1e-8 * (1.0 + std::abs(want))));
      }
  }
}

TEST_CASE("interpolation projects kernel elements onto themselves") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    const int node_count = irand(rng, 1, 3);
    std::vector<int> mults;
    int n = 0;
    for (int k = 0; k < node_count; ++k) {
      mults.push_back(irand(rng, 1, 2));
      n += mults.back();
    }
    const auto sample = random_real_operator(rng, n, 0.3);
    const auto rd = find_roots(sample.op, sample.roots);
    const auto sys = make_system(random_nodes(rng, node_count), mults);
    const auto sb = standard_basis(sample.op, rd, sys);
    const auto f = random_kernel_element(rng, rd);
    std::map<std::pair<int, int>, Complex> data;
    for (int alpha = 0; alpha < node_count; ++alpha)
      for (int beta = 0; beta < mults[static_cast<std::size_t>(alpha)]; ++beta)
        data[{alpha, beta}] =
            evaluate(differentiate(f, beta), sys.nodes[static_cast<std::size_t>(alpha)]);
    const auto itp = interpolate(sb, data);
    for (double x : linspace(sys.nodes.front() - 0.5, sys.nodes.back() + 0.5, 11)) {
      const Complex want = evaluate(f, x);
      CHECK(close(evaluate(itp.ep, x), want,
                  1e-8 * (1.0 + ep_majorant(f, std::abs(x)) + max_coeff_magnitude(itp.ep))));
    }
  }
}

TEST_CASE("interpolation demands a value for every slot") {
  const auto op = make_operator(std::vector<double>{0.0, 0.0, 1.0});
  const auto sb = standard_basis(op, find_roots(op), make_system({0.0, 1.0}, {1, 1}));
  CHECK_THROWS_AS(interpolate(sb, {{{0, 0}, Complex(1.0)}}), MissingData);
  CHECK_THROWS_AS(interpolate(sb, {{{0, 0}, Complex(1.0)},
                                   {{1, 0}, Complex(2.0)},
                                   {{1, 5}, Complex(3.0)}}),
                  Error);
}

TEST_CASE("classical cardinal polynomials satisfy the delta property") {
  const auto sys = make_system({0.0, 1.0, 2.5}, {2, 1, 3});
  const auto hb = classical_hermite_basis(sys);
  for (int alpha = 0; alpha < 3; ++alpha)
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta) {
      const auto& h = hb.at(alpha, beta);
      CHECK(static_cast<int>(h.size()) <= sys.dimension);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < sys.mults[static_cast<std::size_t>(i)]; ++j) {
          const double want = (i == alpha && j == beta) ? 1.0 : 0.0;
          CHECK(std::abs(poly_deriv_eval(h, j, sys.nodes[static_cast<std::size_t>(i)]) - want) <=
                1e-9);
        }
    }
}

TEST_CASE("classical cardinal polynomials reduce to Lagrange and Taylor forms") {
  const std::vector<double> nodes{0.0, 0.5, 2.0};
  const auto hb = classical_hermite_basis(make_system(nodes, {1, 1, 1}));
  for (int alpha = 0; alpha < 3; ++alpha)
    for (double x : linspace(-0.5, 2.5, 9)) {
      double lagrange = 1.0;
      for (int i = 0; i < 3; ++i)
        if (i != alpha) lagrange *= (x - nodes[i]) / (nodes[alpha] - nodes[i]);
      CHECK(std::abs(poly_eval(hb.at(alpha, 0), x) - lagrange) <= 1e-11 * (1.0 + std::abs(lagrange)));
    }

  const auto taylor = classical_hermite_basis(make_system({0.7}, {4}));
  for (int beta = 0; beta < 4; ++beta)
    for (double x : linspace(-1.0, 2.0, 9)) {
      const double want = std::pow(x - 0.7, beta) / factorial(beta);
      CHECK(std::abs(poly_eval(taylor.at(0, beta), x) - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("the node polynomial collects every factor") {
  const auto hb = classical_hermite_basis(make_system({0.0, 1.0}, {2, 1}));
  REQUIRE(hb.node_poly.size() == 4);
  CHECK(hb.node_poly[3] == doctest::Approx(1.0));
  CHECK(std::abs(poly_eval(hb.node_poly, 0.0)) <= 1e-14);
  CHECK(std::abs(poly_eval(hb.node_poly, 1.0)) <= 1e-14);
  CHECK(std::abs(poly_deriv_eval(hb.node_poly, 1, 0.0)) <= 1e-14);
}

TEST_CASE("catalog case names round-trip") {
  for (CatalogCase c : {CatalogCase::Hyperbolic2, CatalogCase::Trigonometric2,
                        CatalogCase::Biharmonic4, CatalogCase::OddHyperbolic3,
                        CatalogCase::OddTrigonometric3}) {
    CHECK(catalog_case_from_string(catalog_case_name(c)) == c);
  }
  CHECK_THROWS_AS(catalog_case_from_string("nonsense"), Error);
}

TEST_CASE("catalog bases satisfy the delta property and the determinant formulas") {
  std::mt19937_64 rng(888);
  for (int trial = 0; trial < 5; ++trial) {
    {
      const auto nodes = random_nodes(rng, 2);
      const double d = nodes[1] - nodes[0];
      const auto h2 = closed_form_catalog(CatalogCase::Hyperbolic2, nodes);
      CHECK(close(h2.basis.wronskian_value, Complex(2.0 * std::sinh(d)), 1e-12 * std::cosh(d)));
      const auto t2 = closed_form_catalog(CatalogCase::Trigonometric2, nodes);
      CHECK(close(t2.basis.wronskian_value, Complex(0.0, 2.0 * std::sin(d)), 1e-12));
      const auto b4 = closed_form_catalog(CatalogCase::Biharmonic4, nodes);
      CHECK(close(b4.basis.wronskian_value, Complex(2.0 - 2.0 * std::cosh(d) * std::cos(d)),
                  1e-12 * (1.0 + std::cosh(d))));
      for (const auto* cf : {&h2, &t2, &b4}) {
        const auto& sys = cf->basis.sys;
        for (int alpha = 0; alpha < sys.node_count(); ++alpha)
          for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
            for (int i = 0; i < sys.node_count(); ++i)
              for (int j = 0; j < sys.mults[static_cast<std::size_t>(i)]; ++j) {
                const Complex want = (i == alpha && j == beta) ? Complex(1.0) : Complex(0.0);
                CHECK(close(evaluate(differentiate(cf->basis.chi(alpha, beta), j),
                                     sys.nodes[static_cast<std::size_t>(i)]),
                            want, 1e-10));
              }
      }
    }
    {
      const auto nodes = random_nodes(rng, 3);
      const double h0 = 0.5 * (nodes[0] - nodes[2]);
      const double h1 = 0.5 * (nodes[1] - nodes[0]);
      const double h2 = 0.5 * (nodes[2] - nodes[1]);
      const auto oh = closed_form_catalog(CatalogCase::OddHyperbolic3, nodes);
      CHECK(close(oh.basis.wronskian_value,
                  Complex(4.0 * std::sinh(h0) * std::sinh(h1) * std::sinh(h2)), 1e-12 * 10.0));
      const auto ot = closed_form_catalog(CatalogCase::OddTrigonometric3, nodes);
      CHECK(close(ot.basis.wronskian_value,
                  Complex(-4.0 * std::sin(h0) * std::sin(h1) * std::sin(h2)), 1e-12));
      for (const auto* cf : {&oh, &ot})
        for (int alpha = 0; alpha < 3; ++alpha)
          for (int i = 0; i < 3; ++i) {
            const Complex want = i == alpha ? Complex(1.0) : Complex(0.0);
            CHECK(close(evaluate(cf->basis.chi(alpha, 0), nodes[static_cast<std::size_t>(i)]),
                        want, 1e-10));
          }
    }
  }
}

TEST_CASE("catalog construction rejects degenerate node configurations") {
  const double pi = std::acos(-1.0);
  CHECK_THROWS_AS(closed_form_catalog(CatalogCase::Hyperbolic2, {0.0, 1e-12}),
                  DegenerateParameters);
  CHECK_THROWS_AS(closed_form_catalog(CatalogCase::Trigonometric2, {0.0, pi}),
                  DegenerateParameters);
  // First positive root of cosh(d) cos(d) = 1 (clamped beam frequency).
  CHECK_THROWS_AS(closed_form_catalog(CatalogCase::Biharmonic4, {0.0, 4.730040744862704}),
                  DegenerateParameters);
  CHECK_THROWS_AS(closed_form_catalog(CatalogCase::OddTrigonometric3, {0.0, 1.0, 2.0 * pi}),
                  DegenerateParameters);
  CHECK_THROWS_AS(closed_form_catalog(CatalogCase::Hyperbolic2, {0.0, 1.0, 2.0}), Error);
}
