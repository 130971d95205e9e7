#include "expinterp/catalog.hpp"

#include <cmath>

#include "expinterp/errors.hpp"

namespace expinterp {

const char* catalog_case_name(CatalogCase c) {
  switch (c) {
    case CatalogCase::Hyperbolic2: return "hyperbolic2";
    case CatalogCase::Trigonometric2: return "trigonometric2";
    case CatalogCase::Biharmonic4: return "biharmonic4";
    case CatalogCase::OddHyperbolic3: return "odd_hyperbolic3";
    case CatalogCase::OddTrigonometric3: return "odd_trigonometric3";
  }
  return "?";
}

CatalogCase catalog_case_from_string(const std::string& name) {
  for (CatalogCase c : {CatalogCase::Hyperbolic2, CatalogCase::Trigonometric2,
                        CatalogCase::Biharmonic4, CatalogCase::OddHyperbolic3,
                        CatalogCase::OddTrigonometric3})
    if (name == catalog_case_name(c)) return c;
  throw Error("unknown catalog case: " + name);
}

namespace {

void require_node_count(const std::vector<double>& nodes, std::size_t want, const char* name) {
  if (nodes.size() != want)
    throw Error(std::string(name) + " requires exactly " + std::to_string(want) + " nodes");
}

ExponentialPolynomial ep_sub(const ExponentialPolynomial& a, const ExponentialPolynomial& b) {
  return ep_add(a, ep_scale(b, -1.0));
}

StandardBasis finish(const DifferentialOperatorSpec& op, const RootDecomposition& rd,
                     InterpolationSystem sys, std::vector<ExponentialPolynomial> chis,
                     Complex closed_form_w) {
  StandardBasis basis;
  basis.sys = std::move(sys);
  basis.chis = std::move(chis);
  basis.wronskian_value = closed_form_w;
  double condition = 0.0;
  wronskian(basis.sys, fundamental_system(rd), &condition);
  basis.condition_estimate = condition;
  basis.ill_conditioned = condition > 1e12;
  (void)op;
  return basis;
}

}  // namespace

ClosedFormBasis closed_form_catalog(CatalogCase case_id, const std::vector<double>& nodes) {
  const Complex i(0.0, 1.0);
  switch (case_id) {
    case CatalogCase::Hyperbolic2: {
      require_node_count(nodes, 2, "hyperbolic2");
      const double a0 = nodes[0], a1 = nodes[1];
      DifferentialOperatorSpec op = make_operator(std::vector<double>{-1.0, 0.0, 1.0});
      RootDecomposition rd = find_roots(op, {{Complex(-1.0), 1}, {Complex(1.0), 1}});
      InterpolationSystem sys = make_system({a0, a1}, {1, 1});
      const double den = std::sinh(a0 - a1);
      if (std::abs(den) <= 1e-9 * (1.0 + std::abs(std::cosh(a0 - a1))))
        throw DegenerateParameters("sinh(a0 - a1) vanishes");
      std::vector<ExponentialPolynomial> chis{ep_scale(ep_sinh(a1), 1.0 / den),
                                              ep_scale(ep_sinh(a0), -1.0 / den)};
      // Determinant of the canonical (e^{-t}, e^{t}) collocation matrix.
      const Complex w = 2.0 * std::sinh(a1 - a0);
      return ClosedFormBasis{finish(op, rd, std::move(sys), std::move(chis), w), op, rd};
    }
    case CatalogCase::Trigonometric2: {
      require_node_count(nodes, 2, "trigonometric2");
      const double a0 = nodes[0], a1 = nodes[1];
      DifferentialOperatorSpec op = make_operator(std::vector<double>{1.0, 0.0, 1.0});
      RootDecomposition rd = find_roots(op, {{-i, 1}, {i, 1}});
      InterpolationSystem sys = make_system({a0, a1}, {1, 1});
      const double den = std::sin(a0 - a1);
      if (std::abs(den) <= 1e-9)
        throw DegenerateParameters("sin(a0 - a1) vanishes (nodes a multiple of pi apart)");
      std::vector<ExponentialPolynomial> chis{ep_scale(ep_sin(a1), 1.0 / den),
                                              ep_scale(ep_sin(a0), -1.0 / den)};
      // Determinant of the canonical (e^{-it}, e^{it}) collocation matrix.
      const Complex w = 2.0 * i * std::sin(a1 - a0);
      return ClosedFormBasis{finish(op, rd, std::move(sys), std::move(chis), w), op, rd};
    }
    case CatalogCase::Biharmonic4: {
      require_node_count(nodes, 2, "biharmonic4");
      const double a0 = nodes[0], a1 = nodes[1];
      DifferentialOperatorSpec op = make_operator(std::vector<double>{-1.0, 0.0, 0.0, 0.0, 1.0});
      RootDecomposition rd =
          find_roots(op, {{Complex(-1.0), 1}, {-i, 1}, {i, 1}, {Complex(1.0), 1}});
      InterpolationSystem sys = make_system({a0, a1}, {2, 2});
      const double d = a0 - a1;
      const double k = 2.0 - 2.0 * std::cosh(d) * std::cos(d);
      if (std::abs(k) <= 1e-9 * (1.0 + std::cosh(d)))
        throw DegenerateParameters("2 - 2 cosh(a0-a1) cos(a0-a1) vanishes");
      const double chd = std::cosh(d) - std::cos(d);
      const double shp = std::sinh(d) + std::sin(d);
      const double shm = std::sinh(d) - std::sin(d);
      const auto cosh_m_cos = [](double s) { return ep_sub(ep_cosh(s), ep_cos(s)); };
      const auto sinh_m_sin = [](double s) { return ep_sub(ep_sinh(s), ep_sin(s)); };
      std::vector<ExponentialPolynomial> chis(4);
      chis[0] = ep_scale(ep_sub(ep_scale(cosh_m_cos(a1), chd), ep_scale(sinh_m_sin(a1), shp)),
                         1.0 / k);
      chis[1] = ep_scale(ep_sub(ep_scale(sinh_m_sin(a1), chd), ep_scale(cosh_m_cos(a1), shm)),
                         1.0 / k);
      chis[2] = ep_scale(ep_add(ep_scale(cosh_m_cos(a0), chd), ep_scale(sinh_m_sin(a0), shp)),
                         1.0 / k);
      chis[3] = ep_scale(ep_add(ep_scale(sinh_m_sin(a0), chd), ep_scale(cosh_m_cos(a0), shm)),
                         1.0 / k);
      return ClosedFormBasis{finish(op, rd, std::move(sys), std::move(chis), Complex(k)), op, rd};
    }
    case CatalogCase::OddHyperbolic3:
    case CatalogCase::OddTrigonometric3: {
      const bool hyper = case_id == CatalogCase::OddHyperbolic3;
      require_node_count(nodes, 3, hyper ? "odd_hyperbolic3" : "odd_trigonometric3");
      DifferentialOperatorSpec op =
          make_operator(hyper ? std::vector<double>{0.0, -1.0, 0.0, 1.0}
                              : std::vector<double>{0.0, 1.0, 0.0, 1.0});
      RootDecomposition rd =
          hyper ? find_roots(op, {{Complex(-1.0), 1}, {Complex(0.0), 1}, {Complex(1.0), 1}})
                : find_roots(op, {{-i, 1}, {Complex(0.0), 1}, {i, 1}});
      InterpolationSystem sys = make_system(nodes, {1, 1, 1});
      std::vector<ExponentialPolynomial> chis(3);
      for (int alpha = 0; alpha < 3; ++alpha) {
        const double p = nodes[static_cast<std::size_t>((alpha + 1) % 3)];
        const double q = nodes[static_cast<std::size_t>((alpha + 2) % 3)];
        const double mid = 0.5 * (p + q), half = 0.5 * (p - q);
        const double offset = hyper ? std::cosh(half) : std::cos(half);
        const double den =
            (hyper ? std::cosh(nodes[static_cast<std::size_t>(alpha)] - mid) : std::cos(nodes[static_cast<std::size_t>(alpha)] - mid)) -
            offset;
        if (std::abs(den) <= 1e-9)
          throw DegenerateParameters("closed-form denominator vanishes for this node triple");
        const ExponentialPolynomial num =
            ep_add(hyper ? ep_cosh(mid) : ep_cos(mid), ep_constant(-offset));
        chis[static_cast<std::size_t>(alpha)] = ep_scale(num, 1.0 / den);
      }
      const double h0 = 0.5 * (nodes[0] - nodes[2]);
      const double h1 = 0.5 * (nodes[1] - nodes[0]);
      const double h2 = 0.5 * (nodes[2] - nodes[1]);
      // sinh(x)+sinh(y)+sinh(z) = +4 prod sinh(halves) when x+y+z = 0, but the
      // trigonometric analogue carries a minus sign.
      const Complex w = hyper ? Complex(4.0 * std::sinh(h0) * std::sinh(h1) * std::sinh(h2))
                              : Complex(-4.0 * std::sin(h0) * std::sin(h1) * std::sin(h2));
      return ClosedFormBasis{finish(op, rd, std::move(sys), std::move(chis), w), op, rd};
    }
  }
  throw Error("unhandled catalog case");
}

}  // namespace expinterp
