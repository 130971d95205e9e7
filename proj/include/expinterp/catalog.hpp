#pragma once

#include <string>
#include <vector>

#include "expinterp/interp.hpp"

namespace expinterp {

// Node systems whose cardinal kernel functions have elementary closed forms.
enum class CatalogCase {
  Hyperbolic2,        // w'' - w,  two simple nodes, sinh ratios
  Trigonometric2,     // w'' + w,  two simple nodes, sin ratios
  Biharmonic4,        // w'''' - w, two double nodes, sinh/cosh/sin/cos mix
  OddHyperbolic3,     // w''' - w', three simple nodes, cosh ratios
  OddTrigonometric3,  // w''' + w', three simple nodes, cos ratios
};

const char* catalog_case_name(CatalogCase c);
CatalogCase catalog_case_from_string(const std::string& name);

struct ClosedFormBasis {
  StandardBasis basis;
  DifferentialOperatorSpec op;
  RootDecomposition rd;
};

// Builds the basis from the literal closed-form expressions (no linear solve).
// `nodes` must hold 2 or 3 strictly increasing values depending on the case.
// Throws DegenerateParameters when a closed-form denominator vanishes (e.g.
// trigonometric nodes pi apart).
ClosedFormBasis closed_form_catalog(CatalogCase case_id, const std::vector<double>& nodes);

}  // namespace expinterp
