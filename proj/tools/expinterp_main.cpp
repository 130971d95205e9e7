// Command-line front-end: parses a JSON problem specification, runs the
// library pipelines, and emits machine-readable JSON or CSV.
//
// Exit codes: 0 success, 1 usage/spec errors, 2 operator-stage failures,
// 3 degenerate systems or missing data, 4 quadrature non-convergence or a
// verification residual above tolerance.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expinterp/catalog.hpp"
#include "expinterp/charsol.hpp"
#include "expinterp/errors.hpp"
#include "expinterp/function_catalog.hpp"
#include "expinterp/interp.hpp"
#include "expinterp/problem_spec.hpp"
#include "expinterp/remainder.hpp"
#include "json.hpp"

namespace {

using expinterp::Complex;
using ordered_json = nlohmann::ordered_json;

// Command-line misuse distinct from library failures; always exits 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string spec_path;
  std::string out_path;
  std::string format = "json";
  std::string grid_text;
  double tol = -1.0;
  bool tol_set = false;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json num(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, stop = 0.0;
  int count = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &start, &stop, &count, &tail) != 3 || count < 1)
    throw UsageError("--grid expects start:stop:count with count >= 1, got '" + text + "'");
  std::vector<double> points;
  if (count == 1) {
    points.push_back(start);
  } else {
    for (int k = 0; k < count; ++k)
      points.push_back(start + (stop - start) * k / (count - 1));
  }
  return points;
}

int thread_budget() {
  const char* env = std::getenv("EXPINTERP_THREADS");
  if (env == nullptr) return 0;
  const int parsed = std::atoi(env);
  return parsed < 0 ? 0 : (parsed > 64 ? 64 : parsed);
}

expinterp::ProblemSpec load_spec(const std::string& path) {
  if (path.empty()) throw UsageError("--spec <file> is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return expinterp::parse_problem_spec(buf.str());
  } catch (const expinterp::Error& e) {
    throw UsageError("invalid spec '" + path + "': " + e.what());
  }
}

const expinterp::OperatorInput& require_operator(const expinterp::ProblemSpec& spec) {
  if (!spec.op) throw UsageError("this command requires an \"operator\" entry in the spec");
  return *spec.op;
}

expinterp::InterpolationSystem require_system(const expinterp::ProblemSpec& spec) {
  if (!spec.nodes || !spec.multiplicities)
    throw UsageError("this command requires \"nodes\" and \"multiplicities\" in the spec");
  return expinterp::make_system(*spec.nodes, *spec.multiplicities);
}

const expinterp::FunctionInput& require_function(const expinterp::ProblemSpec& spec) {
  if (!spec.function) throw UsageError("this command requires a \"function\" entry in the spec");
  return *spec.function;
}

expinterp::FunctionEvaluator smooth_function(const expinterp::FunctionInput& input) {
  if (input.is_tabulated())
    throw expinterp::MissingData(
        "tabulated data provides no derivatives away from the nodes; remainder "
        "commands need a catalog function");
  return expinterp::catalog_function(input.kind, input.sigma, input.poly);
}

ordered_json operator_json(const expinterp::DifferentialOperatorSpec& op) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& ck : op.c) coeffs.push_back(num(ck));
  return ordered_json{{"coefficients", coeffs}, {"order", op.order()}, {"is_real", op.is_real}};
}

ordered_json roots_json(const expinterp::RootDecomposition& rd) {
  ordered_json roots = ordered_json::array();
  for (const auto& r : rd.roots)
    roots.push_back(ordered_json{{"lambda", num(r.lambda)}, {"multiplicity", r.multiplicity}});
  return roots;
}

ordered_json blocks_json(const expinterp::ExponentialPolynomial& ep) {
  ordered_json blocks = ordered_json::array();
  for (const auto& blk : ep.blocks) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& ck : blk.coeffs) coeffs.push_back(num(ck));
    blocks.push_back(ordered_json{{"lambda", num(blk.lambda)}, {"coefficients", coeffs}});
  }
  return blocks;
}

ordered_json system_json(const expinterp::InterpolationSystem& sys) {
  return ordered_json{{"nodes", sys.nodes},
                      {"multiplicities", sys.mults},
                      {"dimension", sys.dimension}};
}

ordered_json function_json(const expinterp::FunctionInput& input) {
  ordered_json out{{"kind", input.kind}};
  if (!input.is_tabulated()) {
    out["sigma"] = input.sigma;
    if (!input.poly.empty()) out["poly"] = input.poly;
  }
  return out;
}

// Hermite data for the system: tabulated rows when given, otherwise exact
// derivatives of the catalog function at each node.
std::map<std::pair<int, int>, Complex> slot_data(const expinterp::InterpolationSystem& sys,
                                                 const expinterp::FunctionInput& input) {
  std::map<std::pair<int, int>, Complex> data;
  if (input.is_tabulated()) {
    if (static_cast<int>(input.data.size()) != sys.node_count())
      throw expinterp::MissingData("tabulated data must have one row per node");
    for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
      const auto& row = input.data[static_cast<std::size_t>(alpha)];
      const int mult = sys.mults[static_cast<std::size_t>(alpha)];
      if (static_cast<int>(row.size()) != mult)
        throw expinterp::MissingData("tabulated row " + std::to_string(alpha) + " needs " +
                                     std::to_string(mult) + " derivative value(s)");
      for (int beta = 0; beta < mult; ++beta)
        data[{alpha, beta}] = Complex(row[static_cast<std::size_t>(beta)]);
    }
    return data;
  }
  const auto f = expinterp::catalog_function(input.kind, input.sigma, input.poly);
  for (int alpha = 0; alpha < sys.node_count(); ++alpha) {
    const int mult = sys.mults[static_cast<std::size_t>(alpha)];
    const auto derivs =
        f.derivatives(sys.nodes[static_cast<std::size_t>(alpha)], mult - 1);
    for (int beta = 0; beta < mult; ++beta)
      data[{alpha, beta}] = Complex(derivs[static_cast<std::size_t>(beta)]);
  }
  return data;
}

struct CommandResult {
  std::string text;  // rendered report
  int exit_code = 0;
  std::string fail_type;  // set when exit_code != 0
  std::string fail_message;
};

std::string render(const ordered_json& report) { return report.dump(2) + "\n"; }

// ---------------------------------------------------------------- omega ----

CommandResult cmd_omega(const expinterp::ProblemSpec& spec, const Options& opt,
                        const std::vector<double>& grid) {
  const auto resolved = expinterp::resolve_operator(require_operator(spec));
  const auto cs = expinterp::characteristic_solution(resolved.op, resolved.rd);
  const int n = resolved.op.order();

  std::vector<Complex> initial_values;
  auto d = cs.ep;
  for (int ell = 0; ell < n; ++ell) {
    initial_values.push_back(expinterp::evaluate(d, 0.0));
    d = expinterp::differentiate(d);
  }

  if (opt.format == "csv") {
    std::string csv;
    if (grid.empty()) {
      csv = "order,value_re,value_im,expected\n";
      for (int ell = 0; ell < n; ++ell)
        csv += std::to_string(ell) + "," + fmt17(initial_values[static_cast<std::size_t>(ell)].real()) +
               "," + fmt17(initial_values[static_cast<std::size_t>(ell)].imag()) + "," +
               (ell == n - 1 ? "1" : "0") + "\n";
    } else {
      csv = "t,value_re,value_im\n";
      for (double t : grid) {
        const Complex v = expinterp::evaluate(cs.ep, t);
        csv += fmt17(t) + "," + fmt17(v.real()) + "," + fmt17(v.imag()) + "\n";
      }
    }
    return CommandResult{csv, 0, {}, {}};
  }

  ordered_json report{{"command", "omega"}};
  report["operator"] = operator_json(resolved.op);
  report["roots"] = roots_json(resolved.rd);
  report["blocks"] = blocks_json(cs.ep);
  ordered_json iv = ordered_json::array();
  for (int ell = 0; ell < n; ++ell)
    iv.push_back(ordered_json{{"order", ell},
                              {"value", num(initial_values[static_cast<std::size_t>(ell)])},
                              {"expected", ell == n - 1 ? 1.0 : 0.0}});
  report["initial_values"] = iv;
  if (!grid.empty()) {
    ordered_json rows = ordered_json::array();
    for (double t : grid)
      rows.push_back(ordered_json{{"t", t}, {"value", num(expinterp::evaluate(cs.ep, t))}});
    report["grid"] = rows;
  }
  return CommandResult{render(report), 0, {}, {}};
}

// ---------------------------------------------------------------- basis ----

CommandResult cmd_basis(const expinterp::ProblemSpec& spec, const Options& opt,
                        const std::vector<double>& grid) {
  const auto resolved = expinterp::resolve_operator(require_operator(spec));
  const auto sys = require_system(spec);
  const auto basis = expinterp::standard_basis(resolved.op, resolved.rd, sys);

  if (opt.format == "csv") {
    if (grid.empty()) throw UsageError("csv output for 'basis' requires --grid");
    std::string csv = "t";
    for (int alpha = 0; alpha < sys.node_count(); ++alpha)
      for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
        csv += ",chi_" + std::to_string(alpha) + "_" + std::to_string(beta) + "_re,chi_" +
               std::to_string(alpha) + "_" + std::to_string(beta) + "_im";
    csv += "\n";
    for (double t : grid) {
      csv += fmt17(t);
      for (const auto& chi : basis.chis) {
        const Complex v = expinterp::evaluate(chi, t);
        csv += "," + fmt17(v.real()) + "," + fmt17(v.imag());
      }
      csv += "\n";
    }
    return CommandResult{csv, 0, {}, {}};
  }

  ordered_json report{{"command", "basis"}};
  report["operator"] = operator_json(resolved.op);
  report["roots"] = roots_json(resolved.rd);
  report["system"] = system_json(sys);
  report["wronskian"] = num(basis.wronskian_value);
  report["condition_estimate"] = basis.condition_estimate;
  report["ill_conditioned"] = basis.ill_conditioned;
  ordered_json chis = ordered_json::array();
  for (int alpha = 0; alpha < sys.node_count(); ++alpha)
    for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta)
      chis.push_back(ordered_json{{"alpha", alpha},
                                  {"beta", beta},
                                  {"blocks", blocks_json(basis.chi(alpha, beta))}});
  report["basis"] = chis;
  if (!grid.empty()) {
    ordered_json rows = ordered_json::array();
    for (double t : grid) {
      ordered_json values = ordered_json::array();
      for (const auto& chi : basis.chis) values.push_back(num(expinterp::evaluate(chi, t)));
      rows.push_back(ordered_json{{"t", t}, {"values", values}});
    }
    report["grid"] = rows;
  }
  return CommandResult{render(report), 0, {}, {}};
}

// --------------------------------------------------------------- interp ----

CommandResult cmd_interp(const expinterp::ProblemSpec& spec, const Options& opt,
                         const std::vector<double>& grid) {
  const auto resolved = expinterp::resolve_operator(require_operator(spec));
  const auto sys = require_system(spec);
  const auto& finput = require_function(spec);
  const auto basis = expinterp::standard_basis(resolved.op, resolved.rd, sys);
  const auto data = slot_data(sys, finput);
  const auto itp = expinterp::interpolate(basis, data);

  if (opt.format == "csv") {
    if (grid.empty()) throw UsageError("csv output for 'interp' requires --grid");
    const bool with_f = !finput.is_tabulated();
    const auto f = with_f ? expinterp::catalog_function(finput.kind, finput.sigma, finput.poly)
                          : expinterp::FunctionEvaluator{};
    std::string csv = with_f ? "t,interp_re,interp_im,f\n" : "t,interp_re,interp_im\n";
    for (double t : grid) {
      const Complex v = expinterp::evaluate(itp.ep, t);
      csv += fmt17(t) + "," + fmt17(v.real()) + "," + fmt17(v.imag());
      if (with_f) csv += "," + fmt17(f.value(t));
      csv += "\n";
    }
    return CommandResult{csv, 0, {}, {}};
  }

  ordered_json report{{"command", "interp"}};
  report["operator"] = operator_json(resolved.op);
  report["system"] = system_json(sys);
  report["function"] = function_json(finput);
  ordered_json data_rows = ordered_json::array();
  for (const auto& [slot, value] : data)
    data_rows.push_back(
        ordered_json{{"alpha", slot.first}, {"beta", slot.second}, {"value", num(value)}});
  report["data"] = data_rows;
  report["interpolant_blocks"] = blocks_json(itp.ep);
  if (!grid.empty()) {
    ordered_json rows = ordered_json::array();
    for (double t : grid)
      rows.push_back(ordered_json{{"t", t}, {"value", num(expinterp::evaluate(itp.ep, t))}});
    report["grid"] = rows;
  }
  return CommandResult{render(report), 0, {}, {}};
}

// --------------------------------------------------------------- verify ----

CommandResult cmd_verify(const expinterp::ProblemSpec& spec, const Options& opt, double tol) {
  const auto resolved = expinterp::resolve_operator(require_operator(spec));
  const auto sys = require_system(spec);
  const auto f = smooth_function(require_function(spec));
  if (spec.eval_points.empty())
    throw UsageError("'verify' requires a non-empty \"eval_points\" list");
  const auto cs = expinterp::characteristic_solution(resolved.op, resolved.rd);
  const auto basis = expinterp::standard_basis(resolved.op, resolved.rd, sys);
  const int threads = thread_budget();

  std::vector<expinterp::RemainderReport> reports;
  for (double x : spec.eval_points)
    reports.push_back(expinterp::reconstruct(resolved.op, cs, basis, f, x, tol, threads));

  double max_residual = 0.0;
  bool all_converged = true;
  for (const auto& r : reports) {
    max_residual = std::max(max_residual, r.residual);
    all_converged = all_converged && r.quadrature_converged;
  }
  const bool ok = all_converged && max_residual <= tol;

  std::string text;
  if (opt.format == "csv") {
    std::string csv =
        "x,true_re,true_im,interp_re,interp_im,reconstructed_re,reconstructed_im,residual,"
        "quadrature_error,converged\n";
    for (const auto& r : reports) {
      csv += fmt17(r.x) + "," + fmt17(r.true_value.real()) + "," + fmt17(r.true_value.imag()) +
             "," + fmt17(r.interpolant_value.real()) + "," + fmt17(r.interpolant_value.imag()) +
             "," + fmt17(r.reconstructed.real()) + "," + fmt17(r.reconstructed.imag()) + "," +
             fmt17(r.residual) + "," + fmt17(r.quadrature_error_estimate) + "," +
             (r.quadrature_converged ? "1" : "0") + "\n";
    }
    text = csv;
  } else {
    ordered_json report{{"command", "verify"}};
    report["operator"] = operator_json(resolved.op);
    report["roots"] = roots_json(resolved.rd);
    report["system"] = system_json(sys);
    report["function"] = function_json(*spec.function);
    report["tolerance"] = tol;
    ordered_json points = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json integrals = ordered_json::array();
      for (int alpha = 0; alpha < sys.node_count(); ++alpha)
        for (int beta = 0; beta < sys.mults[static_cast<std::size_t>(alpha)]; ++beta) {
          const auto& term = r.per_node_integrals[static_cast<std::size_t>(sys.slot(alpha, beta))];
          integrals.push_back(ordered_json{{"alpha", alpha},
                                           {"beta", beta},
                                           {"value", num(term.value)},
                                           {"error_estimate", term.error_estimate},
                                           {"converged", term.converged}});
        }
      points.push_back(ordered_json{{"x", r.x},
                                    {"true_value", num(r.true_value)},
                                    {"interpolant_value", num(r.interpolant_value)},
                                    {"reconstructed", num(r.reconstructed)},
                                    {"residual", r.residual},
                                    {"quadrature_error_estimate", r.quadrature_error_estimate},
                                    {"converged", r.quadrature_converged},
                                    {"integrals", integrals}});
    }
    report["points"] = points;
    report["max_residual"] = max_residual;
    report["all_converged"] = all_converged;
    report["pass"] = ok;
    text = render(report);
  }

  if (!ok) {
    return CommandResult{text, 4,
                         all_converged ? "residual_exceeds_tolerance" : "quadrature_failure",
                         all_converged
                             ? "max residual " + fmt17(max_residual) + " exceeds tolerance " +
                                   fmt17(tol)
                             : "adaptive quadrature failed to converge"};
  }
  return CommandResult{text, 0, {}, {}};
}

// ---------------------------------------------------------------- green ----

CommandResult cmd_green(const expinterp::ProblemSpec& spec, const Options& opt, double tol,
                        const std::vector<double>& grid) {
  const auto sys = require_system(spec);
  if (spec.op) {
    const auto resolved = expinterp::resolve_operator(*spec.op);
    bool pure = true;
    for (int k = 0; k < resolved.op.order(); ++k)
      if (resolved.op.c[static_cast<std::size_t>(k)] != Complex(0.0)) pure = false;
    if (!pure || resolved.op.order() != sys.dimension)
      throw UsageError(
          "'green' works on the pure n-th derivative operator implied by the system; omit "
          "\"operator\" or supply the matching pure-derivative coefficients");
  }
  const auto f = smooth_function(require_function(spec));
  if (spec.eval_points.empty())
    throw UsageError("'green' requires a non-empty \"eval_points\" list");
  const auto gk = expinterp::make_green_kernel(sys);

  std::vector<expinterp::RemainderReport> reports;
  for (double x : spec.eval_points)
    reports.push_back(expinterp::green_reconstruct(gk, f, x, tol));

  double max_residual = 0.0;
  bool all_converged = true;
  for (const auto& r : reports) {
    max_residual = std::max(max_residual, r.residual);
    all_converged = all_converged && r.quadrature_converged;
  }
  const bool ok = all_converged && max_residual <= tol;

  std::string text;
  if (opt.format == "csv") {
    if (grid.empty()) throw UsageError("csv output for 'green' requires --grid");
    std::string csv = "t";
    for (std::size_t k = 0; k < spec.eval_points.size(); ++k)
      csv += ",G_x" + std::to_string(k);
    csv += "\n";
    for (double t : grid) {
      csv += fmt17(t);
      for (double x : spec.eval_points)
        csv += "," + fmt17(expinterp::greens_kernel_value(gk, x, t));
      csv += "\n";
    }
    text = csv;
  } else {
    ordered_json report{{"command", "green"}};
    report["system"] = system_json(sys);
    report["order"] = sys.dimension;
    report["function"] = function_json(*spec.function);
    report["tolerance"] = tol;
    ordered_json points = ordered_json::array();
    for (const auto& r : reports) {
      Complex integral_sum = 0.0;
      for (const auto& term : r.per_node_integrals) integral_sum += term.value;
      points.push_back(ordered_json{{"x", r.x},
                                    {"data_term", num(r.interpolant_value)},
                                    {"integral", num(integral_sum)},
                                    {"reconstructed", num(r.reconstructed)},
                                    {"true_value", num(r.true_value)},
                                    {"residual", r.residual},
                                    {"converged", r.quadrature_converged}});
    }
    report["points"] = points;
    report["max_residual"] = max_residual;
    report["all_converged"] = all_converged;
    report["pass"] = ok;
    if (!grid.empty()) {
      ordered_json rows = ordered_json::array();
      for (double t : grid) {
        ordered_json values = ordered_json::array();
        for (double x : spec.eval_points)
          values.push_back(expinterp::greens_kernel_value(gk, x, t));
        rows.push_back(ordered_json{{"t", t}, {"values", values}});
      }
      report["kernel_samples"] = rows;
    }
    text = render(report);
  }

  if (!ok)
    return CommandResult{text, 4,
                         all_converged ? "residual_exceeds_tolerance" : "quadrature_failure",
                         all_converged
                             ? "max residual " + fmt17(max_residual) + " exceeds tolerance " +
                                   fmt17(tol)
                             : "adaptive quadrature failed to converge"};
  return CommandResult{text, 0, {}, {}};
}

// ------------------------------------------------------------- plumbing ----

void emit_error(int code, const std::string& type, const std::string& message) {
  ordered_json err{{"error", ordered_json{{"type", type}, {"message", message}}},
                   {"exit_code", code}};
  std::cerr << err.dump() << "\n";
}

int classify(const expinterp::Error& e, std::string& type) {
  using namespace expinterp;
  const struct {
    int code;
    const char* name;
    bool (*match)(const Error&);
  } table[] = {
      {2, "too_short", [](const Error& x) { return dynamic_cast<const TooShort*>(&x) != nullptr; }},
      {2, "zero_leading_coefficient",
       [](const Error& x) { return dynamic_cast<const ZeroLeadingCoefficient*>(&x) != nullptr; }},
      {2, "cluster_ambiguity",
       [](const Error& x) { return dynamic_cast<const ClusterAmbiguity*>(&x) != nullptr; }},
      {2, "reconstruction_failure",
       [](const Error& x) { return dynamic_cast<const ReconstructionFailure*>(&x) != nullptr; }},
      {2, "series_inversion_failure",
       [](const Error& x) { return dynamic_cast<const SeriesInversionFailure*>(&x) != nullptr; }},
      {2, "root_solver_failure",
       [](const Error& x) { return dynamic_cast<const RootSolverFailure*>(&x) != nullptr; }},
      {2, "realification_failure",
       [](const Error& x) { return dynamic_cast<const RealificationFailure*>(&x) != nullptr; }},
      {2, "step_failure",
       [](const Error& x) { return dynamic_cast<const StepFailure*>(&x) != nullptr; }},
      {3, "empty_system",
       [](const Error& x) { return dynamic_cast<const EmptySystem*>(&x) != nullptr; }},
      {3, "non_positive_multiplicity",
       [](const Error& x) { return dynamic_cast<const NonPositiveMultiplicity*>(&x) != nullptr; }},
      {3, "non_increasing_nodes",
       [](const Error& x) { return dynamic_cast<const NonIncreasingNodes*>(&x) != nullptr; }},
      {3, "singular_system",
       [](const Error& x) { return dynamic_cast<const SingularSystem*>(&x) != nullptr; }},
      {3, "missing_data",
       [](const Error& x) { return dynamic_cast<const MissingData*>(&x) != nullptr; }},
      {3, "degenerate_parameters",
       [](const Error& x) { return dynamic_cast<const DegenerateParameters*>(&x) != nullptr; }},
      {1, "evaluator_failure",
       [](const Error& x) { return dynamic_cast<const EvaluatorFailure*>(&x) != nullptr; }},
  };
  for (const auto& row : table)
    if (row.match(e)) {
      type = row.name;
      return row.code;
    }
  type = "error";
  return 2;
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + opt.out_path + "'");
  out << text;
}

int run(const Options& opt) {
  if (opt.format != "json" && opt.format != "csv")
    throw UsageError("--format must be json or csv");
  const auto spec = load_spec(opt.spec_path);
  const double tol = opt.tol_set ? opt.tol : spec.tolerance;
  if (tol <= 0.0) throw UsageError("tolerance must be positive");
  const std::vector<double> grid =
      opt.grid_text.empty() ? std::vector<double>{} : parse_grid(opt.grid_text);

  CommandResult result;
  if (opt.verb == "omega") {
    result = cmd_omega(spec, opt, grid);
  } else if (opt.verb == "basis") {
    result = cmd_basis(spec, opt, grid);
  } else if (opt.verb == "interp") {
    result = cmd_interp(spec, opt, grid);
  } else if (opt.verb == "verify") {
    result = cmd_verify(spec, opt, tol);
  } else {
    result = cmd_green(spec, opt, tol, grid);
  }
  write_output(opt, result.text);
  if (result.exit_code != 0) emit_error(result.exit_code, result.fail_type, result.fail_message);
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel interpolation with exact integral remainders"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  auto attach = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec_path, "JSON problem specification file");
    sub->add_option("--out", opt.out_path, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "output format: json or csv");
    sub->add_option("--tol", opt.tol, "quadrature/verification tolerance override")
        ->each([&](const std::string&) { opt.tol_set = true; });
    sub->add_option("--grid", opt.grid_text, "evaluation grid start:stop:count");
  };
  attach(app.add_subcommand("omega", "characteristic kernel solution"));
  attach(app.add_subcommand("basis", "cardinal interpolation basis"));
  attach(app.add_subcommand("interp", "interpolate data or a catalog function"));
  attach(app.add_subcommand("verify", "check the reproduction identity with remainders"));
  attach(app.add_subcommand("green", "piecewise kernel form for the polynomial case"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    emit_error(1, "usage", e.what());
    return 1;
  }
  opt.verb = app.get_subcommands().front()->get_name();

  try {
    return run(opt);
  } catch (const UsageError& e) {
    emit_error(1, "usage", e.what());
    return 1;
  } catch (const expinterp::Error& e) {
    std::string type;
    const int code = classify(e, type);
    emit_error(code, type, e.what());
    return code;
  } catch (const std::exception& e) {
    emit_error(1, "internal", e.what());
    return 1;
  }
}
